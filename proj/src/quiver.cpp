#include "tautilt/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tautilt {

bool Quiver::path_composable(const Path& p) const {
  if (p.empty()) return false;
  for (int a : p)
    if (a < 0 || a >= static_cast<int>(arrows.size())) return false;
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (arrows[p[k]].dst != arrows[p[k + 1]].src) return false;
  return true;
}

std::vector<std::vector<int>> Quiver::arrows_from() const {
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    out[arrows[a].src].push_back(a);
  return out;
}

std::vector<std::vector<int>> Quiver::arrows_into() const {
  std::vector<std::vector<int>> in(n);
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    in[arrows[a].dst].push_back(a);
  return in;
}

std::optional<std::vector<int>> Quiver::topo_order() const {
  std::vector<int> indeg(n, 0);
  for (const Arrow& a : arrows) ++indeg[a.dst];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  auto from = arrows_from();
  std::vector<int> order;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    for (int a : from[v])
      if (--indeg[arrows[a].dst] == 0) queue.push_back(arrows[a].dst);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool Quiver::has_loop() const {
  for (const Arrow& a : arrows)
    if (a.src == a.dst) return true;
  return false;
}

std::vector<std::vector<int>> Quiver::undirected_components() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const Arrow& a : arrows) {
    adj[a.src].push_back(a.dst);
    adj[a.dst].push_back(a.src);
  }
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

bool Quiver::is_connected() const {
  return n <= 1 || undirected_components().size() == 1;
}

bool Quiver::path_exists(int i, int j) const {
  if (i == j) return true;
  auto from = arrows_from();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{i};
  seen[i] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : from[v]) {
      int w = arrows[a].dst;
      if (w == j) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

void BoundQuiver::validate() const {
  if (q.n <= 0) throw input_error("quiver needs at least one vertex");
  for (const Arrow& a : q.arrows) {
    if (a.src < 0 || a.src >= q.n || a.dst < 0 || a.dst >= q.n)
      throw input_error("arrow endpoint out of range");
    if (a.src == a.dst) throw input_error("loops are not supported");
  }
  if (q.arrow_ids.size() != q.arrows.size())
    throw input_error("arrow id table out of sync");
  if (!q.is_acyclic())
    throw input_error("quiver has an oriented cycle; only triangular quivers are supported");
  for (const Relation& r : rels) {
    if (r.terms.empty()) throw input_error("empty relation");
    int src = -1, dst = -1;
    for (const auto& [c, p] : r.terms) {
      if (c == 0) throw input_error("zero coefficient in relation");
      if (p.size() < 2) throw input_error("relation path shorter than 2 arrows");
      if (!q.path_composable(p)) throw input_error("relation path does not compose");
      int s = q.path_src(p), t = q.path_dst(p);
      if (src < 0) {
        src = s;
        dst = t;
      } else if (s != src || t != dst) {
        throw input_error("relation terms are not parallel");
      }
    }
  }
}

// ---------------------------------------------------------------------------

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
int ShiftedPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw input_error("empty entry in partition '" + text + "'");
    size_t caret = item.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(item));
      } else {
        int part = std::stoi(item.substr(0, caret));
        int rep = std::stoi(item.substr(caret + 1));
        if (rep < 1) throw input_error("exponent must be >= 1 in '" + text + "'");
        for (int k = 0; k < rep; ++k) parts.push_back(part);
      }
    } catch (const std::logic_error&) {
      throw input_error("cannot parse partition entry '" + item + "'");
    }
  }
  if (parts.empty()) throw input_error("empty partition");
  for (int p : parts)
    if (p < 1) throw input_error("partition parts must be positive");
  return parts;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Partition la{parse_parts(text)};
  for (size_t i = 0; i + 1 < la.parts.size(); ++i)
    if (la.parts[i] < la.parts[i + 1])
      throw input_error("partition parts must be non-increasing: '" + text + "'");
  return la;
}

ShiftedPartition parse_shifted_partition(const std::string& text) {
  ShiftedPartition la{parse_parts(text)};
  for (size_t i = 0; i + 1 < la.parts.size(); ++i)
    if (la.parts[i] <= la.parts[i + 1])
      throw input_error("shifted partition parts must be strictly decreasing: '" + text + "'");
  return la;
}

std::string format_parts(const std::vector<int>& parts) {
  std::string out;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Partition transpose_partition(const Partition& la) {
  Partition out;
  int height = static_cast<int>(la.parts.size());
  for (int col = 1; col <= la.parts[0]; ++col) {
    int cnt = 0;
    for (int r = 0; r < height; ++r)
      if (la.parts[r] >= col) ++cnt;
    out.parts.push_back(cnt);
  }
  return out;
}

bool shifted_contains(const ShiftedPartition& mu, const ShiftedPartition& la) {
  if (la.parts.size() > mu.parts.size()) return false;
  for (size_t i = 0; i < la.parts.size(); ++i)
    if (la.parts[i] > mu.parts[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// restriction of a bound quiver to a 0-based vertex subset that is already
// known (or about to be checked) convex; keep must be sorted and unique
BoundQuiver restrict_to(const BoundQuiver& bq, const std::vector<int>& keep) {
  std::vector<int> newid(bq.q.n, -1);
  for (size_t k = 0; k < keep.size(); ++k) newid[keep[k]] = static_cast<int>(k);

  BoundQuiver out;
  out.q.n = static_cast<int>(keep.size());
  std::vector<int> arrow_newid(bq.q.arrows.size(), -1);
  for (size_t a = 0; a < bq.q.arrows.size(); ++a) {
    const Arrow& ar = bq.q.arrows[a];
    if (newid[ar.src] >= 0 && newid[ar.dst] >= 0) {
      arrow_newid[a] = static_cast<int>(out.q.arrows.size());
      out.q.arrows.push_back({newid[ar.src], newid[ar.dst]});
      out.q.arrow_ids.push_back(bq.q.arrow_ids[a]);
    }
  }
  for (const Relation& r : bq.rels) {
    Relation nr;
    for (const auto& [c, p] : r.terms) {
      bool alive = true;
      // a path survives iff all its vertices survive
      if (newid[bq.q.path_src(p)] < 0) alive = false;
      for (int a : p)
        if (newid[bq.q.arrows[a].dst] < 0) alive = false;
      if (!alive) continue;
      Path np;
      for (int a : p) np.push_back(arrow_newid[a]);
      nr.terms.emplace_back(c, np);
    }
    if (!nr.terms.empty()) out.rels.push_back(nr);
  }
  return out;
}

}  // namespace

BoundQuiver convex_restriction(const BoundQuiver& bq, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw input_error("convex restriction needs a nonempty vertex set");
  for (int v : keep)
    if (v < 0 || v >= bq.q.n) throw input_error("restriction vertex out of range");

  std::vector<char> in_set(bq.q.n, 0);
  for (int v : keep) in_set[v] = 1;

  // Convexity: no directed path between kept vertices may leave the set.
  // DFS from each kept vertex through dropped vertices only; if we can walk
  // i -> (dropped ...) -> j with j kept, the set is not convex.
  auto from = bq.q.arrows_from();
  for (int i : keep) {
    // parent arrow trail to rebuild one witness path
    std::vector<int> via(bq.q.n, -2);  // -2 unvisited, -1 root
    std::vector<int> stack;
    via[i] = -1;
    stack.push_back(i);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : from[v]) {
        int w = bq.q.arrows[a].dst;
        if (via[w] != -2) continue;
        if (in_set[w]) {
          if (v == i) continue;  // direct arrow inside the set is fine
          // rebuild trail i -> ... -> v -> w
          std::vector<int> trail{w + 1};
          int cur = v;
          while (cur != -1) {
            trail.push_back(cur + 1);
            cur = via[cur] == -1 ? -1 : bq.q.arrows[via[cur]].src;
          }
          std::reverse(trail.begin(), trail.end());
          std::string msg = "vertex set is not convex: path";
          for (int t : trail) msg += " " + std::to_string(t);
          msg += " leaves the set";
          throw convexity_error(msg, trail);
        }
        // only continue the walk through dropped vertices
        via[w] = a;
        stack.push_back(w);
      }
    }
  }
  return restrict_to(bq, keep);
}

QuotientComponents split_components(const BoundQuiver& bq) {
  QuotientComponents out;
  for (const std::vector<int>& comp : bq.q.undirected_components()) {
    out.components.push_back(restrict_to(bq, comp));
    out.original_vertices.push_back(comp);
  }
  return out;
}

QuotientComponents vertex_quotient(const BoundQuiver& bq, int v) {
  if (v < 0 || v >= bq.q.n) throw input_error("quotient vertex out of range");
  std::vector<int> keep;
  for (int u = 0; u < bq.q.n; ++u)
    if (u != v) keep.push_back(u);
  if (keep.empty()) throw input_error("cannot delete the only vertex");
  BoundQuiver rest = restrict_to(bq, keep);
  QuotientComponents comps = split_components(rest);
  // report original ids, not ids in the intermediate quotient
  for (std::vector<int>& verts : comps.original_vertices)
    for (int& u : verts) u = keep[u];
  return comps;
}

}  // namespace tautilt
