#include "tautilt/tauenum.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>

namespace tautilt {

ModuleRef ModuleRegistry::get_or_insert(Rep&& cand, std::vector<int>&& g,
                                        bool paranoid) {
  auto it = by_g.find(g);
  if (it != by_g.end()) {
    if (it->second->rep.dim != cand.dim)
      throw certification_error(
          "two modules with the same g-vector but different dimension vectors");
    if (paranoid && !is_isomorphic(it->second->rep, cand))
      throw certification_error(
          "g-vector collision: non-isomorphic modules share a g-vector");
    return it->second;
  }
  store.push_back(RegisteredModule{std::move(cand), g});
  ModuleRef ref = &store.back();
  by_g.emplace(std::move(g), ref);
  return ref;
}

const std::vector<ModMap>& ModuleRegistry::homs(ModuleRef from, ModuleRef to) {
  std::pair<ModuleRef, ModuleRef> key{from, to};
  {
    std::shared_lock lk(cache_mu);
    auto it = hom_cache.find(key);
    if (it != hom_cache.end()) return it->second;
  }
  std::vector<ModMap> h = hom_basis(from->rep, to->rep);
  std::unique_lock lk(cache_mu);
  return hom_cache.emplace(key, std::move(h)).first->second;
}

const Rep& ModuleRegistry::tau(ModuleRef m) {
  {
    std::shared_lock lk(cache_mu);
    auto it = tau_cache.find(m);
    if (it != tau_cache.end()) return it->second;
  }
  Rep t = ar_translate(m->rep);
  std::unique_lock lk(cache_mu);
  return tau_cache.emplace(m, std::move(t)).first->second;
}

namespace {

struct Slot {
  int node;
  int dir;
};

struct SlotOutcome {
  bool descends = false;
  std::vector<ModuleRef> keep;  // the untouched summands
  std::vector<Rep> fresh;       // newly appearing summand, if any
  std::vector<std::vector<int>> fresh_g;
  std::exception_ptr error;
};

// cokernel of the universal left approximation of X into add of the other
// summands; the minimal approximation's cokernel differs from it only by
// summands already present, which the caller filters out by g-vector
Rep approximation_cokernel(const Algebra& A, uint64_t p, ModuleRef Xr,
                           const std::vector<ModuleRef>& rest,
                           ModuleRegistry& reg) {
  const Fp F{p};
  const Rep& X = Xr->rep;
  std::vector<const ModMap*> maps;
  std::vector<ModuleRef> blocks;
  for (ModuleRef N : rest)
    for (const ModMap& h : reg.homs(Xr, N)) {
      maps.push_back(&h);
      blocks.push_back(N);
    }
  Rep E = zero_rep(A, p);
  for (ModuleRef N : blocks) E = direct_sum(E, N->rep);

  const size_t nv = X.dim.size();
  std::vector<Mat> f(nv);
  for (size_t v = 0; v < nv; ++v) {
    f[v] = Mat(X.dim[v], E.dim[v]);
    int off = 0;
    for (size_t k = 0; k < maps.size(); ++k) {
      const Mat& blk = maps[k]->f[v];
      for (int r = 0; r < blk.rows; ++r)
        for (int c = 0; c < blk.cols; ++c) f[v].at(r, off + c) = blk.at(r, c);
      off += blk.cols;
    }
  }

  // reduced basis of the image at each vertex; cokernel coordinates are the
  // non-pivot columns
  std::vector<Mat> img(nv);
  std::vector<std::vector<int>> piv(nv), nonpiv(nv);
  for (size_t v = 0; v < nv; ++v) {
    Mat tmp = f[v];
    piv[v] = rref(F, tmp);
    img[v] = Mat(static_cast<int>(piv[v].size()), E.dim[v]);
    for (int r = 0; r < img[v].rows; ++r)
      for (int c = 0; c < E.dim[v]; ++c) img[v].at(r, c) = tmp.at(r, c);
    std::vector<char> is_piv(E.dim[v], 0);
    for (int c : piv[v]) is_piv[c] = 1;
    for (int c = 0; c < E.dim[v]; ++c)
      if (!is_piv[c]) nonpiv[v].push_back(c);
  }

  auto project = [&](size_t v, std::vector<uint64_t> w) {
    for (size_t t = 0; t < piv[v].size(); ++t) {
      uint64_t c = w[piv[v][t]];
      if (!c) continue;
      for (int y = 0; y < E.dim[v]; ++y)
        w[y] = F.sub(w[y], F.mul(c, img[v].at(static_cast<int>(t), y)));
    }
    std::vector<uint64_t> out(nonpiv[v].size());
    for (size_t i = 0; i < nonpiv[v].size(); ++i) out[i] = w[nonpiv[v][i]];
    return out;
  };

  Rep C;
  C.A = &A;
  C.p = p;
  C.dim.resize(nv);
  for (size_t v = 0; v < nv; ++v) C.dim[v] = static_cast<int>(nonpiv[v].size());
  for (size_t a = 0; a < A.bq.q.arrows.size(); ++a) {
    size_t i = A.bq.q.arrows[a].src, j = A.bq.q.arrows[a].dst;
    Mat m(C.dim[i], C.dim[j]);
    for (int r = 0; r < C.dim[i]; ++r) {
      int c0 = nonpiv[i][r];
      std::vector<uint64_t> row(E.dim[j]);
      for (int y = 0; y < E.dim[j]; ++y) row[y] = E.mat[a].at(c0, y);
      std::vector<uint64_t> pr = project(j, std::move(row));
      for (int y = 0; y < C.dim[j]; ++y) m.at(r, y) = pr[y];
    }
    C.mat.push_back(std::move(m));
  }
  return C;
}

SlotOutcome expand_slot(const Algebra& A, const EnumOptions& opts,
                        ModuleRegistry& reg, const EnumNode& node, int dir) {
  SlotOutcome out;
  const Fp F{opts.p};
  ModuleRef X = node.summands[dir];
  std::vector<ModuleRef> rest;
  for (size_t i = 0; i < node.summands.size(); ++i)
    if (static_cast<int>(i) != dir) rest.push_back(node.summands[i]);

  // mutation descends exactly when X is not a quotient of a sum of copies of
  // the others
  bool in_fac = true;
  for (size_t v = 0; v < X->rep.dim.size() && in_fac; ++v) {
    if (X->rep.dim[v] == 0) continue;
    Mat stacked(0, X->rep.dim[v]);
    for (ModuleRef N : rest)
      for (const ModMap& h : reg.homs(N, X)) stacked = vstack(stacked, h.f[v]);
    if (rank(F, std::move(stacked)) < X->rep.dim[v]) in_fac = false;
  }
  if (in_fac) return out;

  out.descends = true;
  out.keep = rest;
  Rep coker = approximation_cokernel(A, opts.p, X, rest, reg);
  if (!coker.is_zero()) {
    std::set<std::vector<int>> known;
    for (ModuleRef N : rest) known.insert(N->g);
    auto pieces = decompose(coker);
    for (auto& [piece, mult] : pieces) {
      std::vector<int> g = g_vector(piece);
      if (known.count(g)) continue;
      if (mult != 1)
        throw certification_error("fresh mutation summand with multiplicity > 1");
      out.fresh.push_back(std::move(piece));
      out.fresh_g.push_back(std::move(g));
    }
    if (out.fresh.size() > 1)
      throw certification_error("mutation produced more than one fresh summand");
  }
  return out;
}

std::vector<std::vector<int>> node_key(const std::vector<ModuleRef>& summands) {
  std::vector<std::vector<int>> key;
  for (ModuleRef s : summands) key.push_back(s->g);
  return key;
}

// intern the fresh summand, sort by g, and derive the complement
EnumNode assemble_child(int n, ModuleRegistry& reg, SlotOutcome&& o,
                        bool paranoid, int layer) {
  std::vector<ModuleRef> child = std::move(o.keep);
  for (size_t k = 0; k < o.fresh.size(); ++k)
    child.push_back(reg.get_or_insert(std::move(o.fresh[k]),
                                      std::move(o.fresh_g[k]), paranoid));
  std::sort(child.begin(), child.end(),
            [](ModuleRef a, ModuleRef b) { return a->g < b->g; });
  std::vector<char> supp(n, 0);
  for (ModuleRef m : child)
    for (int v = 0; v < n; ++v)
      if (m->rep.dim[v] > 0) supp[v] = 1;
  std::vector<int> complement;
  for (int v = 0; v < n; ++v)
    if (!supp[v]) complement.push_back(v);
  if (child.size() + complement.size() != static_cast<size_t>(n))
    throw std::logic_error("mutated pair has the wrong number of summands");
  return EnumNode{std::move(child), std::move(complement), layer};
}

}  // namespace

EnumNode left_mutation(const Algebra& A, ModuleRegistry& reg,
                       const EnumNode& node, int direction,
                       const EnumOptions& opts) {
  if (direction < 0 || direction >= static_cast<int>(node.summands.size()))
    throw input_error("mutation direction out of range");
  SlotOutcome o = expand_slot(A, opts, reg, node, direction);
  if (!o.descends) throw input_error("not a descent direction");
  return assemble_child(A.n(), reg, std::move(o), opts.paranoid_iso,
                        node.layer + 1);
}

EnumResult enumerate_support_tau_tilting(const Algebra& A, const EnumOptions& opts) {
  if (!is_prime(opts.p)) throw input_error("field size must be prime");
  EnumResult R;
  R.n = A.n();
  R.registry = std::make_shared<ModuleRegistry>();
  ModuleRegistry& reg = *R.registry;

  std::vector<ModuleRef> root;
  for (int i = 0; i < A.n(); ++i) {
    Rep P = projective_rep(A, opts.p, i);
    std::vector<int> g = g_vector(P);
    root.push_back(reg.get_or_insert(std::move(P), std::move(g), opts.paranoid_iso));
  }
  std::sort(root.begin(), root.end(),
            [](ModuleRef a, ModuleRef b) { return a->g < b->g; });

  std::map<std::vector<std::vector<int>>, int> index_of;
  R.nodes.push_back(EnumNode{root, {}, 0});
  index_of.emplace(node_key(root), 0);

  std::vector<int> frontier{0};
  while (!frontier.empty() && R.complete) {
    std::vector<Slot> slots;
    for (int id : frontier)
      for (int d = 0; d < static_cast<int>(R.nodes[id].summands.size()); ++d)
        slots.push_back(Slot{id, d});

    std::vector<SlotOutcome> outs(slots.size());
#if defined(TAUTILT_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (!opts.serial)
#endif
    for (long long s = 0; s < static_cast<long long>(slots.size()); ++s) {
      try {
        outs[s] = expand_slot(A, opts, reg, R.nodes[slots[s].node], slots[s].dir);
      } catch (...) {
        outs[s].error = std::current_exception();
      }
    }

    // serial merge in slot order: registry growth and node numbering are
    // independent of the worker count
    std::vector<int> next;
    for (size_t s = 0; s < slots.size(); ++s) {
      SlotOutcome& o = outs[s];
      if (o.error) std::rethrow_exception(o.error);
      if (!o.descends) continue;

      EnumNode child = assemble_child(R.n, reg, std::move(o),
                                      opts.paranoid_iso,
                                      R.nodes[slots[s].node].layer + 1);
      auto key = node_key(child.summands);

      auto it = index_of.find(key);
      int child_id;
      if (it != index_of.end()) {
        child_id = it->second;
      } else {
        if (static_cast<long long>(R.nodes.size()) >= opts.node_cap) {
          R.complete = false;
          break;
        }
        child_id = static_cast<int>(R.nodes.size());
        R.nodes.push_back(std::move(child));
        index_of.emplace(std::move(key), child_id);
        next.push_back(child_id);
      }
      R.edges.push_back(HasseEdge{slots[s].node, slots[s].dir, child_id});
    }
    frontier = std::move(next);
  }

  if (opts.validate_nodes)
    for (size_t i = 0; i < R.nodes.size(); ++i)
      validate_node(R, static_cast<int>(i));
  return R;
}

std::vector<long long> counts_by_rank(const EnumResult& r) {
  std::vector<long long> a(r.n + 1, 0);
  for (const EnumNode& nd : r.nodes) ++a[nd.summands.size()];
  return a;
}

void validate_node(const EnumResult& r, int node_index) {
  const EnumNode& nd = r.nodes.at(node_index);
  ModuleRegistry& reg = *r.registry;
  if (nd.summands.size() + nd.complement.size() != static_cast<size_t>(r.n))
    throw std::logic_error("pair size is not the number of vertices");
  for (size_t i = 0; i + 1 < nd.summands.size(); ++i)
    if (!(nd.summands[i]->g < nd.summands[i + 1]->g))
      throw std::logic_error("summands not strictly sorted by g-vector");
  std::vector<char> supp(r.n, 0);
  for (ModuleRef m : nd.summands)
    for (int v = 0; v < r.n; ++v)
      if (m->rep.dim[v] > 0) supp[v] = 1;
  std::vector<char> comp(r.n, 0);
  for (int c : nd.complement) comp[c] = 1;
  for (int v = 0; v < r.n; ++v) {
    if (supp[v] && comp[v])
      throw std::logic_error("complement vertex inside the support");
    if (!supp[v] && !comp[v])
      throw std::logic_error("vertex missing from both support and complement");
  }
  for (ModuleRef mi : nd.summands)
    for (ModuleRef mj : nd.summands)
      if (hom_dim(mi->rep, reg.tau(mj)) != 0)
        throw std::logic_error("summand pair is not rigid");
  for (ModuleRef m : nd.summands)
    if (!is_indecomposable(m->rep))
      throw std::logic_error("registered summand is decomposable");
}

}  // namespace tautilt
