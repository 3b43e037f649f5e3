#pragma once

// Independent oracles, written before the library internals they guard and
// kept deliberately different from them: breadth-first path listing instead
// of depth-first, modular Gaussian ranks at two fixed primes instead of
// exact rational reduction, and closed-form interval combinatorics for the
// short line.  Tests compare library output against these, and these
// against frozen literal values.

#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tautilt/quiver.hpp"

namespace oracle {

// every path src -> dst, breadth-first by length
inline std::map<std::pair<int, int>, std::vector<tautilt::Path>> all_paths(
    const tautilt::Quiver& q) {
  std::map<std::pair<int, int>, std::vector<tautilt::Path>> out;
  for (int v = 0; v < q.n; ++v) out[{v, v}].push_back({});
  std::queue<tautilt::Path> work;
  for (size_t a = 0; a < q.arrows.size(); ++a) work.push({static_cast<int>(a)});
  while (!work.empty()) {
    tautilt::Path p = work.front();
    work.pop();
    int s = q.arrows[p.front()].src, t = q.arrows[p.back()].dst;
    out[{s, t}].push_back(p);
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].src == t) {
        tautilt::Path ext = p;
        ext.push_back(static_cast<int>(a));
        work.push(ext);
      }
  }
  return out;
}

inline int rank_mod(std::vector<std::vector<int64_t>> m, int64_t p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  auto norm = [&](int64_t x) { return ((x % p) + p) % p; };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (norm(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    // scale the pivot row to 1 via Fermat inverse
    int64_t inv = 1, base = norm(m[r][c]), e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = c; j < cols; ++j) m[r][j] = norm(m[r][j]) * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int64_t f = norm(m[i][c]);
      if (!f) continue;
      for (int j = c; j < cols; ++j)
        m[i][j] = norm(m[i][j] - f * m[r][j] % p);
    }
    ++r;
  }
  return r;
}

// dimension of e_i A e_j: paths minus the rank of the relation-ideal slice,
// the slice being spanned by prefix * generator * suffix products
inline long long slice_dimension(const tautilt::BoundQuiver& bq, int i, int j) {
  auto paths = all_paths(bq.q);
  const std::vector<tautilt::Path>& pij = paths[{i, j}];
  std::map<tautilt::Path, int> index;
  for (size_t k = 0; k < pij.size(); ++k) index[pij[k]] = static_cast<int>(k);

  std::vector<std::vector<int64_t>> rows;
  for (const tautilt::Relation& rel : bq.rels) {
    int gs = bq.q.path_src(rel.terms[0].second);
    int gt = bq.q.path_dst(rel.terms[0].second);
    for (const tautilt::Path& u : paths[{i, gs}])
      for (const tautilt::Path& v : paths[{gt, j}]) {
        std::vector<int64_t> row(pij.size(), 0);
        for (const auto& [coeff, mid] : rel.terms) {
          tautilt::Path full = u;
          full.insert(full.end(), mid.begin(), mid.end());
          full.insert(full.end(), v.begin(), v.end());
          // relation coefficients in the families are small integers
          if (denominator(coeff) != 1)
            throw std::logic_error("oracle expects integer coefficients");
          row[index.at(full)] +=
              static_cast<int64_t>(numerator(coeff).convert_to<long long>());
        }
        rows.push_back(std::move(row));
      }
  }
  long long r1 = rank_mod(rows, 1000003);
  long long r2 = rank_mod(rows, 998244353);
  if (r1 != r2) throw std::logic_error("oracle rank differs between primes");
  return static_cast<long long>(pij.size()) - r1;
}

inline long long algebra_dimension(const tautilt::BoundQuiver& bq) {
  long long total = 0;
  for (int i = 0; i < bq.q.n; ++i)
    for (int j = 0; j < bq.q.n; ++j) total += slice_dimension(bq, i, j);
  return total;
}

// the unit form straight from its definition
inline long long tits_value(const tautilt::BoundQuiver& bq,
                            const std::vector<long long>& v) {
  long long q = 0;
  for (int i = 0; i < bq.q.n; ++i) q += v[i] * v[i];
  for (const tautilt::Arrow& a : bq.q.arrows) q -= v[a.src] * v[a.dst];
  for (const tautilt::Relation& rel : bq.rels) {
    int s = bq.q.path_src(rel.terms[0].second);
    int t = bq.q.path_dst(rel.terms[0].second);
    q += v[s] * v[t];
  }
  return q;
}

// ---------------------------------------------------------------------------
// interval combinatorics over the equioriented line 1 -> 2 -> ... -> m

// hom space dimension between interval modules [a,b] and [c,d] (all 1-based)
inline int interval_hom(int a, int b, int c, int d) {
  return (c <= a && a <= d && d <= b) ? 1 : 0;
}

// support pair counts for the line with 3 vertices by brute force over
// interval subsets: a subset is counted when it is pairwise rigid and its
// size equals the size of its support
inline std::vector<long long> line3_counts() {
  const int m = 3;
  struct Interval {
    int a, b;
  };
  std::vector<Interval> mods;
  for (int a = 1; a <= m; ++a)
    for (int b = a; b <= m; ++b) mods.push_back({a, b});

  // hom(X, tau Y); tau shifts an interval right, projectives [*, m] drop out
  auto hom_tau = [&](const Interval& x, const Interval& y) {
    if (y.b == m) return 0;
    return interval_hom(x.a, x.b, y.a + 1, y.b + 1);
  };

  std::vector<long long> counts(m + 1, 0);
  for (unsigned mask = 0; mask < (1u << mods.size()); ++mask) {
    std::vector<int> chosen;
    for (size_t k = 0; k < mods.size(); ++k)
      if (mask & (1u << k)) chosen.push_back(static_cast<int>(k));
    bool rigid = true;
    for (int x : chosen)
      for (int y : chosen)
        if (hom_tau(mods[x], mods[y]) != 0) rigid = false;
    if (!rigid) continue;
    std::vector<char> supp(m + 1, 0);
    int width = 0;
    for (int x : chosen)
      for (int v = mods[x].a; v <= mods[x].b; ++v)
        if (!supp[v]) {
          supp[v] = 1;
          ++width;
        }
    if (static_cast<int>(chosen.size()) == width) ++counts[chosen.size()];
  }
  return counts;
}

}  // namespace oracle
