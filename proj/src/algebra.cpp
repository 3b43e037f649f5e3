#include "tautilt/algebra.hpp"

#include <algorithm>

#include "tautilt/textio.hpp"

namespace tautilt {

namespace {

constexpr size_t kPathCap = 2'000'000;

// dense rational row over the paths of one slice
using Row = std::vector<Rat>;

// Reduced row echelon form over the rationals, pivoting in column order.
// Returns the pivot column of each surviving row.
std::vector<int> rref(std::vector<Row>& rows, int cols) {
  std::vector<int> pivot_cols;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = rows[r][c];
    for (int k = c; k < cols; ++k) rows[r][k] /= inv;
    for (size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][c] == 0) continue;
      Rat f = rows[other][c];
      for (int k = c; k < cols; ++k) rows[other][k] -= f * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivot_cols;
}

struct PathOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

const NfVector& Algebra::normal_form(int i, int j, const Path& p) const {
  const SliceBasis& sl = slice[i][j];
  auto it = sl.path_index.find(p);
  if (it == sl.path_index.end())
    throw std::logic_error("normal_form: path not found in slice");
  return sl.nf[it->second];
}

Algebra build_algebra(BoundQuiver bq) {
  bq.validate();
  Algebra A;
  A.bq = std::move(bq);
  const Quiver& q = A.bq.q;
  const int n = q.n;

  // enumerate all paths, bucketed by (src, dst)
  std::vector<std::vector<std::vector<Path>>> paths(
      n, std::vector<std::vector<Path>>(n));
  size_t total_paths = 0;
  auto from = q.arrows_from();
  for (int i = 0; i < n; ++i) {
    // DFS extending paths on the right; acyclicity keeps this finite
    std::vector<Path> stack;
    for (int a : from[i]) stack.push_back({a});
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      stack.pop_back();
      paths[i][q.path_dst(p)].push_back(p);
      if (++total_paths > kPathCap)
        throw resource_error("path count exceeds cap; algebra too large");
      for (int a : from[q.path_dst(p)]) {
        Path ext = p;
        ext.push_back(a);
        stack.push_back(std::move(ext));
      }
    }
  }

  A.slice.assign(n, std::vector<SliceBasis>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SliceBasis& sl = A.slice[i][j];
      sl.all_paths = std::move(paths[i][j]);
      if (i == j) sl.all_paths.insert(sl.all_paths.begin(), Path{});
      std::sort(sl.all_paths.begin(), sl.all_paths.end(), PathOrder{});
      for (size_t k = 0; k < sl.all_paths.size(); ++k)
        sl.path_index[sl.all_paths[k]] = static_cast<int>(k);
    }
  }

  // Degreewise slice of the two-sided ideal: e_i I e_j is spanned by
  // u * g * v over generators g and paths u: i -> src(g), v: dst(g) -> j
  // (u, v possibly trivial).  Reduce each slice by RREF; pivot-free paths
  // form the basis and pivot rows give the rewriting table.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SliceBasis& sl = A.slice[i][j];
      const int cols = static_cast<int>(sl.all_paths.size());
      if (cols == 0) continue;

      std::vector<Row> rows;
      for (const Relation& g : A.bq.rels) {
        int gs = q.path_src(g.terms[0].second);
        int gt = q.path_dst(g.terms[0].second);
        // candidate prefixes i -> gs and suffixes gt -> j
        std::vector<Path> pre, suf;
        for (const Path& u : A.slice[i][gs].all_paths) pre.push_back(u);
        for (const Path& v : A.slice[gt][j].all_paths) suf.push_back(v);
        for (const Path& u : pre) {
          for (const Path& v : suf) {
            Row row(cols, Rat(0));
            for (const auto& [c, mid] : g.terms) {
              Path w = u;
              w.insert(w.end(), mid.begin(), mid.end());
              w.insert(w.end(), v.begin(), v.end());
              row[sl.path_index.at(w)] += c;
            }
            bool nonzero = false;
            for (const Rat& x : row)
              if (x != 0) {
                nonzero = true;
                break;
              }
            if (nonzero) rows.push_back(std::move(row));
          }
        }
      }

      std::vector<int> pivots = rref(rows, cols);
      std::vector<char> is_pivot(cols, 0);
      for (int c : pivots) is_pivot[c] = 1;
      std::vector<int> basis_pos(cols, -1);
      for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
          basis_pos[c] = static_cast<int>(sl.basis.size());
          sl.basis.push_back(c);
        }

      sl.nf.assign(cols, {});
      for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) sl.nf[c] = {{basis_pos[c], Rat(1)}};
      for (size_t r = 0; r < pivots.size(); ++r) {
        NfVector v;
        for (int c = 0; c < cols; ++c)
          if (!is_pivot[c] && rows[r][c] != 0)
            v.emplace_back(basis_pos[c], -rows[r][c]);
        sl.nf[pivots[r]] = std::move(v);
      }
      A.dim += sl.dim();
    }
  }

  A.canonical = emit_quiver_text(A.bq);
  return A;
}

}  // namespace tautilt
