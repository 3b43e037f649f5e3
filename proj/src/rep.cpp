#include "tautilt/rep.hpp"

#include <algorithm>
#include <numeric>

namespace tautilt {

namespace {

Fp field_of(const Rep& M) { return Fp(M.p); }

// unknown layout for hom systems: all entries of the block at vertex 0, then
// vertex 1, ... row-major inside a block
struct HomLayout {
  std::vector<int> offset;
  int total = 0;
  HomLayout(const Rep& M, const Rep& N) {
    offset.resize(M.dim.size());
    for (size_t v = 0; v < M.dim.size(); ++v) {
      offset[v] = total;
      total += M.dim[v] * N.dim[v];
    }
  }
  int index(int v, int r, int c, const Rep& N) const {
    return offset[v] + r * N.dim[v] + c;
  }
};

Mat hom_system(const Rep& M, const Rep& N, const HomLayout& L) {
  const Fp F = field_of(M);
  int eq = 0;
  const auto& arrows = M.A->bq.q.arrows;
  for (size_t a = 0; a < arrows.size(); ++a)
    eq += M.dim[arrows[a].src] * N.dim[arrows[a].dst];
  Mat S(eq, L.total);
  int row = 0;
  // intertwining: for a: i -> j,  M_a * F_j = F_i * N_a
  for (size_t a = 0; a < arrows.size(); ++a) {
    int i = arrows[a].src, j = arrows[a].dst;
    for (int r = 0; r < M.dim[i]; ++r) {
      for (int c = 0; c < N.dim[j]; ++c) {
        for (int k = 0; k < M.dim[j]; ++k)
          if (M.mat[a].at(r, k))
            S.at(row, L.index(j, k, c, N)) =
                F.add(S.at(row, L.index(j, k, c, N)), M.mat[a].at(r, k));
        for (int l = 0; l < N.dim[i]; ++l)
          if (N.mat[a].at(l, c))
            S.at(row, L.index(i, r, l, N)) =
                F.sub(S.at(row, L.index(i, r, l, N)), N.mat[a].at(l, c));
        ++row;
      }
    }
  }
  return S;
}

}  // namespace

int Rep::total_dim() const { return std::accumulate(dim.begin(), dim.end(), 0); }

std::vector<int> Rep::support() const {
  std::vector<int> s;
  for (size_t v = 0; v < dim.size(); ++v)
    if (dim[v] > 0) s.push_back(static_cast<int>(v));
  return s;
}

Mat Rep::path_action(const Path& path) const {
  const Fp F = field_of(*this);
  int src = A->bq.q.path_src(path);
  Mat acc = Mat::identity(dim[src]);
  for (int a : path) acc = mat_mul(F, acc, mat[a]);
  return acc;
}

bool Rep::satisfies_relations() const {
  const Fp F = field_of(*this);
  for (const Relation& r : A->bq.rels) {
    int src = A->bq.q.path_src(r.terms[0].second);
    int dst = A->bq.q.path_dst(r.terms[0].second);
    Mat acc(dim[src], dim[dst]);
    for (const auto& [c, p] : r.terms)
      acc = mat_add(F, acc, mat_scale(F, F.from_rat(c), path_action(p)));
    for (uint64_t x : acc.a)
      if (x) return false;
  }
  return true;
}

uint64_t Rep::content_hash() const {
  Fnv64 h;
  h.feed_str(A->canonical_text());
  h.feed_u64(p);
  for (int d : dim) h.feed_u64(static_cast<uint64_t>(d));
  for (const Mat& m : mat)
    for (uint64_t x : m.a) h.feed_u64(x);
  return h.h;
}

Rep zero_rep(const Algebra& A, uint64_t p) {
  Rep M;
  M.A = &A;
  M.p = p;
  M.dim.assign(A.n(), 0);
  M.mat.assign(A.bq.q.arrows.size(), Mat(0, 0));
  return M;
}

Rep simple_rep(const Algebra& A, uint64_t p, int vertex) {
  Rep M = zero_rep(A, p);
  M.dim[vertex] = 1;
  for (size_t a = 0; a < A.bq.q.arrows.size(); ++a)
    M.mat[a] = Mat(M.dim[A.bq.q.arrows[a].src], M.dim[A.bq.q.arrows[a].dst]);
  return M;
}

Rep projective_rep(const Algebra& A, uint64_t p, int vertex) {
  const Fp F{p};
  Rep M;
  M.A = &A;
  M.p = p;
  M.dim.resize(A.n());
  for (int j = 0; j < A.n(); ++j) M.dim[j] = A.at(vertex, j).dim();
  M.mat.resize(A.bq.q.arrows.size());
  for (size_t a = 0; a < A.bq.q.arrows.size(); ++a) {
    int j = A.bq.q.arrows[a].src, k = A.bq.q.arrows[a].dst;
    const SliceBasis& sj = A.at(vertex, j);
    Mat m(M.dim[j], M.dim[k]);
    for (int r = 0; r < M.dim[j]; ++r) {
      Path path = sj.all_paths[sj.basis[r]];
      path.push_back(static_cast<int>(a));
      for (const auto& [pos, coeff] : A.normal_form(vertex, k, path))
        m.at(r, pos) = F.from_rat(coeff);
    }
    M.mat[a] = std::move(m);
  }
  return M;
}

Rep direct_sum(const Rep& M, const Rep& N) {
  if (M.A != N.A || M.p != N.p) throw std::logic_error("direct_sum: mixed algebras");
  Rep S;
  S.A = M.A;
  S.p = M.p;
  S.dim.resize(M.dim.size());
  for (size_t v = 0; v < M.dim.size(); ++v) S.dim[v] = M.dim[v] + N.dim[v];
  for (size_t a = 0; a < M.mat.size(); ++a) {
    int i = M.A->bq.q.arrows[a].src, j = M.A->bq.q.arrows[a].dst;
    Mat m(S.dim[i], S.dim[j]);
    for (int r = 0; r < M.dim[i]; ++r)
      for (int c = 0; c < M.dim[j]; ++c) m.at(r, c) = M.mat[a].at(r, c);
    for (int r = 0; r < N.dim[i]; ++r)
      for (int c = 0; c < N.dim[j]; ++c)
        m.at(M.dim[i] + r, M.dim[j] + c) = N.mat[a].at(r, c);
    S.mat.push_back(std::move(m));
  }
  return S;
}

std::vector<ModMap> hom_basis(const Rep& M, const Rep& N) {
  if (M.A != N.A || M.p != N.p) throw std::logic_error("hom_basis: mixed algebras");
  const Fp F = field_of(M);
  HomLayout L(M, N);
  if (L.total == 0) return {};
  Mat S = hom_system(M, N, L);
  Mat K = null_space_rows(F, std::move(S));
  std::vector<ModMap> out;
  for (int r = 0; r < K.rows; ++r) {
    ModMap h;
    for (size_t v = 0; v < M.dim.size(); ++v) {
      Mat block(M.dim[v], N.dim[v]);
      for (int i = 0; i < M.dim[v]; ++i)
        for (int j = 0; j < N.dim[v]; ++j)
          block.at(i, j) = K.at(r, L.index(static_cast<int>(v), i, j, N));
      h.f.push_back(std::move(block));
    }
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const Rep& M, const Rep& N) {
  if (M.A != N.A || M.p != N.p) throw std::logic_error("hom_dim: mixed algebras");
  const Fp F = field_of(M);
  HomLayout L(M, N);
  if (L.total == 0) return 0;
  Mat S = hom_system(M, N, L);
  return L.total - rank(F, std::move(S));
}

Rep cokernel(const Rep& M, const Rep& N, const ModMap& f) {
  if (M.A != N.A || M.p != N.p) throw std::logic_error("cokernel: mixed algebras");
  const Fp F = field_of(N);
  size_t nv = N.dim.size();
  // per vertex: RREF of the image rows, their pivot columns, and the
  // complement columns that coordinatize the quotient
  std::vector<Mat> img(nv);
  std::vector<std::vector<int>> pivs(nv), keep(nv);
  Rep C;
  C.A = N.A;
  C.p = N.p;
  C.dim.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    if (f.f[v].rows != M.dim[v] || f.f[v].cols != N.dim[v])
      throw std::logic_error("cokernel: map block shape mismatch");
    Mat R = f.f[v];
    pivs[v] = rref(F, R);
    img[v] = std::move(R);
    std::vector<char> is_piv(static_cast<size_t>(N.dim[v]), 0);
    for (int c : pivs[v]) is_piv[c] = 1;
    for (int c = 0; c < N.dim[v]; ++c)
      if (!is_piv[c]) keep[v].push_back(c);
    C.dim[v] = static_cast<int>(keep[v].size());
  }
  // residue of a row of N at vertex v in quotient coordinates
  auto project = [&](int v, std::vector<uint64_t> row) {
    for (size_t k = 0; k < pivs[v].size(); ++k) {
      uint64_t c = row[pivs[v][k]];
      if (!c) continue;
      for (int j = 0; j < N.dim[v]; ++j)
        row[j] = F.sub(row[j], F.mul(c, img[v].at(static_cast<int>(k), j)));
    }
    std::vector<uint64_t> out(keep[v].size());
    for (size_t j = 0; j < keep[v].size(); ++j) out[j] = row[keep[v][j]];
    return out;
  };
  for (size_t a = 0; a < N.mat.size(); ++a) {
    int i = N.A->bq.q.arrows[a].src, j = N.A->bq.q.arrows[a].dst;
    Mat block(C.dim[i], C.dim[j]);
    for (int r = 0; r < C.dim[i]; ++r) {
      std::vector<uint64_t> row(static_cast<size_t>(N.dim[j]), 0);
      for (int c = 0; c < N.dim[j]; ++c) row[c] = N.mat[a].at(keep[i][r], c);
      std::vector<uint64_t> res = project(j, std::move(row));
      for (int c = 0; c < C.dim[j]; ++c) block.at(r, c) = res[c];
    }
    C.mat.push_back(std::move(block));
  }
  return C;
}

// rows spanning a subspace of M at each vertex, closed under the action
namespace {

// the subrepresentation spanned by the given rows (already action-closed);
// basis[v] has full row rank
Rep subrep_from_rows(const Rep& M, const std::vector<Mat>& basis) {
  const Fp F = field_of(M);
  Rep S;
  S.A = M.A;
  S.p = M.p;
  S.dim.resize(M.dim.size());
  for (size_t v = 0; v < basis.size(); ++v) S.dim[v] = basis[v].rows;
  for (size_t a = 0; a < M.mat.size(); ++a) {
    int i = M.A->bq.q.arrows[a].src, j = M.A->bq.q.arrows[a].dst;
    Mat image = mat_mul(F, basis[i], M.mat[a]);  // rows land in span(basis[j])
    S.mat.push_back(solve_left(F, basis[j], image));
  }
  return S;
}

}  // namespace

RadicalTop radical_and_top(const Rep& M) {
  const Fp F = field_of(M);
  auto into = M.A->bq.q.arrows_into();
  std::vector<Mat> rad_rows(M.dim.size());
  RadicalTop out;
  out.top.resize(M.dim.size());
  for (size_t v = 0; v < M.dim.size(); ++v) {
    Mat stacked(0, M.dim[v]);
    for (int a : into[v]) stacked = vstack(stacked, M.mat[a]);
    rad_rows[v] = row_space_rows(F, std::move(stacked));
    out.top[v] = M.dim[v] - rad_rows[v].rows;
  }
  out.radical = subrep_from_rows(M, rad_rows);
  return out;
}

namespace {

// deterministic lifts of top M: at each vertex the standard basis vectors at
// the non-pivot columns of the radical's RREF
std::vector<std::vector<int>> top_lift_columns(const Rep& M) {
  const Fp F = field_of(M);
  auto into = M.A->bq.q.arrows_into();
  std::vector<std::vector<int>> lifts(M.dim.size());
  for (size_t v = 0; v < M.dim.size(); ++v) {
    Mat stacked(0, M.dim[v]);
    for (int a : into[v]) stacked = vstack(stacked, M.mat[a]);
    std::vector<int> pivots = rref(F, stacked);
    std::vector<char> is_pivot(M.dim[v], 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int c = 0; c < M.dim[v]; ++c)
      if (!is_pivot[c]) lifts[v].push_back(c);
  }
  return lifts;
}

struct Cover {
  std::vector<int> vertices;       // one entry per projective copy
  Rep p0;                          // their direct sum
  std::vector<Mat> pi;             // per vertex: p0.dim[v] x M.dim[v]
};

// projective cover of top(M) with its surjection onto M; lift rows are given
// in M coordinates per copy
Cover projective_cover(const Rep& M, const std::vector<int>& copy_vertices,
                       const std::vector<std::vector<uint64_t>>& copy_lifts) {
  const Fp F = field_of(M);
  const Algebra& A = *M.A;
  Cover cov;
  cov.vertices = copy_vertices;
  cov.p0 = zero_rep(A, M.p);
  for (int v : copy_vertices) cov.p0 = direct_sum(cov.p0, projective_rep(A, M.p, v));
  cov.pi.resize(A.n());
  for (int u = 0; u < A.n(); ++u) cov.pi[u] = Mat(cov.p0.dim[u], M.dim[u]);
  // copy c contributes, at vertex u, one row per basis path t_c -> u: the
  // lift vector transported along the path
  std::vector<int> row_offset(A.n(), 0);
  for (size_t c = 0; c < copy_vertices.size(); ++c) {
    int t = copy_vertices[c];
    for (int u = 0; u < A.n(); ++u) {
      const SliceBasis& sl = A.at(t, u);
      for (int r = 0; r < sl.dim(); ++r) {
        const Path& b = sl.all_paths[sl.basis[r]];
        // lift * action(b)
        std::vector<uint64_t> row(M.dim[u], 0);
        if (b.empty()) {
          row = copy_lifts[c];
        } else {
          Mat act = M.path_action(b);
          for (int x = 0; x < act.rows; ++x) {
            if (!copy_lifts[c][x]) continue;
            for (int y = 0; y < act.cols; ++y)
              row[y] = F.add(row[y], F.mul(copy_lifts[c][x], act.at(x, y)));
          }
        }
        for (int y = 0; y < M.dim[u]; ++y) cov.pi[u].at(row_offset[u] + r, y) = row[y];
      }
      row_offset[u] += sl.dim();
    }
  }
  return cov;
}

Cover cover_of_top(const Rep& M) {
  std::vector<std::vector<int>> lift_cols = top_lift_columns(M);
  std::vector<int> copy_vertices;
  std::vector<std::vector<uint64_t>> copy_lifts;
  for (size_t v = 0; v < lift_cols.size(); ++v)
    for (int c : lift_cols[v]) {
      copy_vertices.push_back(static_cast<int>(v));
      std::vector<uint64_t> e(M.dim[v], 0);
      e[c] = 1;
      copy_lifts.push_back(std::move(e));
    }
  return projective_cover(M, copy_vertices, copy_lifts);
}

}  // namespace

Presentation minimal_presentation(const Rep& M) {
  if (M.is_zero()) throw input_error("zero module has no presentation");
  const Fp F = field_of(M);
  const Algebra& A = *M.A;

  Cover c0 = cover_of_top(M);

  // kernel of pi as a subrepresentation of P0
  std::vector<Mat> ker_rows(A.n());
  for (int u = 0; u < A.n(); ++u)
    ker_rows[u] = null_space_rows(F, transpose(c0.pi[u]));
  Rep K = subrep_from_rows(c0.p0, ker_rows);

  Presentation pres;
  pres.p0 = c0.vertices;
  if (K.is_zero()) return pres;  // projective module

  // cover the top of K; embed the lifts into P0 coordinates
  std::vector<std::vector<int>> klift_cols = top_lift_columns(K);
  std::vector<int> p1_vertices;
  std::vector<std::vector<uint64_t>> p1_lifts_in_p0;
  for (size_t v = 0; v < klift_cols.size(); ++v)
    for (int c : klift_cols[v]) {
      p1_vertices.push_back(static_cast<int>(v));
      std::vector<uint64_t> row(c0.p0.dim[v], 0);
      for (int y = 0; y < c0.p0.dim[v]; ++y) row[y] = ker_rows[v].at(c, y);
      p1_lifts_in_p0.push_back(std::move(row));
    }
  pres.p1 = p1_vertices;

  // read off rho: the block of each lift over copy c's slice coordinates
  pres.rho.assign(pres.p0.size(), std::vector<std::vector<uint64_t>>(pres.p1.size()));
  for (size_t d = 0; d < pres.p1.size(); ++d) {
    int s = pres.p1[d];
    int off = 0;
    for (size_t c = 0; c < pres.p0.size(); ++c) {
      int len = A.at(pres.p0[c], s).dim();
      std::vector<uint64_t> block(len);
      for (int k = 0; k < len; ++k) block[k] = p1_lifts_in_p0[d][off + k];
      pres.rho[c][d] = std::move(block);
      off += len;
    }
  }
  return pres;
}

std::vector<int> g_vector(const Rep& M) {
  std::vector<int> g(M.dim.size(), 0);
  if (M.is_zero()) return g;
  Presentation pres = minimal_presentation(M);
  for (int v : pres.p0) ++g[v];
  for (int v : pres.p1) --g[v];
  return g;
}

Rep ar_translate(const Rep& M) {
  const Fp F = field_of(M);
  const Algebra& A = *M.A;
  if (M.is_zero()) return zero_rep(A, M.p);
  Presentation pres = minimal_presentation(M);
  if (pres.p1.empty()) return zero_rep(A, M.p);  // projective

  // W_k = sum_d e_k A e_{s_d} with s_d = p1[d]; V_k = sum_c e_k A e_{t_c};
  // B_k sends a basis path x: k -> t_c to the normal forms of x * rho[c][d].
  const int n = A.n();

  auto w_offsets = [&](int k) {
    std::vector<int> off(pres.p1.size() + 1, 0);
    for (size_t d = 0; d < pres.p1.size(); ++d)
      off[d + 1] = off[d] + A.at(k, pres.p1[d]).dim();
    return off;
  };
  auto v_offsets = [&](int k) {
    std::vector<int> off(pres.p0.size() + 1, 0);
    for (size_t c = 0; c < pres.p0.size(); ++c)
      off[c + 1] = off[c] + A.at(k, pres.p0[c]).dim();
    return off;
  };

  std::vector<Mat> R(n);  // functionals on W_k vanishing on the image, as rows
  std::vector<std::vector<int>> woff(n);
  for (int k = 0; k < n; ++k) {
    auto voff = v_offsets(k);
    woff[k] = w_offsets(k);
    Mat B(voff.back(), woff[k].back());
    for (size_t c = 0; c < pres.p0.size(); ++c) {
      int t = pres.p0[c];
      const SliceBasis& skt = A.at(k, t);
      for (int x = 0; x < skt.dim(); ++x) {
        const Path& px = skt.all_paths[skt.basis[x]];
        for (size_t d = 0; d < pres.p1.size(); ++d) {
          int s = pres.p1[d];
          const SliceBasis& sts = A.at(t, s);
          for (int r = 0; r < sts.dim(); ++r) {
            uint64_t coeff = pres.rho[c][d][r];
            if (!coeff) continue;
            Path w = px;
            const Path& mid = sts.all_paths[sts.basis[r]];
            w.insert(w.end(), mid.begin(), mid.end());
            for (const auto& [pos, rc] : A.normal_form(k, s, w)) {
              uint64_t val = F.mul(coeff, F.from_rat(rc));
              B.at(voff[c] + x, woff[k][d] + pos) =
                  F.add(B.at(voff[c] + x, woff[k][d] + pos), val);
            }
          }
        }
      }
    }
    R[k] = null_space_rows(F, std::move(B));
  }

  Rep T;
  T.A = &A;
  T.p = M.p;
  T.dim.resize(n);
  for (int k = 0; k < n; ++k) T.dim[k] = R[k].rows;
  for (size_t a = 0; a < A.bq.q.arrows.size(); ++a) {
    int i = A.bq.q.arrows[a].src, j = A.bq.q.arrows[a].dst;
    // left multiplication by the arrow: W_j -> W_i on basis paths
    Mat L(woff[j].back(), woff[i].back());
    for (size_t d = 0; d < pres.p1.size(); ++d) {
      int s = pres.p1[d];
      const SliceBasis& sjs = A.at(j, s);
      for (int r = 0; r < sjs.dim(); ++r) {
        Path w{static_cast<int>(a)};
        const Path& tail = sjs.all_paths[sjs.basis[r]];
        w.insert(w.end(), tail.begin(), tail.end());
        for (const auto& [pos, rc] : A.normal_form(i, s, w))
          L.at(woff[j][d] + r, woff[i][d] + pos) = F.from_rat(rc);
      }
    }
    // functional transport: rows R[i] * L^T must lie in span(R[j])
    Mat target = mat_mul(F, R[i], transpose(L));
    T.mat.push_back(solve_left(F, R[j], target));
  }
  return T;
}

bool fac_membership(const Rep& M, const Rep& N) {
  if (M.is_zero()) return true;
  const Fp F = field_of(M);
  std::vector<ModMap> homs = hom_basis(N, M);
  for (size_t v = 0; v < M.dim.size(); ++v) {
    if (M.dim[v] == 0) continue;
    Mat stacked(0, M.dim[v]);
    for (const ModMap& h : homs) stacked = vstack(stacked, h.f[v]);
    if (rank(F, std::move(stacked)) < M.dim[v]) return false;
  }
  return true;
}

bool is_tau_rigid_pair(const Rep& M, const Rep& N) {
  return hom_dim(M, ar_translate(N)) == 0 && hom_dim(N, ar_translate(M)) == 0;
}

// ---------------------------------------------------------------------------
// decomposition machinery

namespace {

// polynomials over Fp: coefficient vectors, lowest degree first, no trailing
// zeros (the zero polynomial is the empty vector)
using Poly = std::vector<uint64_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Fp& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

// remainder and quotient of a by monic-normalized b
void poly_divmod(const Fp& F, Poly a, const Poly& b, Poly& quo, Poly& rem) {
  poly_trim(a);
  quo.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  uint64_t lead_inv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    uint64_t f = F.mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    if (f) {
      quo[shift] = f;
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = F.sub(a[shift + i], F.mul(f, b[i]));
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  poly_trim(quo);
  rem = std::move(a);
  poly_trim(rem);
}

Poly poly_mod(const Fp& F, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(F, a, b, q, r);
  return r;
}

Poly poly_monic(const Fp& F, Poly f) {
  if (f.empty()) return f;
  uint64_t inv = F.inv(f.back());
  for (uint64_t& c : f) c = F.mul(c, inv);
  return f;
}

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_powmod(const Fp& F, Poly base, BigInt e, const Poly& mod) {
  Poly r{1};
  base = poly_mod(F, base, mod);
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

Poly poly_derivative(const Fp& F, const Poly& f) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], i % F.p));
  poly_trim(d);
  return d;
}

// one monic irreducible factor of f (deg f >= 1); deterministic given rng
Poly irreducible_factor(const Fp& F, Poly f, Rng& rng) {
  f = poly_monic(F, f);
  if (f.size() == 2) return f;  // linear
  // squarefree part; degrees stay below p here so f' never vanishes
  Poly fp = poly_derivative(F, f);
  Poly sf = f;
  if (!fp.empty()) {
    Poly g = poly_gcd(F, f, fp);
    if (g.size() > 1) {
      Poly q, r;
      poly_divmod(F, f, g, q, r);
      sf = q;
    }
  }
  // distinct-degree scan
  Poly x{0, 1};
  Poly h = x;
  Poly rest = sf;
  for (size_t d = 1; rest.size() > 1; ++d) {
    if (2 * d + 1 > rest.size()) return poly_monic(F, rest);  // rest irreducible
    h = poly_powmod(F, h, BigInt(F.p), rest);  // h = x^(p^d) mod rest
    Poly diff = h;
    while (diff.size() < 2) diff.push_back(0);
    diff[1] = F.sub(diff[1], 1);
    poly_trim(diff);
    Poly gd = poly_gcd(F, rest, diff);
    if (gd.size() > 1) {
      // equal-degree part: split down to one irreducible of degree d
      Poly part = gd;
      while (part.size() - 1 > d) {
        // Cantor-Zassenhaus step
        Poly r(part.size() - 1);
        for (size_t i = 0; i < r.size(); ++i) r[i] = rng.below(F.p);
        poly_trim(r);
        if (r.size() <= 1) continue;
        BigInt e = (pow(BigInt(F.p), static_cast<unsigned>(d)) - 1) / 2;
        Poly w = poly_powmod(F, r, e, part);
        if (w.empty()) continue;
        w[0] = F.sub(w[0], 1);
        poly_trim(w);
        Poly split = poly_gcd(F, part, w);
        if (split.size() > 1 && split.size() < part.size()) {
          // keep the smaller half to converge quickly
          Poly q2, r2;
          poly_divmod(F, part, split, q2, r2);
          part = (split.size() <= q2.size()) ? split : q2;
        }
      }
      return poly_monic(F, part);
    }
    // nothing of degree d; continue scanning with rest unchanged
  }
  return poly_monic(F, rest);
}

// minimal polynomial of the block-diagonal action of an endomorphism
Poly min_poly(const Fp& F, const std::vector<Mat>& blocks) {
  // global matrix
  int total = 0;
  for (const Mat& b : blocks) total += b.rows;
  Mat D(total, total);
  int off = 0;
  for (const Mat& b : blocks) {
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) D.at(off + r, off + c) = b.at(r, c);
    off += b.rows;
  }
  Poly mu{1};
  for (int k = 0; k < total; ++k) {
    // relation polynomial of e_k under D: grow the Krylov matrix until the
    // new iterate depends on the previous ones
    Mat krylov(0, total);
    std::vector<uint64_t> v(total, 0);
    v[k] = 1;
    Poly local;
    while (true) {
      Mat probe = krylov;
      Mat vrow(1, total);
      for (int c = 0; c < total; ++c) vrow.at(0, c) = v[c];
      probe = vstack(probe, vrow);
      Mat reduced = probe;
      if (rank(F, std::move(reduced)) == krylov.rows) {
        // dependence: solve coeffs over krylov rows
        Mat sol = solve_left(F, krylov, vrow);
        local.assign(krylov.rows + 1, 0);
        for (int i = 0; i < krylov.rows; ++i) local[i] = F.neg(sol.at(0, i));
        local[krylov.rows] = 1;
        break;
      }
      krylov = std::move(probe);
      // v <- v * D
      std::vector<uint64_t> nv(total, 0);
      for (int r = 0; r < total; ++r) {
        if (!v[r]) continue;
        for (int c = 0; c < total; ++c)
          nv[c] = F.add(nv[c], F.mul(v[r], D.at(r, c)));
      }
      v = std::move(nv);
    }
    // mu = lcm(mu, local)
    Poly g = poly_gcd(F, mu, local);
    Poly q, r;
    poly_divmod(F, local, g, q, r);
    mu = poly_mul(F, mu, q);
    mu = poly_monic(F, mu);
    if (mu.size() == static_cast<size_t>(total) + 1) break;
  }
  return mu;
}

// dim End and rank of its trace form; local means rank == 1
struct EndInfo {
  std::vector<ModMap> basis;
  int trace_rank = 0;
};

EndInfo end_info(const Rep& M) {
  const Fp F = field_of(M);
  EndInfo e;
  e.basis = hom_basis(M, M);
  int n = static_cast<int>(e.basis.size());
  if (n == 0) return e;
  Mat T(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      uint64_t tr = 0;
      for (size_t v = 0; v < M.dim.size(); ++v) {
        const Mat& fi = e.basis[i].f[v];
        const Mat& fj = e.basis[j].f[v];
        for (int r = 0; r < fi.rows; ++r)
          for (int c = 0; c < fi.cols; ++c)
            tr = F.add(tr, F.mul(fi.at(r, c), fj.at(c, r)));
      }
      T.at(i, j) = T.at(j, i) = tr;
    }
  e.trace_rank = rank(F, std::move(T));
  return e;
}

// one Fitting split attempt; empty result = no split found with this z
std::vector<Rep> fitting_split(const Rep& M, const std::vector<ModMap>& ends,
                               Rng& rng) {
  const Fp F = field_of(M);
  // random endomorphism
  std::vector<Mat> z(M.dim.size());
  for (size_t v = 0; v < M.dim.size(); ++v) z[v] = Mat(M.dim[v], M.dim[v]);
  for (const ModMap& h : ends) {
    uint64_t c = rng.below(F.p);
    if (!c) continue;
    for (size_t v = 0; v < M.dim.size(); ++v)
      z[v] = mat_add(F, z[v], mat_scale(F, c, h.f[v]));
  }
  Poly mu = min_poly(F, z);
  if (mu.size() <= 2) return {};  // scalar: no information
  Poly h = irreducible_factor(F, mu, rng);
  // multiplicity of h in mu
  Poly f{1};
  Poly rest = mu;
  while (true) {
    Poly q, r;
    poly_divmod(F, rest, h, q, r);
    if (!r.empty()) break;
    f = poly_mul(F, f, h);
    rest = q;
  }
  if (rest.size() <= 1) return {};  // mu is a power of one irreducible

  // w = f(z); W = w^(2^ceil(log2 total)) splits M = ker W + im W
  int total = M.total_dim();
  std::vector<Mat> W(M.dim.size());
  for (size_t v = 0; v < M.dim.size(); ++v) {
    Mat acc(M.dim[v], M.dim[v]);
    // evaluate f at z[v] by Horner
    for (size_t i = f.size(); i-- > 0;) {
      acc = mat_mul(F, acc, z[v]);
      for (int d = 0; d < M.dim[v]; ++d)
        acc.at(d, d) = F.add(acc.at(d, d), f[i]);
    }
    int e = 1;
    while ((1 << e) < total + 1) ++e;
    for (int s = 0; s < e; ++s) acc = mat_mul(F, acc, acc);
    W[v] = std::move(acc);
  }
  std::vector<Mat> ker(M.dim.size()), im(M.dim.size());
  int kdim = 0, idim = 0;
  for (size_t v = 0; v < M.dim.size(); ++v) {
    ker[v] = null_space_rows(F, transpose(W[v]));  // rows x with x*W = 0
    im[v] = row_space_rows(F, W[v]);
    kdim += ker[v].rows;
    idim += im[v].rows;
  }
  if (kdim == 0 || idim == 0) return {};
  std::vector<Rep> parts;
  parts.push_back(subrep_from_rows(M, ker));
  parts.push_back(subrep_from_rows(M, im));
  return parts;
}

void decompose_worker(const Rep& M, std::vector<Rep>& out, int depth) {
  if (M.is_zero()) return;
  if (depth > 64) throw certification_error("decomposition recursion too deep");

  EndInfo e = end_info(M);
  if (e.basis.size() == 1 || e.trace_rank == 1) {
    out.push_back(M);
    return;
  }
  Rng rng(M.content_hash() ^ 0x9e3779b97f4a7c15ull);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Rep> parts = fitting_split(M, e.basis, rng);
    if (parts.size() == 2) {
      decompose_worker(parts[0], out, depth + 1);
      decompose_worker(parts[1], out, depth + 1);
      return;
    }
  }
  throw certification_error(
      "decomposition uncertified: endomorphism algebra is not local but no "
      "splitting endomorphism was found");
}

}  // namespace

bool is_indecomposable(const Rep& M) {
  if (M.is_zero()) return false;
  EndInfo e = end_info(M);
  return e.basis.size() == 1 || e.trace_rank == 1;
}

std::vector<std::pair<Rep, int>> decompose(const Rep& M) {
  std::vector<std::pair<Rep, int>> out;
  if (M.is_zero()) return out;

  // split along connected components of the support first
  std::vector<int> supp = M.support();
  std::vector<int> comp(M.dim.size(), -1);
  {
    std::vector<char> in_supp(M.dim.size(), 0);
    for (int v : supp) in_supp[v] = 1;
    int c = 0;
    for (int v : supp) {
      if (comp[v] >= 0) continue;
      std::vector<int> stack{v};
      comp[v] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (size_t a = 0; a < M.A->bq.q.arrows.size(); ++a) {
          const Arrow& ar = M.A->bq.q.arrows[a];
          int w = -1;
          if (ar.src == u && in_supp[ar.dst]) w = ar.dst;
          if (ar.dst == u && in_supp[ar.src]) w = ar.src;
          if (w >= 0 && comp[w] < 0) {
            comp[w] = c;
            stack.push_back(w);
          }
        }
      }
      ++c;
    }
    std::vector<Rep> pieces;
    for (int k = 0; k < c; ++k) {
      Rep piece = zero_rep(*M.A, M.p);
      for (size_t v = 0; v < M.dim.size(); ++v)
        if (comp[v] == k) piece.dim[v] = M.dim[v];
      for (size_t a = 0; a < M.mat.size(); ++a) {
        const Arrow& ar = M.A->bq.q.arrows[a];
        if (comp[ar.src] == k && comp[ar.dst] == k)
          piece.mat[a] = M.mat[a];
        else
          piece.mat[a] = Mat(piece.dim[ar.src], piece.dim[ar.dst]);
      }
      pieces.push_back(std::move(piece));
    }
    std::vector<Rep> indecs;
    for (const Rep& piece : pieces) decompose_worker(piece, indecs, 0);

    // group up to isomorphism
    for (Rep& x : indecs) {
      bool matched = false;
      for (auto& [rep, mult] : out)
        if (is_isomorphic(rep, x)) {
          ++mult;
          matched = true;
          break;
        }
      if (!matched) out.emplace_back(std::move(x), 1);
    }
  }
  return out;
}

bool is_isomorphic(const Rep& M, const Rep& N) {
  if (M.A != N.A || M.p != N.p) return false;
  if (M.dim != N.dim) return false;
  if (M.is_zero()) return true;
  if (g_vector(M) != g_vector(N)) return false;
  const Fp F = field_of(M);
  std::vector<ModMap> H = hom_basis(M, N);
  if (H.empty()) return false;

  auto try_combo = [&](const std::vector<uint64_t>& coeff) {
    for (size_t v = 0; v < M.dim.size(); ++v) {
      if (M.dim[v] == 0) continue;
      Mat block(M.dim[v], N.dim[v]);
      for (size_t k = 0; k < H.size(); ++k)
        if (coeff[k]) block = mat_add(F, block, mat_scale(F, coeff[k], H[k].f[v]));
      if (!invertible(F, std::move(block))) return false;
    }
    return true;
  };

  Rng rng(M.content_hash() ^ (N.content_hash() * 0x100000001b3ull));
  std::vector<uint64_t> coeff(H.size());
  for (int attempt = 0; attempt < 40; ++attempt) {
    for (uint64_t& c : coeff) c = rng.below(F.p);
    if (try_combo(coeff)) return true;
  }
  // exhaustive fallback for tiny search spaces
  double space = 1;
  for (size_t k = 0; k < H.size(); ++k) space *= static_cast<double>(F.p);
  if (space <= (1 << 20)) {
    std::fill(coeff.begin(), coeff.end(), 0);
    while (true) {
      size_t k = 0;
      while (k < coeff.size() && coeff[k] + 1 == F.p) coeff[k++] = 0;
      if (k == coeff.size()) break;
      ++coeff[k];
      if (try_combo(coeff)) return true;
    }
    return false;
  }
  throw certification_error("isomorphism test uncertified after retries");
}

}  // namespace tautilt
