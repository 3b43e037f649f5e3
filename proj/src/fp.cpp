#include "tautilt/fp.hpp"

namespace tautilt {

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_mul(const Fp& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::logic_error("mat_mul shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      uint64_t aik = A.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

Mat mat_add(const Fp& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw std::logic_error("mat_add shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = F.add(A.a[k], B.a[k]);
  return C;
}

Mat mat_scale(const Fp& F, uint64_t c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = F.mul(c, A.a[k]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.rows == 0) return B;
  if (B.rows == 0) return A;
  if (A.cols != B.cols) throw std::logic_error("vstack shape mismatch");
  Mat C(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
  return C;
}

std::vector<int> rref(const Fp& F, Mat& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    uint64_t inv = F.inv(A.at(r, c));
    for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(inv, A.at(r, j));
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      uint64_t f = A.at(i, c);
      if (!f) continue;
      for (int j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const Fp& F, Mat A) { return static_cast<int>(rref(F, A).size()); }

Mat null_space_rows(const Fp& F, Mat A) {
  std::vector<int> pivots = rref(F, A);
  std::vector<char> is_pivot(A.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat N(static_cast<int>(free_cols.size()), A.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    N.at(static_cast<int>(k), fc) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      N.at(static_cast<int>(k), pivots[r]) = F.neg(A.at(static_cast<int>(r), fc));
  }
  return N;
}

Mat row_space_rows(const Fp& F, Mat A) {
  std::vector<int> pivots = rref(F, A);
  Mat R(static_cast<int>(pivots.size()), A.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < A.cols; ++c) R.at(static_cast<int>(r), c) = A.at(static_cast<int>(r), c);
  return R;
}

Mat solve_left(const Fp& F, const Mat& A, const Mat& B) {
  if (A.cols != B.cols) throw std::logic_error("solve_left shape mismatch");
  // Row-reduce A while mirroring the operations on an identity block:
  // [A | I] -> [R | T] with R = T*A in RREF.  A row b in rowspace(A) has
  // b = sum coeff_r R_r with coeff read off at the pivot columns, so
  // x = coeff * T solves x*A = b.
  Mat W(A.rows, A.cols + A.rows);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, A.cols + i) = 1;
  }
  // manual RREF restricted to the first A.cols columns
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i)
      if (W.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < W.cols; ++j) std::swap(W.at(sel, j), W.at(r, j));
    uint64_t inv = F.inv(W.at(r, c));
    for (int j = 0; j < W.cols; ++j) W.at(r, j) = F.mul(inv, W.at(r, j));
    for (int i = 0; i < W.rows; ++i) {
      if (i == r) continue;
      uint64_t f = W.at(i, c);
      if (!f) continue;
      for (int j = 0; j < W.cols; ++j)
        W.at(i, j) = F.sub(W.at(i, j), F.mul(f, W.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }

  Mat X(B.rows, A.rows);
  for (int b = 0; b < B.rows; ++b) {
    // residual = B_b - sum coeff_r * R_r; coeff_r = B_b[pivot_r]
    std::vector<uint64_t> coeff(pivots.size());
    std::vector<uint64_t> residual(A.cols);
    for (int c = 0; c < A.cols; ++c) residual[c] = B.at(b, c);
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      uint64_t f = residual[pivots[pr]];
      coeff[pr] = f;
      if (!f) continue;
      for (int c = 0; c < A.cols; ++c)
        residual[c] = F.sub(residual[c], F.mul(f, W.at(static_cast<int>(pr), c)));
    }
    for (int c = 0; c < A.cols; ++c)
      if (residual[c]) throw std::logic_error("solve_left: row outside row space");
    // x = coeff * T
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      if (!coeff[pr]) continue;
      for (int j = 0; j < A.rows; ++j)
        X.at(b, j) =
            F.add(X.at(b, j), F.mul(coeff[pr], W.at(static_cast<int>(pr), A.cols + j)));
    }
  }
  return X;
}

bool invertible(const Fp& F, Mat A) {
  if (A.rows != A.cols) return false;
  return rank(F, A) == A.rows;
}

}  // namespace tautilt
