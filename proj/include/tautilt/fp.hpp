#pragma once

#include <cstdint>
#include <vector>

#include "tautilt/base.hpp"

namespace tautilt {

// Arithmetic mod a prime p < 2^31.  Elements live in [0, p).
struct Fp {
  uint64_t p;

  explicit Fp(uint64_t p_) : p(p_) {}
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
  uint64_t from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
  }
  uint64_t from_rat(const Rat& r) const {
    BigInt num = numerator(r) % BigInt(p);
    BigInt den = denominator(r) % BigInt(p);
    if (num < 0) num += p;
    uint64_t n = num.convert_to<uint64_t>();
    uint64_t d = den.convert_to<uint64_t>();
    if (d == 0) throw input_error("denominator divisible by the field prime");
    return mul(n, inv(d));
  }
};

bool is_prime(uint64_t p);

// Dense row-major matrix over Fp.  Vectors are rows; a linear map with
// matrix A sends the row v to v*A, so A has (input dim) rows and (output
// dim) columns.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<uint64_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static Mat identity(int n);
  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Fp& F, const Mat& A, const Mat& B);
Mat mat_add(const Fp& F, const Mat& A, const Mat& B);
Mat mat_scale(const Fp& F, uint64_t c, const Mat& A);
Mat transpose(const Mat& A);
Mat vstack(const Mat& A, const Mat& B);

// In-place reduced row echelon form with pivots chosen in column order;
// returns the pivot columns.  Deterministic.
std::vector<int> rref(const Fp& F, Mat& A);

int rank(const Fp& F, Mat A);

// Basis of { x : A x^T = 0 } as rows, from the RREF free columns (each basis
// row has 1 at its free column).  Deterministic.
Mat null_space_rows(const Fp& F, Mat A);

// Rows spanning the row space of A, reduced (the nonzero RREF rows).
Mat row_space_rows(const Fp& F, Mat A);

// Solve X * A = B for X given that every row of B lies in the row space of
// A.  Throws std::logic_error when it does not.  Deterministic.
Mat solve_left(const Fp& F, const Mat& A, const Mat& B);

// true iff A is square and invertible
bool invertible(const Fp& F, Mat A);

}  // namespace tautilt
