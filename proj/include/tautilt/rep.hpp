#pragma once

#include <memory>

#include "tautilt/algebra.hpp"
#include "tautilt/fp.hpp"

namespace tautilt {

// A finite-dimensional right module over a bound quiver algebra, given by a
// dimension vector and one matrix per arrow.  Elements of the space at a
// vertex are rows; an arrow a: i -> j acts on the right, v |-> v * mat[a],
// so mat[a] has dim[i] rows and dim[j] columns.
struct Rep {
  const Algebra* A = nullptr;
  uint64_t p = 0;
  std::vector<int> dim;
  std::vector<Mat> mat;

  int total_dim() const;
  std::vector<int> support() const;  // 0-based vertices with dim > 0
  bool is_zero() const { return total_dim() == 0; }
  bool satisfies_relations() const;
  // matrix of the right action of a path (v at src |-> v * result at dst)
  Mat path_action(const Path& path) const;
  // deterministic content hash: algebra text, prime, dims, matrices
  uint64_t content_hash() const;
};

Rep zero_rep(const Algebra& A, uint64_t p);
Rep simple_rep(const Algebra& A, uint64_t p, int vertex);
// basis of the projective at i over vertex j = the (i,j) slice basis; arrows
// act by path concatenation followed by normal-form rewriting
Rep projective_rep(const Algebra& A, uint64_t p, int vertex);
Rep direct_sum(const Rep& M, const Rep& N);

// A homomorphism M -> N: one dim_M[v] x dim_N[v] block per vertex.
struct ModMap {
  std::vector<Mat> f;
};

// basis of Hom(M, N) as solutions of the intertwining system
std::vector<ModMap> hom_basis(const Rep& M, const Rep& N);
int hom_dim(const Rep& M, const Rep& N);

// N / image(f) for f: M -> N, with the quotient spaces coordinatized by the
// non-pivot columns of the per-vertex image row spaces
Rep cokernel(const Rep& M, const Rep& N, const ModMap& f);

// radical = sum of the images of all arrow actions, as a subrepresentation;
// top multiplicities are dim M_v - rank(rad_v)
struct RadicalTop {
  Rep radical;
  std::vector<int> top;  // multiplicity of each simple in M / rad M
};
RadicalTop radical_and_top(const Rep& M);

// Minimal projective presentation P1 --phi--> P0 -->> M, with P0 and P1
// recorded as multisets of vertices and phi through its matrix of slice
// coefficients: rho[c][d] is the coefficient row of the (copy c of P0,
// copy d of P1) entry over the basis of e_{p0[c]} A e_{p1[d]}.
struct Presentation {
  std::vector<int> p0, p1;  // vertex multisets, in construction order
  std::vector<std::vector<std::vector<uint64_t>>> rho;
};
Presentation minimal_presentation(const Rep& M);

std::vector<int> g_vector(const Rep& M);

// Auslander-Reiten translate computed via the transpose of the minimal
// presentation; projective summands contribute zero on their own.
Rep ar_translate(const Rep& M);

bool fac_membership(const Rep& M, const Rep& N);  // M in Fac(N)?

bool is_tau_rigid_pair(const Rep& M, const Rep& N);

// Direct-sum decomposition with indecomposability certificates: a factor is
// accepted only when End modulo its radical is 1-dimensional.  Factors are
// grouped up to isomorphism.  Throws certification_error if the splitting
// or grouping cannot be certified within the retry budget.
std::vector<std::pair<Rep, int>> decompose(const Rep& M);

bool is_isomorphic(const Rep& M, const Rep& N);

// dim End(M) == 1 shortcut plus the radical-quotient test
bool is_indecomposable(const Rep& M);

}  // namespace tautilt
