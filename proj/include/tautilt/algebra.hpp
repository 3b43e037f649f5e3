#pragma once

#include <map>

#include "tautilt/quiver.hpp"

namespace tautilt {

// Sparse rational vector over the basis paths of one (i,j) slice:
// (position in SliceBasis::basis, coefficient), sorted by position.
using NfVector = std::vector<std::pair<int, Rat>>;

// e_i A e_j as a vector space.  all_paths lists every path i -> j (for
// i == j just the trivial empty path), sorted by (length, lexicographic on
// arrow indices); basis marks the pivot-free ones after reducing by the
// degree slice of the relation ideal; nf[k] rewrites all_paths[k] over the
// basis.
struct SliceBasis {
  std::vector<Path> all_paths;
  std::vector<int> basis;            // indices into all_paths, increasing
  std::vector<NfVector> nf;          // per path index
  std::map<Path, int> path_index;

  int dim() const { return static_cast<int>(basis.size()); }
};

struct Algebra {
  BoundQuiver bq;
  std::vector<std::vector<SliceBasis>> slice;  // slice[i][j]
  int dim = 0;

  int n() const { return bq.q.n; }
  const SliceBasis& at(int i, int j) const { return slice[i][j]; }

  // normal form of an arbitrary composable path (which must run i -> j);
  // the empty path stands for e_i and needs i == j
  const NfVector& normal_form(int i, int j, const Path& p) const;

  // stable serialization (the text quiver format); feeds content hashes
  const std::string& canonical_text() const { return canonical; }

  std::string canonical;
};

// Validates and computes the slice bases.  Throws input_error on malformed
// input and resource_error if the path count explodes.
Algebra build_algebra(BoundQuiver bq);

}  // namespace tautilt
