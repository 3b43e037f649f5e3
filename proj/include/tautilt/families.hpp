#pragma once

#include "tautilt/quiver.hpp"

namespace tautilt {

// A constructed family member.  For diagram-shaped families `cell` holds the
// 1-based (row, column) coordinates backing each vertex; other families leave
// it empty.  Vertices are numbered row-major along the diagram.
struct FamilyAlgebra {
  BoundQuiver bq;
  std::vector<std::pair<int, int>> cell;
  std::string name;
};

// Young-diagram grid of la with right/down arrows and one commutativity
// generator per complete unit square.
FamilyAlgebra staircase(const Partition& la);

// Shifted diagram: row i occupies columns i .. i + la_i - 1; same arrows and
// square relations.
FamilyAlgebra shifted_staircase(const ShiftedPartition& la);

FamilyAlgebra linear_a(int n);  // 1 -> 2 -> ... -> n, no relations

// two sources joined to a tail: 1 -> 3, 2 -> 3, 3 -> 4 -> ... -> n  (n >= 3)
FamilyAlgebra family_d(int n);

// square 1 -> {2,3} -> 4 with the commutativity relation, then a tail
// 4 -> 5 -> ... -> n; for n = 3 just 2 <- 1 -> 3  (n >= 3)
FamilyAlgebra family_lambda(int n);

// linear quiver with the composite of the first two arrows set to zero
// (n >= 2; n = 2 has no composable pair and no relation)
FamilyAlgebra family_a1(int n);

FamilyAlgebra grid(int m, int n);   // staircase of n parts equal to m
FamilyAlgebra triangle(int n);      // shifted_staircase (n, n-1, ..., 1)

// triangle quiver plus the mesh zero relations
// (i,i) -> (i,i+1) -> (i+1,i+1): the Auslander algebra of the linear A_m
FamilyAlgebra auslander_a(int m);

// "lambda:4", "grid:2,4", "staircase:3,3,2", "shifted:6,4", ...
FamilyAlgebra make_family(const std::string& spec);

}  // namespace tautilt
