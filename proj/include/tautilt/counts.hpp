#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautilt/base.hpp"

namespace tautilt {

BigInt binomial(long long n, long long k);
BigInt catalan(long long n);  // binomial(2n, n) / (n + 1)

// closed forms for counts of support pairs, by family:
//   linear_a(n), module-part size s:   (n - s + 1) / (n + 1) * C(n + s, s)
//   a1(n), full module part (n >= 3):  (5n - 6) (2n - 4)! / ((n - 2)! n!)
//   d(n), full module part (n >= 3):   (3n - 4) / (2n - 2) * C(2n - 2, n - 2)
BigInt closed_form_linear_a(int n, int s);
BigInt closed_form_a1_full(int n);
BigInt closed_form_d_full(int n);

// A counts table per family member: entry [s] is the number of support
// pairs whose module part has s indecomposable summands (0 <= s <= n).
using CountsRow = std::vector<long long>;
using FamilyTable = std::map<int, CountsRow>;  // n -> row

struct IdentityCheck {
  std::string name;  // the identity instance, with its indices filled in
  BigInt lhs, rhs;
  bool ok = false;
};

struct RecursionReport {
  std::vector<IdentityCheck> checks;
  bool all_ok = true;
};

// Checks every count identity whose inputs are present in the given tables:
// the column recursions and full-rank drop for the lambda family, the
// shifted-column recursions and top formulas for the a1 family, and the
// equality of the two highest counts for linear_a.  Rows must be complete
// (size n + 1) for the member they describe.
RecursionReport verify_recurrences(const FamilyTable& lambda,
                                   const FamilyTable& linear_a,
                                   const FamilyTable& d,
                                   const FamilyTable& a1);

std::string format_counts_row(const CountsRow& row);  // "1 4 10 16 15 | 46"

}  // namespace tautilt
