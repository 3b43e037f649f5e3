#pragma once

#include <optional>

#include "tautilt/quiver.hpp"

namespace tautilt {

// The unit quadratic form of a triangular bound quiver:
//   q(v) = sum v_i^2 - sum_{arrows i->j} v_i v_j + sum_{generators i->j} v_i v_j.
// Stored as the doubled symmetric Gram matrix (all entries integers,
// diagonal 2), so q(v) = v * gram2 * v^T / 2.
struct TitsForm {
  int n = 0;
  std::vector<std::vector<long long>> gram2;
  // provenance: per ordered pair, arrow and relation-generator counts
  std::vector<std::vector<int>> arrow_count;
  std::vector<std::vector<int>> rel_count;
  bool minimality_trusted = true;  // constructors set true; raw input false

  long long evaluate(const std::vector<long long>& v) const;
};

// r(i,j) counts the supplied generators as given; family constructors
// produce minimal generating sets, generic input is marked untrusted.
TitsForm tits_form(const BoundQuiver& bq, bool minimality_trusted = true);

enum class Positivity { weakly_positive, not_weakly_positive };

struct PositivityVerdict {
  Positivity status;
  // present iff not weakly positive: v >= 0, v != 0, q(v) <= 0
  std::optional<std::vector<long long>> certificate;
  uint64_t nodes_visited = 0;
  bool minimality_trusted = true;
};

struct SearchOptions {
  int bound = 6;           // box {0..bound}^n
  int max_n = 16;          // refuse larger instances instead of guessing
  uint64_t node_budget = 200'000'000;
  bool serial = false;     // force the reference kernel
};

// Exhaustive pruned search for nonzero v in {0..bound}^n with q(v) <= 0.
// The box bound 6 suffices for the weak-positivity decision (critical unit
// forms have sincere root vectors with entries <= 6); the classifier-level
// guard re-runs small instances at bound 12 and asserts identical verdicts.
// Throws resource_error when n exceeds max_n or the node budget runs out.
PositivityVerdict is_weakly_positive(const TitsForm& q, SearchOptions opt = {});

// Semi-decision: some v in {0..bound}^n with q(v) < 0, or nothing found in
// the box.  Absence is NOT a proof of weak non-negativity.
std::optional<std::vector<long long>> search_nonnegativity_violation(
    const TitsForm& q, int bound, SearchOptions opt = {});

// Search internals shared by both entry points and by the benchmark: find
// the first nonzero v in {0..bound}^n with q(v) <= target, scanning
// coordinates in decreasing connectivity order (ties by index) and values
// ascending.  The parallel kernel splits the outermost coordinate and merges
// branch results in ascending order, so its outcome — including which
// witness gets reported — is identical to the serial kernel's.
struct BoxSearchOutcome {
  std::optional<std::vector<long long>> witness;  // in original coordinates
  bool budget_exhausted = false;
  uint64_t nodes = 0;
};

BoxSearchOutcome search_box_serial(const TitsForm& q, int bound, long long target,
                                   uint64_t node_budget);
BoxSearchOutcome search_box_parallel(const TitsForm& q, int bound, long long target,
                                     uint64_t node_budget);

}  // namespace tautilt
