#pragma once

#include <optional>

#include "tautilt/rep.hpp"
#include "tautilt/tits.hpp"

namespace tautilt {

enum class Finiteness { finite, infinite, unknown };

const char* to_string(Finiteness f);

// Verdict read off the shape lists, with the representation type where the
// lists record it.
struct ListVerdict {
  Finiteness tau = Finiteness::unknown;
  std::string rep_type;  // "finite", "tame concealed", "tame", "wild", "unknown"
  std::string evidence;
};

// A staircase algebra has finitely many support pairs exactly when the shape
// is a hook, a two-row shape with second row 2, its transpose, or any shape
// with at most 8 boxes outside four minimal exceptions.
ListVerdict classify_staircase(const Partition& la);

// For shifted shapes the finite list is explicit and short; three shapes are
// tame concealed, four more are tame, and everything else is wild.  Finitely
// many support pairs exactly on the finite list.
ListVerdict classify_shifted(const ShiftedPartition& la);

// Dispatch on a family spec ("lambda:5", "grid:2,4", ...).  Families without
// a list entry come back unknown.
ListVerdict classify_family(const std::string& spec);

// Whether, at every vertex i, the distinct direct summands of rad P_i have
// their supports in pairwise different connected components of the quiver
// with i and everything pointing (transitively) into i removed.  When this
// holds, the quadratic form decides finiteness.
struct SeparationReport {
  bool holds = false;
  std::string detail;  // first failing vertex, or a short confirmation
};
SeparationReport separation_property(const Algebra& A, uint64_t p);

struct TitsRouteVerdict {
  Finiteness tau = Finiteness::unknown;
  std::string reason;
  std::vector<long long> witness;  // certificate vector when infinite
};

// Decide finiteness through the quadratic form: weakly positive means
// finitely many pairs, a nonzero nonnegative vector with value <= 0 means
// infinitely many.  Valid only behind the separation check (or an explicit
// caller assertion); otherwise inconclusive.
TitsRouteVerdict tau_finiteness_via_tits(const Algebra& A,
                                         const SearchOptions& search,
                                         bool assume_separation, uint64_t p);

// Search for a sincere indecomposable rigid module: the projectives first,
// then every summand discovered by the exchange-graph walk (complete walks
// make a miss definitive; capped walks only say "none up to the cap").
enum class SincereStatus { found, none, none_up_to_cap };
struct SincereSearchResult {
  SincereStatus status = SincereStatus::none_up_to_cap;
  std::optional<Rep> module;
  std::string note;
};
SincereSearchResult sincere_search(const Algebra& A, uint64_t p, long long node_cap);

struct ReductionOptions {
  SearchOptions search;
  uint64_t p = 32003;
  long long enum_cap = 50'000;
  bool assume_separation = false;
};

struct ReductionVerdict {
  Finiteness tau = Finiteness::unknown;
  std::string reason;
};

// Layered decision: connected components are decided independently; each one
// tries the quadratic form, then a capped exchange-graph walk, and otherwise
// recurses into the one-vertex-deleted quotients.  An infinite quotient
// settles the question; a finite answer can only come from a level that was
// itself decided outright, since the full-support pairs of an undecided
// algebra remain out of reach.
ReductionVerdict nonsincere_reduction(const Algebra& A, const ReductionOptions& opts);

// all partitions of n, largest part first, in lexicographic order
std::vector<Partition> partitions_of(int n);
// strictly decreasing partitions of n
std::vector<ShiftedPartition> strict_partitions_of(int n);

// list-versus-form agreement sweep over whole box counts
struct CrossCheckItem {
  std::string label;
  bool list_finite = false;
  bool form_finite = false;
  bool agree = false;
};
struct CrossCheckReport {
  std::vector<CrossCheckItem> items;
  bool all_agree = true;
};
CrossCheckReport cross_check_staircase(int max_boxes, const SearchOptions& search);
CrossCheckReport cross_check_shifted(int max_boxes, const SearchOptions& search);

}  // namespace tautilt
