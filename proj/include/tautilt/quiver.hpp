#pragma once

#include <optional>
#include <utility>

#include "tautilt/base.hpp"

namespace tautilt {

// Vertices are 0-based internally.  Every piece of text I/O (quiver files,
// CLI arguments and output, witness vectors) is 1-based; conversion happens
// only at the I/O boundary.
struct Arrow {
  int src = 0;
  int dst = 0;
};

// A path is a sequence of arrow indices composed left to right: {a, b} means
// "a then b", so it runs src(a) -> dst(a) = src(b) -> dst(b).  The empty
// sequence never appears inside a Path-valued field; trivial paths are
// handled explicitly where they matter (slice bases).
using Path = std::vector<int>;

struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  // display ids used by the text format; constructors number them 1..m
  std::vector<long long> arrow_ids;

  void push_arrow(int src, int dst) {
    arrows.push_back({src, dst});
    arrow_ids.push_back(static_cast<long long>(arrows.size()));
  }

  int path_src(const Path& p) const { return arrows[p.front()].src; }
  int path_dst(const Path& p) const { return arrows[p.back()].dst; }
  bool path_composable(const Path& p) const;

  std::vector<std::vector<int>> arrows_from() const;
  std::vector<std::vector<int>> arrows_into() const;

  // empty when the quiver has an oriented cycle
  std::optional<std::vector<int>> topo_order() const;
  bool is_acyclic() const { return topo_order().has_value(); }
  bool has_loop() const;
  bool is_connected() const;
  // vertex lists of the undirected components, each sorted ascending
  std::vector<std::vector<int>> undirected_components() const;

  // directed reachability; path_exists(i, i) is true
  bool path_exists(int i, int j) const;
};

// One relation generator: a linear combination of parallel paths (common
// source and target) of length >= 2.
struct Relation {
  std::vector<std::pair<Rat, Path>> terms;
};

struct BoundQuiver {
  Quiver q;
  std::vector<Relation> rels;

  // throws input_error on loops, oriented cycles, empty/non-parallel/short
  // relation terms or out-of-range arrow indices
  void validate() const;
};

// ---------------------------------------------------------------------------
// partitions

struct Partition {
  std::vector<int> parts;  // non-increasing, all >= 1, nonempty
  int sum() const;
};

struct ShiftedPartition {
  std::vector<int> parts;  // strictly decreasing, all >= 1, nonempty
  int sum() const;
};

// accepts "3,3,2" and the exponent form "2^2,1^3"
Partition parse_partition(const std::string& text);
ShiftedPartition parse_shifted_partition(const std::string& text);
// canonical rendering, with ^ exponents for repeated parts: "3^2,2"
std::string format_parts(const std::vector<int>& parts);

Partition transpose_partition(const Partition& la);

// componentwise containment of shifted diagrams: la fits inside mu
bool shifted_contains(const ShiftedPartition& mu, const ShiftedPartition& la);

// ---------------------------------------------------------------------------
// structural operations

// Raised when the requested vertex set is not closed under directed paths;
// carries one violating path (1-based vertex trail) for the error message.
struct convexity_error : input_error {
  std::vector<int> witness_vertices;  // 1-based trail i -> ... -> j
  explicit convexity_error(const std::string& msg, std::vector<int> trail)
      : input_error(msg), witness_vertices(std::move(trail)) {}
};

// Full subquiver on `keep` (0-based, deduplicated) with the surviving
// relation generators.  Vertices are renumbered in increasing original
// order; arrows keep their relative order and display ids.
BoundQuiver convex_restriction(const BoundQuiver& bq, std::vector<int> keep);

struct QuotientComponents {
  std::vector<BoundQuiver> components;
  // original 0-based vertex ids backing each component, sorted ascending
  std::vector<std::vector<int>> original_vertices;
};

// Kill vertex v: drop it, its incident arrows, and every relation term whose
// path passes through v.  A two-term commutativity generator that loses one
// term this way survives as a monomial generator; a generator that loses all
// terms disappears.  The result is split into connected components.
QuotientComponents vertex_quotient(const BoundQuiver& bq, int v);

QuotientComponents split_components(const BoundQuiver& bq);

}  // namespace tautilt
