#pragma once

#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>

#include "tautilt/rep.hpp"

namespace tautilt {

// One indecomposable module interned by its g-vector.  Registry entries have
// stable addresses and are created only during the serial merge phase, so
// worker threads may read them freely.
struct RegisteredModule {
  Rep rep;
  std::vector<int> g;
};
using ModuleRef = const RegisteredModule*;

struct ModuleRegistry {
  std::deque<RegisteredModule> store;
  std::map<std::vector<int>, ModuleRef> by_g;

  // Interns a candidate under its g-vector.  On a hit the stored
  // representative wins; with paranoid checking the hit is certified by an
  // explicit isomorphism test (a mismatch would mean two non-isomorphic
  // rigid indecomposables share a g-vector, which is a hard error).
  ModuleRef get_or_insert(Rep&& cand, std::vector<int>&& g, bool paranoid);

  // read-through caches used by the expansion workers; guarded because
  // workers fill them concurrently (values are deterministic, so a lost
  // race at worst recomputes)
  std::shared_mutex cache_mu;
  std::map<std::pair<ModuleRef, ModuleRef>, std::vector<ModMap>> hom_cache;
  std::map<ModuleRef, Rep> tau_cache;

  const std::vector<ModMap>& homs(ModuleRef from, ModuleRef to);
  const Rep& tau(ModuleRef m);
};

// A support pair: the module part as registry summands sorted by g-vector,
// plus the complement vertices (0-based) outside the module's support.
struct EnumNode {
  std::vector<ModuleRef> summands;
  std::vector<int> complement;
  int layer = 0;
};

// parent --(mutation at summand index)--> child in the exchange graph
struct HasseEdge {
  int parent = 0;
  int direction = 0;
  int child = 0;
};

struct EnumOptions {
  uint64_t p = 32003;
  long long node_cap = 1'000'000;
  bool serial = false;          // force single-threaded layer expansion
  bool paranoid_iso = false;    // certify every registry hit by isomorphism
  bool validate_nodes = false;  // re-check the pair axioms on every node
};

struct EnumResult {
  bool complete = true;  // false when the node cap stopped the walk
  std::vector<EnumNode> nodes;  // node 0 is the full module part
  std::vector<HasseEdge> edges;
  std::shared_ptr<ModuleRegistry> registry;  // keeps summand pointers alive

  int n = 0;  // number of vertices of the algebra
};

// Walks the exchange graph downward from the pair with every projective as a
// summand, one breadth-first layer at a time.  Workers expand (node,
// direction) slots in parallel; discovered children are merged serially in
// slot order, so node numbering and edge order do not depend on the worker
// count.  Registered modules point back into A, so A must outlive the result.
EnumResult enumerate_support_tau_tilting(const Algebra& A, const EnumOptions& opts);

// One exchange step at the given summand.  The universal left approximation
// of the summand into the others is formed, its cokernel decomposed, and the
// fresh indecomposable (if any) interned in the registry.  Throws input_error
// "not a descent direction" when the summand lies in Fac of the rest.
EnumNode left_mutation(const Algebra& A, ModuleRegistry& reg,
                       const EnumNode& node, int direction,
                       const EnumOptions& opts);

// nodes per module-part size: index s counts pairs whose module part has s
// indecomposable summands
std::vector<long long> counts_by_rank(const EnumResult& r);

// Re-checks one node: summands pairwise rigid (both hom-into-translate
// spaces vanish), distinct sorted g-vectors, complement disjoint from the
// support, and summand count plus complement count equal to n.  Throws
// std::logic_error with a description on the first violation.
void validate_node(const EnumResult& r, int node_index);

}  // namespace tautilt
