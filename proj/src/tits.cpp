#include "tautilt/tits.hpp"

#include <algorithm>
#include <numeric>

namespace tautilt {

long long TitsForm::evaluate(const std::vector<long long>& v) const {
  if (static_cast<int>(v.size()) != n)
    throw input_error("evaluate: vector length " + std::to_string(v.size()) +
                      " does not match form rank " + std::to_string(n));
  long long acc2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc2 += gram2[i][j] * v[i] * v[j];
  return acc2 / 2;  // always even: gram2 is symmetric with even diagonal
}

TitsForm tits_form(const BoundQuiver& bq, bool minimality_trusted) {
  bq.validate();
  TitsForm q;
  q.n = bq.q.n;
  q.minimality_trusted = minimality_trusted;
  q.arrow_count.assign(q.n, std::vector<int>(q.n, 0));
  q.rel_count.assign(q.n, std::vector<int>(q.n, 0));
  for (const Arrow& a : bq.q.arrows) ++q.arrow_count[a.src][a.dst];
  for (const Relation& r : bq.rels) {
    const Path& p = r.terms[0].second;
    ++q.rel_count[bq.q.path_src(p)][bq.q.path_dst(p)];
  }
  q.gram2.assign(q.n, std::vector<long long>(q.n, 0));
  for (int i = 0; i < q.n; ++i) q.gram2[i][i] = 2;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      if (i == j) continue;
      q.gram2[i][j] = -q.arrow_count[i][j] - q.arrow_count[j][i] +
                      q.rel_count[i][j] + q.rel_count[j][i];
    }
  return q;
}

namespace {

// Depth-first enumeration of {0..bound}^n in a fixed coordinate order with a
// partial-sum lower bound.  Everything is phrased in doubled values so the
// arithmetic stays integral.
struct BoxSearcher {
  const TitsForm& q;
  int bound;
  long long target2;      // prune against 2 * target
  uint64_t budget;
  std::vector<int> order;  // order[depth] = original coordinate

  std::vector<long long> value;  // by original coordinate
  uint64_t nodes = 0;
  bool exhausted = false;
  std::optional<std::vector<long long>> witness;

  BoxSearcher(const TitsForm& q_, int bound_, long long target_, uint64_t budget_)
      : q(q_), bound(bound_), target2(2 * target_), budget(budget_) {
    // most connected coordinates first (largest count of nonzero couplings),
    // ties broken by index
    order.resize(q.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> conn(q.n, 0);
    for (int i = 0; i < q.n; ++i)
      for (int j = 0; j < q.n; ++j)
        if (i != j && q.gram2[i][j] != 0) ++conn[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return conn[a] > conn[b]; });
    value.assign(q.n, 0);
  }

  // Admissible lower bound for the doubled form over all completions of the
  // prefix: couple each free coordinate to the assigned ones exactly and to
  // the other free ones pessimistically (only the negative couplings, at the
  // largest magnitude `bound`); then minimize each coordinate independently.
  long long completion_bound(int depth, long long assigned2) const {
    long long acc = assigned2;
    for (size_t df = depth; df < order.size(); ++df) {
      int j = order[df];
      long long lin2 = 0;  // 2 * sum_{assigned i} gram2[i][j] v_i
      for (int di = 0; di < depth; ++di)
        lin2 += 2 * q.gram2[order[di]][j] * value[order[di]];
      long long negfree = 0;  // sum over other free k of min(0, gram2[j][k])
      for (size_t dk = depth; dk < order.size(); ++dk) {
        if (dk == df) continue;
        negfree += std::min(0ll, q.gram2[j][order[dk]]);
      }
      long long best = 0;  // t = 0
      for (long long t = 1; t <= bound; ++t) {
        long long val = 2 * t * t + lin2 * t + negfree * bound * t;
        best = std::min(best, val);
      }
      acc += best;
    }
    return acc;
  }

  // returns false when the node budget ran out
  bool dfs(int depth, long long assigned2, bool any_nonzero) {
    if (witness || exhausted) return !exhausted;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (depth == q.n) {
      if (any_nonzero && assigned2 <= target2) {
        std::vector<long long> v(value);
        witness = std::move(v);
      }
      return true;
    }
    if (completion_bound(depth, assigned2) > target2) return true;  // prune
    int i = order[depth];
    for (long long t = 0; t <= bound; ++t) {
      value[i] = t;
      long long add = 2 * t * t;
      for (int dj = 0; dj < depth; ++dj)
        add += 2 * q.gram2[i][order[dj]] * value[order[dj]] * t;
      if (!dfs(depth + 1, assigned2 + add, any_nonzero || t > 0)) return false;
      if (witness) return true;
    }
    value[i] = 0;
    return true;
  }
};

BoxSearchOutcome run_branch(const TitsForm& q, int bound, long long target,
                            uint64_t budget, long long outer_value) {
  BoxSearcher s(q, bound, target, budget);
  if (q.n == 0) return {};
  int i = s.order[0];
  s.value[i] = outer_value;
  long long assigned2 = 2 * outer_value * outer_value;
  s.dfs(1, assigned2, outer_value > 0);
  BoxSearchOutcome out;
  out.witness = s.witness;
  out.budget_exhausted = s.exhausted;
  out.nodes = s.nodes;
  return out;
}

// Common merge: branches are scanned in ascending outer value; a witness in
// branch k only counts if no earlier branch ran out of budget (the serial
// scan would have stopped there first).
BoxSearchOutcome merge_branches(const std::vector<BoxSearchOutcome>& branches) {
  BoxSearchOutcome out;
  for (const BoxSearchOutcome& b : branches) {
    out.nodes += b.nodes;
    if (b.budget_exhausted) {
      out.budget_exhausted = true;
      return out;
    }
    if (b.witness) {
      out.witness = b.witness;
      return out;
    }
  }
  return out;
}

}  // namespace

BoxSearchOutcome search_box_serial(const TitsForm& q, int bound, long long target,
                                   uint64_t node_budget) {
  if (q.n == 0) return {};
  uint64_t per_branch = node_budget / (bound + 1) + 1;
  std::vector<BoxSearchOutcome> branches(bound + 1);
  for (long long t = 0; t <= bound; ++t)
    branches[t] = run_branch(q, bound, target, per_branch, t);
  return merge_branches(branches);
}

BoxSearchOutcome search_box_parallel(const TitsForm& q, int bound, long long target,
                                     uint64_t node_budget) {
  if (q.n == 0) return {};
  uint64_t per_branch = node_budget / (bound + 1) + 1;
  std::vector<BoxSearchOutcome> branches(bound + 1);
#ifdef TAUTILT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long t = 0; t <= bound; ++t)
    branches[t] = run_branch(q, bound, target, per_branch, t);
  return merge_branches(branches);
}

PositivityVerdict is_weakly_positive(const TitsForm& q, SearchOptions opt) {
  if (q.n > opt.max_n)
    throw resource_error("weak positivity search too large: n = " +
                         std::to_string(q.n) + " exceeds cap " +
                         std::to_string(opt.max_n));
  BoxSearchOutcome out = opt.serial
                             ? search_box_serial(q, opt.bound, 0, opt.node_budget)
                             : search_box_parallel(q, opt.bound, 0, opt.node_budget);
  if (out.budget_exhausted)
    throw resource_error("weak positivity search ran out of node budget");
  PositivityVerdict v;
  v.nodes_visited = out.nodes;
  v.minimality_trusted = q.minimality_trusted;
  if (out.witness) {
    // re-check the certificate before emitting it
    if (q.evaluate(*out.witness) > 0)
      throw std::logic_error("search returned a non-certificate");
    v.status = Positivity::not_weakly_positive;
    v.certificate = out.witness;
  } else {
    v.status = Positivity::weakly_positive;
  }
  return v;
}

std::optional<std::vector<long long>> search_nonnegativity_violation(
    const TitsForm& q, int bound, SearchOptions opt) {
  if (bound < 1) throw input_error("violation search needs bound >= 1");
  BoxSearchOutcome out = opt.serial
                             ? search_box_serial(q, bound, -1, opt.node_budget)
                             : search_box_parallel(q, bound, -1, opt.node_budget);
  if (out.budget_exhausted)
    throw resource_error("violation search ran out of node budget");
  if (out.witness && q.evaluate(*out.witness) >= 0)
    throw std::logic_error("search returned a non-certificate");
  return out.witness;
}

}  // namespace tautilt
