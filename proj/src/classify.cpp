#include "tautilt/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tautilt/families.hpp"
#include "tautilt/tauenum.hpp"

namespace tautilt {

const char* to_string(Finiteness f) {
  switch (f) {
    case Finiteness::finite: return "tau-finite";
    case Finiteness::infinite: return "tau-infinite";
    default: return "unknown";
  }
}

namespace {

bool is_hook(const std::vector<int>& parts) {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] != 1) return false;
  return true;
}

std::string shape_label(const std::vector<int>& parts) {
  return "(" + format_parts(parts) + ")";
}

}  // namespace

ListVerdict classify_staircase(const Partition& la) {
  const std::vector<int>& p = la.parts;
  ListVerdict v;

  bool family = false;
  std::string which;
  if (is_hook(p)) {
    family = true;
    which = "a hook";
  } else if (p.size() == 2 && p[1] == 2) {
    family = true;
    which = "two rows with second row 2";
  } else if (p.size() >= 2 && p[0] == 2 && p[1] == 2 &&
             std::all_of(p.begin() + 2, p.end(), [](int x) { return x == 1; })) {
    family = true;
    which = "two columns with second column 2";
  }

  static const std::vector<std::vector<int>> kMinimalInfinite = {
      {4, 3, 1}, {3, 3, 2}, {3, 2, 2, 1}, {4, 2, 1, 1}};
  bool exceptional =
      std::find(kMinimalInfinite.begin(), kMinimalInfinite.end(), p) !=
      kMinimalInfinite.end();

  if (family) {
    v.tau = Finiteness::finite;
    v.rep_type = "finite";
    v.evidence = "shape " + shape_label(p) + " is " + which +
                 ", one of the always-finite shape families";
  } else if (la.sum() <= 8 && !exceptional) {
    v.tau = Finiteness::finite;
    v.rep_type = "finite";
    v.evidence = "shape " + shape_label(p) +
                 " has at most 8 boxes and avoids the four minimal infinite shapes";
  } else if (exceptional) {
    v.tau = Finiteness::infinite;
    v.rep_type = "unknown";
    v.evidence = "shape " + shape_label(p) + " is one of the four minimal infinite shapes";
  } else {
    v.tau = Finiteness::infinite;
    v.rep_type = "unknown";
    v.evidence = "shape " + shape_label(p) +
                 " has more than 8 boxes and lies outside the finite shape families";
  }
  return v;
}

ListVerdict classify_shifted(const ShiftedPartition& la) {
  const std::vector<int>& p = la.parts;
  ListVerdict v;

  static const std::vector<std::vector<int>> kFinite = {
      {3, 2}, {4, 2}, {5, 2}, {6, 2}, {4, 3},
      {5, 3}, {5, 4}, {3, 2, 1}, {4, 2, 1}};
  bool fin = false;
  if (p.size() == 1) fin = true;                    // one row
  else if (p.size() == 2 && p[1] == 1) fin = true;  // (k, 1)
  else if (std::find(kFinite.begin(), kFinite.end(), p) != kFinite.end())
    fin = true;

  if (fin) {
    v.tau = Finiteness::finite;
    v.rep_type = "finite";
    v.evidence = "shifted shape " + shape_label(p) +
                 " is on the finite list, so the pairs are finite in number";
    return v;
  }

  static const std::vector<std::vector<int>> kConcealed = {{6, 3}, {7, 2}, {5, 2, 1}};
  if (std::find(kConcealed.begin(), kConcealed.end(), p) != kConcealed.end()) {
    v.tau = Finiteness::infinite;
    v.rep_type = "tame concealed";
    v.evidence = "shifted shape " + shape_label(p) + " is tame concealed";
    return v;
  }
  static const std::vector<std::vector<int>> kTame = {
      {6, 4}, {4, 3, 1}, {4, 3, 2}, {4, 3, 2, 1}};
  if (std::find(kTame.begin(), kTame.end(), p) != kTame.end()) {
    v.tau = Finiteness::infinite;
    v.rep_type = "tame";
    v.evidence = "shifted shape " + shape_label(p) + " is tame but not concealed";
    return v;
  }

  v.tau = Finiteness::infinite;
  v.rep_type = "wild";
  v.evidence = "shifted shape " + shape_label(p) + " is wild";
  return v;
}

ListVerdict classify_family(const std::string& spec) {
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto int_args = [&](size_t count) {
    std::vector<int> out;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.size() != count)
      throw input_error("family '" + name + "' expects " +
                        std::to_string(count) + " integer argument(s)");
    return out;
  };

  ListVerdict v;
  if (name == "staircase") return classify_staircase(parse_partition(args));
  if (name == "shifted") return classify_shifted(parse_shifted_partition(args));
  if (name == "linear_a" || name == "d" || name == "lambda" || name == "a1") {
    (void)int_args(1);
    v.tau = Finiteness::finite;
    v.rep_type = "finite";
    v.evidence = "family '" + name + "' is representation-finite for every size";
    return v;
  }
  if (name == "triangle") {
    int n = int_args(1)[0];
    if (n <= 3) {
      v.tau = Finiteness::finite;
      v.rep_type = "finite";
      v.evidence = "triangles with at most 3 rows are on the finite list";
    } else {
      v.tau = Finiteness::infinite;
      v.rep_type = "unknown";
      v.evidence = "triangles with 4 or more rows contain an infinite shifted shape";
    }
    return v;
  }
  if (name == "grid") {
    auto a = int_args(2);
    int m = std::min(a[0], a[1]), n = std::max(a[0], a[1]);
    if (m == 1 || (m == 2 && n <= 4)) {
      v.tau = Finiteness::finite;
      v.rep_type = "finite";
      v.evidence = "grids with one row, or two rows of length at most 4, are finite";
    } else {
      v.tau = Finiteness::infinite;
      v.rep_type = "unknown";
      v.evidence = "grid " + std::to_string(a[0]) + "x" + std::to_string(a[1]) +
                   " exceeds the finite grid list";
    }
    return v;
  }
  if (name == "auslander_a") {
    (void)int_args(1);
    v.tau = Finiteness::unknown;
    v.rep_type = "unknown";
    v.evidence = "no list covers this family; enumerate instead";
    return v;
  }
  throw input_error("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------

SeparationReport separation_property(const Algebra& A, uint64_t p) {
  const Quiver& q = A.bq.q;
  for (int i = 0; i < q.n; ++i) {
    Rep P = projective_rep(A, p, i);
    RadicalTop rt = radical_and_top(P);
    if (rt.radical.is_zero()) continue;
    auto pieces = decompose(rt.radical);
    if (pieces.size() <= 1 && (pieces.empty() || pieces[0].second == 1)) continue;

    // cut quiver at i: drop i and everything with a path into i
    std::vector<char> kept(q.n, 0);
    for (int u = 0; u < q.n; ++u)
      if (u != i && !q.path_exists(u, i)) kept[u] = 1;
    std::vector<int> comp(q.n, -1);
    int ncomp = 0;
    for (int s = 0; s < q.n; ++s) {
      if (!kept[s] || comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const Arrow& ar : q.arrows) {
          int w = -1;
          if (ar.src == u && kept[ar.dst]) w = ar.dst;
          if (ar.dst == u && kept[ar.src]) w = ar.src;
          if (w >= 0 && comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
      }
      ++ncomp;
    }

    std::vector<int> seen;
    for (const auto& [piece, mult] : pieces) {
      if (mult > 1)
        return {false, "vertex " + std::to_string(i + 1) +
                           ": a radical summand repeats, so two summands share "
                           "every component"};
      int c = -1;
      for (int v : piece.support()) {
        if (comp[v] < 0)
          throw std::logic_error("radical support escaped the cut quiver");
        if (c < 0) c = comp[v];
        else if (c != comp[v])
          throw std::logic_error("indecomposable summand with disconnected support");
      }
      if (std::find(seen.begin(), seen.end(), c) != seen.end())
        return {false, "vertex " + std::to_string(i + 1) +
                           ": two radical summands land in one component of the "
                           "cut quiver"};
      seen.push_back(c);
    }
  }
  return {true, "each radical summand occupies its own component of the cut quiver"};
}

TitsRouteVerdict tau_finiteness_via_tits(const Algebra& A,
                                         const SearchOptions& search,
                                         bool assume_separation, uint64_t p) {
  TitsRouteVerdict v;
  if (!assume_separation) {
    SeparationReport sep = separation_property(A, p);
    if (!sep.holds) {
      v.tau = Finiteness::unknown;
      v.reason = "the form does not decide here: " + sep.detail;
      return v;
    }
  }
  TitsForm q = tits_form(A.bq);
  PositivityVerdict pv = is_weakly_positive(q, search);
  if (pv.status == Positivity::weakly_positive) {
    v.tau = Finiteness::finite;
    v.reason = "the form is weakly positive on the search box";
  } else {
    v.tau = Finiteness::infinite;
    std::ostringstream o;
    o << "nonzero nonnegative vector with form value <= 0: (";
    for (size_t k = 0; k < pv.certificate->size(); ++k)
      o << (k ? "," : "") << (*pv.certificate)[k];
    o << ")";
    v.reason = o.str();
    v.witness = *pv.certificate;
  }
  return v;
}

SincereSearchResult sincere_search(const Algebra& A, uint64_t p, long long node_cap) {
  SincereSearchResult r;
  const Quiver& q = A.bq.q;
  if (q.n > 1 && !q.is_connected()) {
    r.status = SincereStatus::none;
    r.note = "disconnected quiver: every indecomposable misses a component";
    return r;
  }
  for (int i = 0; i < q.n; ++i) {
    Rep P = projective_rep(A, p, i);
    if (static_cast<int>(P.support().size()) == q.n) {
      r.status = SincereStatus::found;
      r.module = std::move(P);
      r.note = "projective at vertex " + std::to_string(i + 1) + " is sincere";
      return r;
    }
  }
  EnumOptions eo;
  eo.p = p;
  eo.node_cap = node_cap;
  EnumResult er = enumerate_support_tau_tilting(A, eo);
  for (const RegisteredModule& m : er.registry->store)
    if (static_cast<int>(m.rep.support().size()) == q.n) {
      r.status = SincereStatus::found;
      r.module = m.rep;
      r.note = "sincere summand found in the exchange graph";
      return r;
    }
  if (er.complete) {
    r.status = SincereStatus::none;
    r.note = "complete exchange graph holds no sincere rigid indecomposable";
  } else {
    r.status = SincereStatus::none_up_to_cap;
    r.note = "no sincere rigid indecomposable among the first " +
             std::to_string(er.registry->store.size()) + " summands (walk capped)";
  }
  return r;
}

namespace {

struct ReduceCtx {
  const ReductionOptions& opts;
  std::map<std::string, ReductionVerdict> memo;
};

ReductionVerdict reduce_bound_quiver(const BoundQuiver& bq, ReduceCtx& ctx);

ReductionVerdict reduce_connected(const BoundQuiver& bq, ReduceCtx& ctx) {
  Algebra A = build_algebra(bq);
  auto it = ctx.memo.find(A.canonical_text());
  if (it != ctx.memo.end()) return it->second;

  ReductionVerdict out;
  bool decided = false;

  try {
    TitsRouteVerdict tv = tau_finiteness_via_tits(A, ctx.opts.search,
                                                  ctx.opts.assume_separation,
                                                  ctx.opts.p);
    if (tv.tau != Finiteness::unknown) {
      out.tau = tv.tau;
      out.reason = "form: " + tv.reason;
      decided = true;
    }
  } catch (const resource_error&) {
    // instance too large for the box search; fall through
  }

  if (!decided) {
    EnumOptions eo;
    eo.p = ctx.opts.p;
    eo.node_cap = ctx.opts.enum_cap;
    EnumResult er = enumerate_support_tau_tilting(A, eo);
    if (er.complete) {
      out.tau = Finiteness::finite;
      out.reason = "exchange graph exhausted: " +
                   std::to_string(er.nodes.size()) + " pairs";
      decided = true;
    }
  }

  if (!decided) {
    bool all_proper_finite = true;
    for (int v = 0; v < A.n() && !decided; ++v) {
      QuotientComponents qc = vertex_quotient(A.bq, v);
      Finiteness level = Finiteness::finite;
      std::string why;
      for (const BoundQuiver& comp : qc.components) {
        ReductionVerdict cv = reduce_connected(comp, ctx);
        if (cv.tau == Finiteness::infinite) {
          level = Finiteness::infinite;
          why = cv.reason;
          break;
        }
        if (cv.tau == Finiteness::unknown) level = Finiteness::unknown;
      }
      if (level == Finiteness::infinite) {
        out.tau = Finiteness::infinite;
        out.reason = "deleting vertex " + std::to_string(v + 1) +
                     " already leaves infinitely many pairs (" + why + ")";
        decided = true;
      } else if (level == Finiteness::unknown) {
        all_proper_finite = false;
      }
    }
    if (!decided) {
      out.tau = Finiteness::unknown;
      out.reason = all_proper_finite
                       ? "every proper support level is finite; the sincere "
                         "level stays undecided"
                       : "undecided already below the sincere level";
    }
  }

  ctx.memo.emplace(A.canonical_text(), out);
  return out;
}

ReductionVerdict reduce_bound_quiver(const BoundQuiver& bq, ReduceCtx& ctx) {
  if (bq.q.n == 0) return {Finiteness::finite, "empty algebra"};
  QuotientComponents comps = split_components(bq);
  if (comps.components.size() == 1) return reduce_connected(comps.components[0], ctx);
  bool any_unknown = false;
  for (size_t k = 0; k < comps.components.size(); ++k) {
    ReductionVerdict cv = reduce_connected(comps.components[k], ctx);
    if (cv.tau == Finiteness::infinite) {
      std::string label;
      for (int ov : comps.original_vertices[k])
        label += (label.empty() ? "" : ",") + std::to_string(ov + 1);
      return {Finiteness::infinite,
              "component {" + label + "}: " + cv.reason};
    }
    if (cv.tau == Finiteness::unknown) any_unknown = true;
  }
  if (any_unknown) return {Finiteness::unknown, "some component is undecided"};
  return {Finiteness::finite, "every component has finitely many pairs"};
}

}  // namespace

ReductionVerdict nonsincere_reduction(const Algebra& A, const ReductionOptions& opts) {
  ReduceCtx ctx{opts, {}};
  return reduce_bound_quiver(A.bq, ctx);
}

// ---------------------------------------------------------------------------

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out, bool strict) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  int top = std::min(max_part, remaining);
  for (int part = top; part >= 1; --part) {
    prefix.push_back(part);
    gen_partitions(remaining - part, strict ? part - 1 : part, prefix, out, strict);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out, false);
  return out;
}

std::vector<ShiftedPartition> strict_partitions_of(int n) {
  std::vector<Partition> raw;
  if (n >= 1) {
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, raw, true);
  }
  std::vector<ShiftedPartition> out;
  for (Partition& p : raw) out.push_back(ShiftedPartition{std::move(p.parts)});
  return out;
}

namespace {

CrossCheckReport cross_check_run(int max_boxes, const SearchOptions& search,
                                 bool shifted) {
  CrossCheckReport rep;
  for (int n = 1; n <= max_boxes; ++n) {
    std::vector<std::pair<FamilyAlgebra, bool>> cases;  // algebra, list-finite
    if (shifted) {
      for (const ShiftedPartition& la : strict_partitions_of(n))
        cases.emplace_back(shifted_staircase(la),
                           classify_shifted(la).tau == Finiteness::finite);
    } else {
      for (const Partition& la : partitions_of(n))
        cases.emplace_back(staircase(la),
                           classify_staircase(la).tau == Finiteness::finite);
    }
    for (auto& [fam, list_finite] : cases) {
      TitsForm q = tits_form(fam.bq);
      PositivityVerdict pv = is_weakly_positive(q, search);
      CrossCheckItem item;
      item.label = fam.name;
      item.list_finite = list_finite;
      item.form_finite = (pv.status == Positivity::weakly_positive);
      item.agree = (item.list_finite == item.form_finite);
      if (!item.agree) rep.all_agree = false;
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

}  // namespace

CrossCheckReport cross_check_staircase(int max_boxes, const SearchOptions& search) {
  return cross_check_run(max_boxes, search, false);
}

CrossCheckReport cross_check_shifted(int max_boxes, const SearchOptions& search) {
  return cross_check_run(max_boxes, search, true);
}

}  // namespace tautilt
