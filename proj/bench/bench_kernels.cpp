// Timing harness for the two parallel kernels against their serial
// reference implementations: the box search behind the positivity verdicts
// and the layer expansion behind the exchange-graph walk.  Every pair of
// runs is also checked for identical results, so a divergence shows up here
// before it would in a test.
//
//   bench_kernels [--quick]
//
// --quick drops the long instances; the full battery takes a few minutes.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/counts.hpp"
#include "tautilt/families.hpp"
#include "tautilt/tauenum.hpp"
#include "tautilt/tits.hpp"

using namespace tautilt;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_box(const std::string& fam, int bound, long long target,
               uint64_t budget) {
  TitsForm q = tits_form(make_family(fam).bq);

  auto t0 = std::chrono::steady_clock::now();
  BoxSearchOutcome ser = search_box_serial(q, bound, target, budget);
  double t_ser = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  BoxSearchOutcome par = search_box_parallel(q, bound, target, budget);
  double t_par = ms_since(t0);

  bool same = ser.witness == par.witness &&
              ser.budget_exhausted == par.budget_exhausted;
  std::string outcome = ser.budget_exhausted ? "budget out"
                        : ser.witness        ? "witness"
                                             : "clean box";
  std::printf("box   %-16s bound %-2d target %-3lld  %10.1f ms %10.1f ms  x%-5.2f  %-10s %s\n",
              fam.c_str(), bound, target, t_ser, t_par,
              t_par > 0 ? t_ser / t_par : 0.0, outcome.c_str(),
              same ? "agree" : "DIVERGE");
}

void bench_walk(const std::string& fam) {
  Algebra A = build_algebra(make_family(fam).bq);

  EnumOptions opt;
  opt.serial = true;
  auto t0 = std::chrono::steady_clock::now();
  EnumResult ser = enumerate_support_tau_tilting(A, opt);
  double t_ser = ms_since(t0);

  opt.serial = false;
  t0 = std::chrono::steady_clock::now();
  EnumResult par = enumerate_support_tau_tilting(A, opt);
  double t_par = ms_since(t0);

  bool same = ser.nodes.size() == par.nodes.size() &&
              ser.edges.size() == par.edges.size() &&
              counts_by_rank(ser) == counts_by_rank(par);
  std::printf("walk  %-16s %zu pairs, %zu edges     %10.1f ms %10.1f ms  x%-5.2f  %s\n",
              fam.c_str(), ser.nodes.size(), ser.edges.size(), t_ser, t_par,
              t_par > 0 ? t_ser / t_par : 0.0, same ? "agree" : "DIVERGE");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) {
      quick = true;
    } else {
      std::fprintf(stderr, "usage: bench_kernels [--quick]\n");
      return 2;
    }
  }

  std::printf("%-45s %13s %13s  %-6s  outcome\n", "instance", "serial",
              "parallel", "ratio");

  // box search: one witness hit, one clean exhaustive scan, then the wide
  // boxes where pruning has real work to do
  bench_box("shifted:9,2", 8, -1, 1'000'000'000);
  bench_box("shifted:8,2", 8, -1, 1'000'000'000);
  bench_box("shifted:6,5", 8, -1, 1'000'000'000);
  if (!quick) {
    bench_box("shifted:8,2", 10, -1, 2'000'000'000);
    bench_box("shifted:6,5", 12, -1, 4'000'000'000);
  }

  // exchange-graph walks: small, medium, and a wide two-column grid
  bench_walk("lambda:6");
  bench_walk("lambda:7");
  if (!quick) {
    bench_walk("grid:2,4");
    bench_walk("auslander_a:4");
  }
  return 0;
}
