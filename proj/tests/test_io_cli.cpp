#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tautilt/families.hpp"
#include "tautilt/textio.hpp"
#include "tautilt/tits.hpp"

using namespace tautilt;
using nlohmann::json;

namespace {

struct CmdResult {
  int rc = -1;
  std::string out;
  std::string err;
};

// run the installed binary through /bin/sh, keeping the two streams apart
CmdResult run_cli(const std::string& args, const std::string& env = "") {
  static int serial = 0;
  std::string err_file = "/tmp/tautilt_cli_err_" + std::to_string(getpid()) +
                         "_" + std::to_string(serial++);
  std::string cmd = (env.empty() ? "" : env + " ") +
                    std::string(TAUTILT_CLI_PATH) + " " + args + " 2>" +
                    err_file;
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream ef(err_file);
  std::stringstream es;
  es << ef.rdbuf();
  r.err = es.str();
  std::remove(err_file.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("io-cli") {
  TEST_CASE("construct prints the shape numbers") {
    CmdResult r = run_cli("construct --staircase 3,3,2");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "8 vertices, 10 arrows, 3 relations"));
    CHECK(contains(r.out, "dimension 27"));

    CmdResult lam = run_cli("construct --family lambda:4");
    CHECK(lam.rc == 0);
    CHECK(contains(lam.out, "4 vertices"));
    CHECK(contains(lam.out, "rel 1*1.3 - 1*2.4"));

    CmdResult sh = run_cli("construct --shifted 4,3,2,1");
    CHECK(contains(sh.out, "10 vertices"));

    // exponent syntax for repeated parts
    CmdResult ex = run_cli("construct --staircase 2^2,1^3");
    CHECK(contains(ex.out, "7 vertices"));
  }

  TEST_CASE("emitted quiver text round-trips") {
    CmdResult r = run_cli("construct --staircase 2,2 --emit-quiver");
    REQUIRE(r.rc == 0);
    BoundQuiver parsed = parse_quiver_text(r.out);
    CHECK(emit_quiver_text(parsed) == r.out);
    CHECK(r.out == emit_quiver_text(staircase({{2, 2}}).bq));
  }

  TEST_CASE("construct json") {
    CmdResult r = run_cli("construct --shifted 4,3,2,1 --json");
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["vertices"] == 10);
    CHECK(j["arrows"] == 12);
    CHECK(j["relations"] == 3);
    CHECK(j["dimension"] == 50);
    BoundQuiver parsed = parse_quiver_text(j["quiver"].get<std::string>());
    CHECK(parsed.q.n == 10);
    // parse(emit(x)) == x
    CHECK(json::parse(j.dump()) == j);
  }

  TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("construct").rc == 2);
    CHECK(run_cli("construct --staircase 3 --family d:4").rc == 2);
    CHECK(run_cli("construct --staircase 1,2").rc == 2);
    CHECK(run_cli("construct --quiver /no/such/file").rc == 2);
    CHECK(run_cli("enumerate --family lambda:4 --p 32004").rc == 2);
    CHECK(run_cli("enumerate --family lambda:4 --cap 0").rc == 2);
    CHECK(run_cli("tits --staircase 3,3 --eval 1,2").rc == 2);
    CHECK(run_cli("enumerate --staircase 3,3 --verify-recursions").rc == 2);
    CHECK(run_cli("nosuchcommand").rc == 2);
  }

  TEST_CASE("tits output matches the library") {
    CmdResult r = run_cli("tits --shifted 6,4");
    REQUIRE(r.rc == 0);
    CHECK(contains(r.out, "verdict: not_weakly_positive"));
    CHECK(contains(r.out, "certificate: "));

    // the printed matrix is the library's doubled gram, row by row
    TitsForm q = tits_form(shifted_staircase({{6, 4}}).bq);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    REQUIRE(line == "gram2:");
    for (int i = 0; i < q.n; ++i) {
      REQUIRE(std::getline(lines, line));
      std::istringstream row(line);
      for (int jx = 0; jx < q.n; ++jx) {
        long long v;
        REQUIRE(static_cast<bool>(row >> v));
        CHECK(v == q.gram2[i][jx]);
      }
    }

    CHECK(contains(run_cli("tits --staircase 9").out,
                   "verdict: weakly_positive"));
  }

  TEST_CASE("tits evaluation and violation search") {
    CmdResult ev = run_cli("tits --shifted 6,5 --eval 2,1,1,2,3,2,1,2,3,3,3");
    CHECK(ev.rc == 0);
    CHECK(contains(ev.out, "q(2,1,1,2,3,2,1,2,3,3,3) = 8"));

    CmdResult hit = run_cli("tits --shifted 5,3,1 --violation-search 6");
    CHECK(hit.rc == 0);
    CHECK(contains(hit.out, "violation: "));
    CHECK(contains(hit.out, "(q = -"));

    CmdResult miss = run_cli("tits --staircase 4,2 --violation-search 6");
    CHECK(miss.rc == 0);
    CHECK(contains(miss.out, "no violation in the box {0..6}^6"));
  }

  TEST_CASE("tits json") {
    CmdResult r = run_cli("tits --staircase 2,2 --json --eval 1,1,1,1");
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "weakly_positive");
    CHECK(j["certificate"].is_null());
    CHECK(j["gram2"][0] == json::array({2, -1, -1, 1}));
    CHECK(j["eval_value"] == 1);
    CHECK(json::parse(j.dump()) == j);
  }

  TEST_CASE("enumerate prints the counts row") {
    CmdResult r = run_cli("enumerate --family lambda:4");
    CHECK(r.rc == 0);
    CHECK(r.out == "1 4 10 16 15 | 46\n");
    CHECK(run_cli("enumerate --family linear_a:3").out == "1 3 5 5 | 14\n");
  }

  TEST_CASE("a capped walk is inconclusive, exit code 3") {
    CmdResult r = run_cli("enumerate --family lambda:4 --cap 10");
    CHECK(r.rc == 3);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "inconclusive: cap"));
  }

  TEST_CASE("enumerate json") {
    CmdResult r = run_cli("enumerate --family lambda:4 --json");
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["counts"] == json::array({1, 4, 10, 16, 15}));
    CHECK(j["total"] == 46);
    CHECK(j["complete"] == true);
    CHECK(j["nodes"].size() == 46);
    CHECK(j["edges"].size() == 92);
    // the root pair: all four projectives, full 1-based support
    CHECK(j["nodes"][0]["rank"] == 4);
    CHECK(j["nodes"][0]["support"] == json::array({1, 2, 3, 4}));
    CHECK(j["nodes"][0]["g"].size() == 4);
    for (const json& e : j["edges"]) {
      CHECK(e["parent"].get<int>() >= 0);
      CHECK(e["child"].get<int>() < 46);
    }
    CHECK(json::parse(j.dump()) == j);
  }

  TEST_CASE("cache replays byte-identical output") {
    std::string dir =
        "/tmp/tautilt_cli_test_cache_" + std::to_string(getpid());
    std::filesystem::remove_all(dir);
    std::string env = "TAUTILT_CACHE_DIR=" + dir;

    CmdResult cold = run_cli("enumerate --family lambda:5", env);
    REQUIRE(cold.rc == 0);
    CHECK(!contains(cold.err, "cache hit"));

    CmdResult warm = run_cli("enumerate --family lambda:5", env);
    CHECK(warm.rc == 0);
    CHECK(warm.out == cold.out);
    CHECK(contains(warm.err, "cache hit"));

    // a different flag set misses
    CmdResult other = run_cli("enumerate --family lambda:5 --json", env);
    CHECK(other.rc == 0);
    CHECK(!contains(other.err, "cache hit"));

    size_t entries = 0;
    for (const auto& de : std::filesystem::directory_iterator(dir)) {
      CHECK(de.path().extension() == ".out");
      ++entries;
    }
    CHECK(entries == 2);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("recursion report appends to the row") {
    CmdResult r = run_cli("enumerate --family lambda:5 --verify-recursions");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "1 5 15 33 54 52 | 160"));
    CHECK(contains(r.out, "all identities hold"));
    CHECK(!contains(r.out, "MISMATCH"));

    CmdResult a = run_cli("enumerate --family a1:4 --verify-recursions");
    CHECK(a.rc == 0);
    CHECK(contains(a.out, "all identities hold"));
  }

  TEST_CASE("classify verdicts and exit codes") {
    CmdResult inf = run_cli("classify --staircase 4,3,1");
    CHECK(inf.rc == 0);
    CHECK(contains(inf.out, "tau-infinite"));

    CmdResult tc = run_cli("classify --shifted 7,2");
    CHECK(tc.rc == 0);
    CHECK(contains(tc.out, "tame concealed"));

    CmdResult fin = run_cli("classify --family grid:2,4");
    CHECK(fin.rc == 0);
    CHECK(contains(fin.out, "tau-finite"));

    CmdResult unk = run_cli("classify --family auslander_a:4");
    CHECK(unk.rc == 3);
    CHECK(contains(unk.out, "unknown"));

    CmdResult j = run_cli("classify --shifted 8,2 --json");
    CHECK(j.rc == 0);
    json v = json::parse(j.out);
    CHECK(v["verdict"] == "tau-infinite");
    CHECK(v["type"] == "wild");
    CHECK(json::parse(v.dump()) == v);
  }

  TEST_CASE("classify cross-check agrees with itself") {
    CmdResult r = run_cli("classify --staircase 2,2 --cross-check");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "cross-check form: tau-finite"));
    CHECK(contains(r.out, "cross-check enumeration: "));
    CHECK(contains(r.out, "tau-finite ("));
  }

  TEST_CASE("a raw quiver goes through the layered procedure") {
    std::string file = "/tmp/tautilt_cli_test_cycle_" +
                       std::to_string(getpid()) + ".quiver";
    std::ofstream(file) << "vertices 4\narrow 1 1 2\narrow 2 1 3\n"
                           "arrow 3 2 4\narrow 4 3 4\n";
    CmdResult r = run_cli("classify --quiver " + file + " --cap 30");
    CHECK(r.rc == 3);
    CHECK(contains(r.out, "unknown"));
    std::remove(file.c_str());
  }
}
