#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tautilt/algebra.hpp"
#include "tautilt/families.hpp"
#include "tautilt/textio.hpp"

using namespace tautilt;

TEST_SUITE("quiver-core") {
  TEST_CASE("staircase of (3,3,2)") {
    FamilyAlgebra fam = staircase({{3, 3, 2}});
    CHECK(fam.name == "staircase(3^2,2)");
    CHECK(fam.bq.q.n == 8);
    CHECK(fam.bq.q.arrows.size() == 10);
    CHECK(fam.bq.rels.size() == 3);
    Algebra A = build_algebra(fam.bq);
    CHECK(A.dim == 27);
    CHECK(A.dim == oracle::algebra_dimension(fam.bq));
  }

  TEST_CASE("square with tail") {
    FamilyAlgebra fam = family_lambda(4);
    CHECK(fam.bq.q.n == 4);
    CHECK(fam.bq.q.arrows.size() == 4);
    CHECK(fam.bq.rels.size() == 1);
    Algebra A = build_algebra(fam.bq);
    CHECK(A.dim == 9);
    CHECK(A.dim == oracle::algebra_dimension(fam.bq));
    // the two length-2 paths are identified: slice (1,4) is one-dimensional
    CHECK(A.at(0, 3).dim() == 1);

    // n = 3 degenerates to 2 <- 1 -> 3
    FamilyAlgebra small = family_lambda(3);
    CHECK(small.bq.q.n == 3);
    CHECK(small.bq.q.arrows.size() == 2);
    CHECK(small.bq.rels.empty());
  }

  TEST_CASE("line, two-source tail, and truncated line") {
    CHECK(build_algebra(linear_a(5).bq).dim == 15);
    CHECK(build_algebra(family_d(4).bq).dim == 9);
    FamilyAlgebra a1 = family_a1(4);
    CHECK(a1.bq.rels.size() == 1);
    CHECK(build_algebra(a1.bq).dim == 8);
    CHECK(family_a1(2).bq.rels.empty());
  }

  TEST_CASE("grid and triangle are the advertised diagram shapes") {
    FamilyAlgebra g = grid(2, 5);
    CHECK(g.bq.q.n == 10);
    CHECK(g.name == "grid(2,5)");
    CHECK(emit_quiver_text(triangle(4).bq) ==
          emit_quiver_text(shifted_staircase({{4, 3, 2, 1}}).bq));
    // mesh relations on top of the triangle
    FamilyAlgebra aus = auslander_a(4);
    CHECK(aus.bq.q.n == 10);
    CHECK(build_algebra(aus.bq).dim == 35);
  }

  TEST_CASE("family spec strings") {
    CHECK(make_family("lambda:4").name == "lambda(4)");
    CHECK(make_family("grid:2,4").name == "grid(2,4)");
    CHECK(make_family("staircase:3,3,2").name == "staircase(3^2,2)");
    CHECK(make_family("shifted:6,4").name == "shifted(6,4)");
    CHECK_THROWS_AS(make_family("lambda:2"), input_error);
    CHECK_THROWS_AS(make_family("nosuch:3"), input_error);
    CHECK_THROWS_AS(make_family("grid:2"), input_error);
  }

  TEST_CASE("partition parsing and rendering") {
    CHECK(parse_partition("3,3,2").parts == std::vector<int>{3, 3, 2});
    CHECK(parse_partition("2^2,1^3").parts ==
          std::vector<int>{2, 2, 1, 1, 1});
    CHECK(format_parts({3, 3, 2}) == "3^2,2");
    CHECK(format_parts({2, 2, 1, 1, 1}) == "2^2,1^3");
    CHECK(parse_partition(format_parts({6, 4, 4, 1})).parts ==
          std::vector<int>{6, 4, 4, 1});
    CHECK_THROWS_AS(parse_partition(""), input_error);
    CHECK_THROWS_AS(parse_partition("3,4"), input_error);
    CHECK_THROWS_AS(parse_partition("0"), input_error);
    CHECK_THROWS_AS(parse_partition("2^0"), input_error);
    CHECK_THROWS_AS(parse_shifted_partition("4,4"), input_error);
    CHECK(parse_shifted_partition("6,4").parts == std::vector<int>{6, 4});
  }

  TEST_CASE("transpose and shifted containment") {
    CHECK(transpose_partition({{3, 3, 2}}).parts == std::vector<int>{3, 3, 2});
    CHECK(transpose_partition({{5, 1}}).parts ==
          std::vector<int>{2, 1, 1, 1, 1});
    CHECK(shifted_contains({{6, 4}}, {{4, 3}}));
    CHECK(shifted_contains({{6, 4}}, {{6, 4}}));
    CHECK(!shifted_contains({{4, 3}}, {{6, 4}}));
    CHECK(!shifted_contains({{6}}, {{3, 2}}));
  }

  TEST_CASE("convex restriction") {
    BoundQuiver lam = family_lambda(4).bq;
    // dropping vertex 3 cuts the path 1 -> 3 -> 4
    try {
      convex_restriction(lam, {0, 1, 3});
      FAIL("expected a convexity failure");
    } catch (const convexity_error& e) {
      CHECK(e.witness_vertices == std::vector<int>{1, 3, 4});
    }

    BoundQuiver tail = convex_restriction(linear_a(4).bq, {1, 2});
    CHECK(tail.q.n == 2);
    CHECK(tail.q.arrows.size() == 1);

    // dropping the far corner of the 2x2 square keeps a 3-vertex hook and
    // loses the commutativity generator with it
    BoundQuiver hook = convex_restriction(staircase({{2, 2}}).bq, {0, 1, 2});
    CHECK(hook.q.n == 3);
    CHECK(hook.q.arrows.size() == 2);
    CHECK(hook.rels.empty());

    CHECK_THROWS_AS(convex_restriction(lam, {}), input_error);
    CHECK_THROWS_AS(convex_restriction(lam, {7}), input_error);
  }

  TEST_CASE("vertex deletion") {
    BoundQuiver lam = family_lambda(4).bq;
    QuotientComponents qc = vertex_quotient(lam, 0);
    REQUIRE(qc.components.size() == 1);
    CHECK(qc.components[0].q.n == 3);
    CHECK(qc.components[0].q.arrows.size() == 2);
    CHECK(qc.components[0].rels.empty());
    CHECK(qc.original_vertices[0] == std::vector<int>{1, 2, 3});

    // deleting the middle of a line disconnects it
    QuotientComponents line = vertex_quotient(linear_a(3).bq, 1);
    REQUIRE(line.components.size() == 2);
    CHECK(line.components[0].q.n == 1);
    CHECK(line.components[1].q.n == 1);

    // a two-term square generator with one leg gone turns monomial
    QuotientComponents sq = vertex_quotient(staircase({{2, 2}}).bq, 1);
    REQUIRE(sq.components.size() == 1);
    CHECK(sq.components[0].q.n == 3);
    REQUIRE(sq.components[0].rels.size() == 1);
    CHECK(sq.components[0].rels[0].terms.size() == 1);

    CHECK_THROWS_AS(vertex_quotient(lam, 9), input_error);
    CHECK_THROWS_AS(vertex_quotient(linear_a(1).bq, 0), input_error);
  }

  TEST_CASE("component split") {
    // two lines glued into one quiver text
    BoundQuiver bq = parse_quiver_text(
        "vertices 4\narrow 1 1 2\narrow 2 3 4\n");
    QuotientComponents qc = split_components(bq);
    REQUIRE(qc.components.size() == 2);
    CHECK(qc.original_vertices[0] == std::vector<int>{0, 1});
    CHECK(qc.original_vertices[1] == std::vector<int>{2, 3});
  }

  TEST_CASE("quiver text round trips") {
    for (const FamilyAlgebra& fam :
         {staircase({{3, 3, 2}}), family_lambda(5), auslander_a(3),
          shifted_staircase({{6, 4}})}) {
      std::string text = emit_quiver_text(fam.bq);
      CHECK(emit_quiver_text(parse_quiver_text(text)) == text);
    }

    // rational coefficients survive the trip
    std::string frac =
        "vertices 4\n"
        "arrow 1 1 2\narrow 2 1 3\narrow 3 2 4\narrow 4 3 4\n"
        "rel 1/2*1.3 - 2/3*2.4\n";
    std::string out = emit_quiver_text(parse_quiver_text(frac));
    CHECK(out.find("1/2*1.3") != std::string::npos);
    CHECK(out.find("2/3*2.4") != std::string::npos);
  }

  TEST_CASE("malformed text is rejected with a line number") {
    CHECK_THROWS_AS(parse_quiver_text("arrow 1 1 2\n"), input_error);
    try {
      parse_quiver_text("vertices 2\narrow 1 1 5\n");
      FAIL("expected a parse failure");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  TEST_CASE("structural validation") {
    BoundQuiver cyc;
    cyc.q.n = 2;
    cyc.q.push_arrow(0, 1);
    cyc.q.push_arrow(1, 0);
    CHECK_THROWS_AS(cyc.validate(), input_error);

    BoundQuiver loop;
    loop.q.n = 1;
    loop.q.push_arrow(0, 0);
    CHECK_THROWS_AS(loop.validate(), input_error);

    // relation terms must share endpoints
    BoundQuiver bad = family_lambda(4).bq;
    bad.rels[0].terms[1].second.pop_back();
    CHECK_THROWS_AS(bad.validate(), input_error);
  }

  TEST_CASE("path helpers") {
    Quiver q = linear_a(4).bq.q;
    CHECK(q.path_exists(0, 3));
    CHECK(!q.path_exists(3, 0));
    CHECK(q.path_exists(2, 2));
    CHECK(q.is_acyclic());
    CHECK(q.is_connected());
    auto topo = q.topo_order();
    REQUIRE(topo.has_value());
    CHECK(topo->front() == 0);
    CHECK(topo->back() == 3);
  }
}
