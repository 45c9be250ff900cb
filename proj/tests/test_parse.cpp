#include <catch2/catch_amalgamated.hpp>

#include "qhh/parse.hpp"
#include "support/common.hpp"

using namespace qhh;

TEST_CASE("parsing a full input with subalgebra block", "[parse]") {
  ParsedInput in = qhh::testing::load_fixture("kron2back.quiv");
  REQUIRE(in.quiver.vertex_count() == 2);
  REQUIRE(in.quiver.arrow_count() == 3);
  REQUIRE(in.relations.size() == 2);
  REQUIRE(in.subalgebra_name.has_value());
  REQUIRE(in.subalgebra_arrows == std::vector<std::string>{"alpha1", "alpha2"});

  SubalgebraPair pair = build_pair(in, FieldSpec::rationals());
  REQUIRE(pair.a.dim() == 7);
  REQUIRE(pair.b.dim() == 4);
}

TEST_CASE("inputs without a subalgebra block get the vertex span", "[parse]") {
  ParsedInput in = qhh::testing::load_fixture("loop.quiv");
  REQUIRE_FALSE(in.subalgebra_name.has_value());
  SubalgebraPair pair = build_pair(in, FieldSpec::prime(2));
  REQUIRE(pair.b_arrows.empty());
  REQUIRE(pair.b.dim() == 1);
  REQUIRE(pair.a.dim() == 2);
}

TEST_CASE("empty sections use (none)", "[parse]") {
  ParsedInput in = parse_input(
      "algebra pt\n"
      "vertices: 1 2\n"
      "arrows: (none)\n"
      "relations: (none)\n");
  REQUIRE(in.quiver.arrow_count() == 0);
  REQUIRE(in.relations.empty());

  ParsedInput sub = parse_input(
      "algebra pt\n"
      "vertices: 1\n"
      "arrows: (none)\n"
      "relations: (none)\n"
      "subalgebra triv\n"
      "arrows: (none)\n");
  REQUIRE(sub.subalgebra_name == "triv");
  REQUIRE(sub.subalgebra_arrows.empty());
}

TEST_CASE("comments and blank lines are skipped", "[parse]") {
  ParsedInput in = parse_input(
      "# leading comment\n"
      "\n"
      "algebra c  # trailing comment\n"
      "vertices: 1 2   # ids\n"
      "\n"
      "arrows: a: 1 -> 2\n"
      "relations: (none)\n");
  REQUIRE(in.algebra_name == "c");
  REQUIRE(in.quiver.arrow(0).name == "a");
}

TEST_CASE("parse errors carry line and column", "[parse]") {
  try {
    parse_input("algebra x\nvertices: 1 2\narrows: a: 1 => 2\nrelations: (none)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 3);
    REQUIRE(e.col >= 13);
  }

  REQUIRE_THROWS_AS(parse_input("algebra\n"), ParseError);
  REQUIRE_THROWS_AS(parse_input("algebra x\n"), ParseError);  // truncated input
  REQUIRE_THROWS_AS(parse_input("algebra x\nvertices: a b\n"), ParseError);
  REQUIRE_THROWS_AS(
      parse_input("algebra x\nvertices: 1\narrows: (none)\nrelations: (none)\njunk\n"),
      ParseError);
  REQUIRE_THROWS_AS(parse_input("algebra x\nvertices: 1\narrows: (none)\nrelations: (none)\n"
                                "subalgebra s\narrows: (none)\nextra\n"),
                    ParseError);
}

TEST_CASE("structural problems raise validation errors", "[parse]") {
  // Unknown arrow in a relation.
  REQUIRE_THROWS_AS(
      parse_input("algebra x\nvertices: 1 2\narrows: a: 1 -> 2\nrelations: a*b\n"),
      ValidationError);
  // Non-composable relation path.
  REQUIRE_THROWS_AS(
      parse_input("algebra x\nvertices: 1 2\narrows: a: 1 -> 2\nrelations: a*a\n"),
      ValidationError);
  // Arrow endpoint not declared.
  REQUIRE_THROWS_AS(
      parse_input("algebra x\nvertices: 1\narrows: a: 1 -> 2\nrelations: (none)\n"),
      ValidationError);
  // Subalgebra names a missing arrow (surfaces in build_pair).
  ParsedInput in = parse_input(
      "algebra x\nvertices: 1 2\narrows: a: 1 -> 2\nrelations: (none)\n"
      "subalgebra s\narrows: zz\n");
  REQUIRE_THROWS_AS(build_pair(in, FieldSpec::rationals()), ValidationError);
}

TEST_CASE("relation words read in application order", "[parse]") {
  ParsedInput in = parse_input(
      "algebra w\n"
      "vertices: 1 2 3\n"
      "arrows: a: 1 -> 2; b: 2 -> 3\n"
      "relations: a*b\n");
  REQUIRE(in.relations.size() == 1);
  REQUIRE(in.relations[0].source == 1);
  REQUIRE(in.relations[0].target == 3);
  REQUIRE(in.relations[0].arrows == std::vector<int>{0, 1});
}

TEST_CASE("every shipped fixture parses and builds", "[parse]") {
  for (const char* name : {"kron2back.quiv", "twopar.quiv", "tripod.quiv", "loop.quiv",
                           "junction.quiv", "line2.quiv", "line3.quiv", "line4.quiv",
                           "line5.quiv", "dag5.quiv"}) {
    INFO(name);
    ParsedInput in = qhh::testing::load_fixture(name);
    SubalgebraPair pair = build_pair(in, FieldSpec::rationals());
    REQUIRE(pair.a.dim() > 0);
  }
}
