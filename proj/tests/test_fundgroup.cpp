#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qhh/fundgroup.hpp"
#include "support/common.hpp"

using namespace qhh;
using qhh::testing::fixture_pair;

TEST_CASE("spanning data of the five-vertex dag", "[fundgroup]") {
  SubalgebraPair pair = fixture_pair("dag5.quiv");
  FundGroup fg = build_fundgroup(pair);

  // Subalgebra arrows are scanned first, so the tree extends a spanning
  // forest of the subalgebra quiver: gamma, delta, alpha1, then eps.
  REQUIRE(fg.tree == std::vector<int>{0, 1, 2, 6});
  REQUIRE(fg.generators == std::vector<int>{5});  // beta2
  REQUIRE(fg.betti_a == 3);
  REQUIRE(fg.betti_b == 2);
  REQUIRE(fg.contracted_rank == 1);
  for (int t : fg.tree) REQUIRE(fg.in_tree[static_cast<size_t>(t)]);

  // Connected quiver: one component, basepoint at the first vertex.
  REQUIRE(fg.component == std::vector<int>(5, 0));
  REQUIRE(default_basepoint_id(pair.a.quiver(), fg, 5) == 1);
}

TEST_CASE("generator walks and their free-group words", "[fundgroup]") {
  SubalgebraPair pair = fixture_pair("tripod.quiv");
  FundGroup fg = build_fundgroup(pair);
  REQUIRE(fg.tree == std::vector<int>{1, 2, 4});     // alpha2, delta1, beta1
  REQUIRE(fg.generators == std::vector<int>{0, 3});  // alpha1, delta2
  REQUIRE(fg.betti_a == 3);
  REQUIRE(fg.betti_b == 1);
  REQUIRE(fg.contracted_rank == 2);

  const Quiver& q = pair.a.quiver();
  int basepoint = default_basepoint_id(q, fg, 0);
  REQUIRE(basepoint == 1);

  // Basepoint 1 to source 2 rides alpha2 backwards, then alpha1 closes up.
  std::vector<WalkStep> walk = generator_walk(pair, fg, 0, basepoint);
  REQUIRE(walk.size() == 2);
  REQUIRE(walk[0].arrow == 1);
  REQUIRE(walk[0].dir == -1);
  REQUIRE(walk[1].arrow == 0);
  REQUIRE(walk[1].dir == 1);
  REQUIRE(walk_word(pair, fg, walk) == std::vector<int>{1});

  // The second generator reads as the second letter.
  std::vector<WalkStep> walk2 = generator_walk(pair, fg, 3, default_basepoint_id(q, fg, 3));
  REQUIRE(walk_word(pair, fg, walk2) == std::vector<int>{2});

  // A generator followed by its own inverse reduces to the empty word.
  std::vector<WalkStep> cancel{{0, 1}, {0, -1}};
  REQUIRE(walk_word(pair, fg, cancel).empty());

  // Steps that do not chain are rejected.
  std::vector<WalkStep> broken{{0, 1}, {3, 1}};
  REQUIRE_THROWS_AS(check_walk(q, broken), NotAWalk);
  REQUIRE_THROWS_AS(walk_word(pair, fg, broken), NotAWalk);
}

TEST_CASE("tree walks stay within one component", "[fundgroup]") {
  Quiver q({1, 2, 3, 4}, {{"a", 1, 2}, {"b", 3, 4}});
  MonomialAlgebra alg(q, {}, FieldSpec::rationals());
  SubalgebraPair pair = SubalgebraPair::make(std::move(alg), {});
  FundGroup fg = build_fundgroup(pair);

  REQUIRE(fg.tree == std::vector<int>{0, 1});
  REQUIRE(fg.generators.empty());
  REQUIRE(fg.component == std::vector<int>{0, 0, 1, 1});
  REQUIRE(fg.basepoint == std::vector<int>{0, 2});
  REQUIRE(fg.betti_a == 0);
  REQUIRE(fg.contracted_rank == 0);

  REQUIRE(tree_walk(q, fg.in_tree, 1, 2).size() == 1);
  REQUIRE(tree_walk(q, fg.in_tree, 1, 1).empty());
  REQUIRE_THROWS_AS(tree_walk(q, fg.in_tree, 1, 3), NotAWalk);
}

TEST_CASE("pullback into relative cohomology on the five-vertex dag", "[fundgroup]") {
  SubalgebraPair pair = fixture_pair("dag5.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
  Hh1<Rational> abs = hh1(cx);
  RelativeHh1<Rational> rel = relative_hh1(cx, pair, abs);
  REQUIRE(rel.ker.dim() == 3);
  REQUIRE(rel.im.dim() == 1);
  REQUIRE(rel.dim() == 2);

  RelativeEmbedding<Rational> emb = build_embedding(cx, rel, abs);
  FundGroup fg = build_fundgroup(pair);
  ThetaResult<Rational> th = theta_map(cx, pair, fg, rel, abs, emb);
  REQUIRE(th.generators == std::vector<int>{5});
  REQUIRE(th.image_span.dim() == 1);
  REQUIRE(th.injective);
  REQUIRE(th.commutes);
  REQUIRE(th.image_dim_equals_rank);
}

TEST_CASE("the pullback image does not depend on the chosen tree", "[fundgroup]") {
  SubalgebraPair pair = fixture_pair("tripod.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
  Hh1<Rational> abs = hh1(cx);
  RelativeHh1<Rational> rel = relative_hh1(cx, pair, abs);
  RelativeEmbedding<Rational> emb = build_embedding(cx, rel, abs);

  FundGroup fg = build_fundgroup(pair);
  FundGroup alt = build_fundgroup(pair, true);
  REQUIRE(alt.tree != fg.tree);
  REQUIRE(alt.contracted_rank == fg.contracted_rank);

  ThetaResult<Rational> th = theta_map(cx, pair, fg, rel, abs, emb);
  ThetaResult<Rational> th2 = theta_map(cx, pair, alt, rel, abs, emb);
  REQUIRE(th.injective);
  REQUIRE(th2.injective);
  REQUIRE(th.image_span.dim() == 2);
  REQUIRE(th.image_span.contains(th2.image_span));
  REQUIRE(th2.image_span.contains(th.image_span));
}
