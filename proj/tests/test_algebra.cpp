#include <catch2/catch_amalgamated.hpp>

#include "qhh/algebra.hpp"
#include "support/common.hpp"

using namespace qhh;
using qhh::testing::fixture_pair;

TEST_CASE("basis of the two-arrows-and-a-back-arrow algebra", "[algebra]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  const MonomialAlgebra& a = pair.a;
  REQUIRE(a.dim() == 7);

  // Canonical order: trivial paths by vertex, arrows, then length-2 paths.
  std::vector<std::string> names;
  for (const Path& p : a.basis()) names.push_back(path_str(a.quiver(), p));
  REQUIRE(names == std::vector<std::string>{"e1", "e2", "alpha1", "alpha2", "beta",
                                            "alpha1*beta", "alpha2*beta"});

  for (const Path& p : a.basis()) {
    auto idx = a.basis_index(p);
    REQUIRE(idx.has_value());
    REQUIRE(a.basis()[*idx] == p);
  }
}

TEST_CASE("multiplication composes right to left", "[algebra]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  const MonomialAlgebra& a = pair.a;
  int e1 = *a.basis_index(trivial_path(1));
  int alpha1 = *a.basis_index(arrow_path(a.quiver(), 0));
  int beta = *a.basis_index(arrow_path(a.quiver(), 2));
  int a1b = *a.basis_index(make_path(a.quiver(), {0, 2}));

  // beta * alpha1 (alpha1 acts first): the surviving cycle at vertex 1.
  REQUIRE(a.multiply(beta, alpha1) == a1b);
  // alpha1 * beta (beta acts first) hits the relation and vanishes.
  REQUIRE_FALSE(a.multiply(alpha1, beta).has_value());
  // Units act as expected.
  REQUIRE(a.multiply(alpha1, e1) == alpha1);
  REQUIRE_FALSE(a.multiply(e1, alpha1).has_value());  // alpha1 ends at 2
  // Non-composable product vanishes.
  REQUIRE_FALSE(a.multiply(alpha1, alpha1).has_value());
}

TEST_CASE("associativity on every basis triple", "[algebra]") {
  SubalgebraPair pair = fixture_pair("twopar.quiv");
  const MonomialAlgebra& a = pair.a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        auto jk = a.multiply(j, k);
        auto ij = a.multiply(i, j);
        std::optional<int> left = ij ? a.multiply(*ij, k) : std::optional<int>{};
        std::optional<int> right = jk ? a.multiply(i, *jk) : std::optional<int>{};
        REQUIRE(left == right);
      }
}

TEST_CASE("infinite-dimensional presentations are rejected exactly", "[algebra]") {
  Quiver loop({1}, {{"alpha", 1, 1}});
  REQUIRE_THROWS_AS(MonomialAlgebra(loop, {}), NotFiniteDimensional);

  Quiver two({1, 2}, {{"a", 1, 2}, {"b", 2, 1}});
  REQUIRE_THROWS_AS(MonomialAlgebra(two, {}), NotFiniteDimensional);
  // Killing one composite already bounds everything: the reverse composite
  // survives but cannot extend without crossing the killed word.
  MonomialAlgebra half(two, {make_path(two, {0, 1})});
  REQUIRE(half.dim() == 5);  // e1, e2, a, b, b*a
  // Killing both length-2 cycles bounds everything: e1, e2, a, b.
  MonomialAlgebra killed(two, {make_path(two, {0, 1}), make_path(two, {1, 0})});
  REQUIRE(killed.dim() == 4);
}

TEST_CASE("loop truncations", "[algebra]") {
  Quiver loop({1}, {{"alpha", 1, 1}});
  MonomialAlgebra sq(loop, {make_path(loop, {0, 0})});
  REQUIRE(sq.dim() == 2);  // e1, alpha
  MonomialAlgebra cube(loop, {make_path(loop, {0, 0, 0})});
  REQUIRE(cube.dim() == 3);  // e1, alpha, alpha^2
}

TEST_CASE("relation normalization", "[algebra]") {
  Quiver line({1, 2, 3, 4}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}});
  Path ab = make_path(line, {0, 1});
  Path abc = make_path(line, {0, 1, 2});
  MonomialAlgebra alg(line, {ab, abc, ab});
  REQUIRE(alg.relations().size() == 1);
  REQUIRE(alg.relations()[0] == ab);
  REQUIRE(alg.warnings().size() == 2);

  REQUIRE_THROWS_AS(MonomialAlgebra(line, {arrow_path(line, 0)}), ValidationError);
}

TEST_CASE("opposite algebra has the same dimension", "[algebra]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  MonomialAlgebra op = opposite_algebra(pair.a);
  REQUIRE(op.dim() == pair.a.dim());
  REQUIRE(op.quiver().arrow(0).name == "alpha1*");
  REQUIRE(op.relations().size() == pair.a.relations().size());
  // Reversal of relations: the opposite of (beta then alpha1) starts at alpha1*.
  for (const Path& r : op.relations()) REQUIRE(r.length() == 2);
}

TEST_CASE("arrow-spanned subalgebra", "[algebra]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  REQUIRE(pair.b_arrows == std::vector<int>{0, 1});
  REQUIRE(pair.in_b == std::vector<bool>{true, true, false});
  REQUIRE(pair.b_arrow_index == std::vector<int>{0, 1, -1});
  // B = k-span of e1, e2, alpha1, alpha2 (no relation lives inside B).
  REQUIRE(pair.b.dim() == 4);
  REQUIRE(pair.complement() == std::vector<int>{2});
  REQUIRE(pair.complement_quiver().arrow_count() == 1);

  SubalgebraPair triv = SubalgebraPair::trivial(pair.a);
  REQUIRE(triv.b.dim() == 2);
  REQUIRE(triv.b_arrows.empty());

  REQUIRE_THROWS_AS(SubalgebraPair::make(pair.a, {"nope"}), ValidationError);
  REQUIRE_THROWS_AS(SubalgebraPair::make(pair.a, {"beta", "beta"}), ValidationError);
}

TEST_CASE("subalgebra inherits supported relations", "[algebra]") {
  // In the funnel algebra the relations involve beta, so B = {beta} keeps none
  // of them, while B = all arrows keeps both.
  SubalgebraPair pair = fixture_pair("twopar.quiv");
  REQUIRE(pair.b.relations().empty());
  REQUIRE(pair.b.dim() == 4);  // e1, e2, e3, beta

  SubalgebraPair all = SubalgebraPair::make(pair.a, {"alpha1", "alpha2", "beta"});
  REQUIRE(all.b.relations().size() == 2);
  REQUIRE(all.b.dim() == pair.a.dim());
}

TEST_CASE("parallel basis groups", "[algebra]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  const MonomialAlgebra& a = pair.a;
  REQUIRE(a.parallel_basis(1, 2).size() == 2);  // alpha1, alpha2
  REQUIRE(a.parallel_basis(1, 1).size() == 3);  // e1, alpha1*beta, alpha2*beta
  REQUIRE(a.parallel_basis(2, 2).size() == 1);  // e2
  REQUIRE(a.parallel_basis(2, 1).size() == 1);  // beta
  REQUIRE(a.parallel_basis(3, 1).empty());
}
