#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "qhh/cochain.hpp"
#include "support/common.hpp"

using namespace qhh;
using qhh::testing::fixture_pair;

namespace {

int pair_at(const PairBasis& pb, const std::string& label) {
  for (int k = 0; k < pb.dim(); ++k)
    if (pb.label(k) == label) return k;
  FAIL("no pair labelled " << label);
  return -1;
}

template <class F>
std::vector<F> column(const ExactMatrix<F>& m, int col) {
  std::vector<F> v(static_cast<size_t>(m.rows), F{});
  for (int r = 0; r < m.rows; ++r) v[static_cast<size_t>(r)] = m.at(r, col);
  return v;
}

}  // namespace

TEST_CASE("pair strata dimensions of the two-arrows-and-a-back-arrow algebra", "[cochain]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);

  // Vertices: e1 pairs with the three cycles at 1, e2 only with itself.
  REQUIRE(cx.p0.dim() == 4);
  // Arrows: alpha1, alpha2 each pair with both parallel arrows; beta with itself.
  REQUIRE(cx.p1.dim() == 5);
  // Relations: each relation is a cycle at vertex 2, parallel to e2 only.
  REQUIRE(cx.p2.dim() == 2);

  REQUIRE(cx.d0.rows == cx.p1.dim());
  REQUIRE(cx.d0.cols == cx.p0.dim());
  REQUIRE(cx.d1.rows == cx.p2.dim());
  REQUIRE(cx.d1.cols == cx.p1.dim());
  REQUIRE(composes_to_zero(cx));
}

TEST_CASE("d0 of a trivial pair lists outgoing minus incoming arrows", "[cochain]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);

  std::vector<Rational> d = column(cx.d0, pair_at(cx.p0, "e1//e1"));
  std::vector<Rational> expected(static_cast<size_t>(cx.p1.dim()), Rational{});
  expected[static_cast<size_t>(pair_at(cx.p1, "alpha1//alpha1"))] = Rational{1};
  expected[static_cast<size_t>(pair_at(cx.p1, "alpha2//alpha2"))] = Rational{1};
  expected[static_cast<size_t>(pair_at(cx.p1, "beta//beta"))] = Rational{-1};
  REQUIRE(d == expected);

  // The two vertices give opposite columns, so d0 has rank one.
  std::vector<Rational> d2 = column(cx.d0, pair_at(cx.p0, "e2//e2"));
  for (int k = 0; k < cx.p1.dim(); ++k)
    REQUIRE(is_zero(d[static_cast<size_t>(k)] + d2[static_cast<size_t>(k)]));

  // Nontrivial cycles at vertex 1 die: every extension hits a relation.
  for (const char* lbl : {"e1//alpha1*beta", "e1//alpha2*beta"}) {
    std::vector<Rational> dz = column(cx.d0, pair_at(cx.p0, lbl));
    for (const Rational& c : dz) REQUIRE(is_zero(c));
  }
}

TEST_CASE("degree-zero cohomology is the center", "[cochain]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
  // Center: the identity and the two cycles alpha1*beta, alpha2*beta.
  REQUIRE(hh0(cx).dim() == 3);
}

TEST_CASE("degree-one cohomology of the two-arrows-and-a-back-arrow algebra", "[cochain]") {
  SubalgebraPair pair = fixture_pair("kron2back.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);

  // Substituting any parallel arrow into a relation yields another relation,
  // so d1 vanishes identically here.
  REQUIRE(cx.d1.is_zero_matrix());

  Hh1<Rational> h = hh1(cx);
  REQUIRE(h.ker.dim() == 5);
  REQUIRE(h.im.dim() == 1);
  REQUIRE(h.dim() == 4);
  REQUIRE(h.graded == std::map<int, int>{{1, 4}});
}

TEST_CASE("one loop with a square relation over the rationals", "[cochain]") {
  SubalgebraPair pair = fixture_pair("loop.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);

  REQUIRE(cx.p0.dim() == 2);  // e1//e1 and e1//alpha
  REQUIRE(cx.p1.dim() == 2);  // alpha//e1 and alpha//alpha
  REQUIRE(cx.p2.dim() == 2);  // alpha*alpha//e1 and alpha*alpha//alpha

  // d1(alpha//e1) replaces one occurrence of the loop at a time, for a
  // multiplicity of two; over the rationals that kills alpha//e1.
  int loop_to_unit = pair_at(cx.p1, "alpha//e1");
  std::vector<Rational> d = column(cx.d1, loop_to_unit);
  REQUIRE(d[static_cast<size_t>(pair_at(cx.p2, "alpha*alpha//alpha"))] == Rational{2});

  Hh1<Rational> h = hh1(cx);
  REQUIRE(h.ker.dim() == 1);
  REQUIRE(h.im.dim() == 0);
  REQUIRE(h.dim() == 1);

  std::vector<Rational> diag(static_cast<size_t>(cx.p1.dim()), Rational{});
  diag[static_cast<size_t>(pair_at(cx.p1, "alpha//alpha"))] = Rational{1};
  REQUIRE(h.ker.contains(diag));
}

TEST_CASE("one loop with a square relation over the two-element field", "[cochain]") {
  SubalgebraPair pair = fixture_pair("loop.quiv", FieldSpec::prime(2));
  CochainComplex<Fp> cx = build_complex<Fp>(pair.a);

  // The multiplicity two from the double substitution vanishes mod 2.
  REQUIRE(cx.d1.is_zero_matrix());
  REQUIRE(cx.d0.is_zero_matrix());

  Hh1<Fp> h = hh1(cx);
  REQUIRE(h.ker.dim() == 2);
  REQUIRE(h.im.dim() == 0);
  REQUIRE(h.dim() == 2);
  REQUIRE(h.graded == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("kernel and image rows are homogeneous in the pair degree", "[cochain]") {
  SubalgebraPair pair = fixture_pair("junction.quiv");
  CochainComplex<Rational> cx = build_complex<Rational>(pair.a);
  Hh1<Rational> h = hh1(cx);

  for (int d : row_degrees(h.ker, cx.p1)) REQUIRE(d == 1);
  for (int d : row_degrees(h.im, cx.p1)) REQUIRE(d == 1);

  // A deliberately mixed-degree row is rejected.
  SubalgebraPair lp = fixture_pair("loop.quiv");
  CochainComplex<Rational> lcx = build_complex<Rational>(lp.a);
  std::vector<std::vector<Rational>> rows{{Rational{1}, Rational{1}}};
  Subspace<Rational> mixed = Subspace<Rational>::from_vectors(2, std::move(rows));
  REQUIRE_THROWS_AS(row_degrees(mixed, lcx.p1), VerificationError);
}
