#pragma once

#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/cochain.hpp"
#include "qhh/errors.hpp"
#include "qhh/lie.hpp"
#include "qhh/relative.hpp"

namespace qhh {

// The radical-square-zero regime: every relation has length two and every
// composable length-two path is a relation, so the basis is vertices and
// arrows only.
inline void assert_radical_square_zero(const MonomialAlgebra& alg) {
  for (const Path& r : alg.relations())
    if (r.length() != 2)
      throw NotRadicalSquareZero("relation " + path_str(alg.quiver(), r) +
                                 " does not have length two");
  const Quiver& q = alg.quiver();
  for (int a = 0; a < q.arrow_count(); ++a)
    for (int b = 0; b < q.arrow_count(); ++b) {
      if (q.arrow(a).target != q.arrow(b).source) continue;
      if (!alg.contains_relation({a, b}))
        throw NotRadicalSquareZero("length-two path " + q.arrow(a).name + "*" + q.arrow(b).name +
                                   " is not a relation");
    }
}

// One parallel class of the ambient quiver, with its split into subalgebra
// arrows and complement arrows.
struct RadZeroClass {
  int source = 0;
  int target = 0;
  std::vector<int> members;  // ambient arrow indices
  int ambient = 0;
  int in_b = 0;
  int complement = 0;
};

inline std::vector<RadZeroClass> radzero_classes(const SubalgebraPair& pair) {
  const Quiver& q = pair.a.quiver();
  std::vector<RadZeroClass> out;
  for (auto& members : q.parallel_classes()) {
    RadZeroClass c;
    c.source = q.arrow(members.front()).source;
    c.target = q.arrow(members.front()).target;
    c.ambient = static_cast<int>(members.size());
    for (int m : members)
      if (pair.in_b[static_cast<size_t>(m)]) ++c.in_b;
    c.complement = c.ambient - c.in_b;
    c.members = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

// Closed-form structure of the relative degree-one Lie algebra of a
// radical-square-zero pair in characteristic zero.  Per parallel class with
// complement size c and b subalgebra arrows in an ambient class of size c+b,
// the relative kernel contributes a block gl(c) ⋉ (c·b)-dimensional abelian
// ideal; the quotient by the relative image removes one scalar direction per
// extra component the subalgebra quiver has over the ambient one.
struct RadZeroDescriptor {
  std::vector<RadZeroClass> classes;
  int ker_dim = 0;         // sum of complement * ambient
  int image_rank = 0;      // components(B) - components(A)
  int hh1_dim = 0;
  int semisimple_dim = 0;  // sum over complement >= 2 of complement^2 - 1
  int radical_dim = 0;
  int abelian_tail = 0;    // all-complement classes minus the image rank
  bool solvable = false;
};

inline RadZeroDescriptor radzero_descriptor(const SubalgebraPair& pair) {
  if (pair.a.field().characteristic() != 0)
    throw UnsupportedField("the radical-square-zero closed form requires characteristic zero");
  assert_radical_square_zero(pair.a);
  RadZeroDescriptor d;
  d.classes = radzero_classes(pair);
  int pure_classes = 0;  // complement >= 1, no subalgebra arrows
  for (const RadZeroClass& c : d.classes) {
    d.ker_dim += c.complement * c.ambient;
    if (c.complement >= 2) d.semisimple_dim += c.complement * c.complement - 1;
    if (c.complement >= 1 && c.in_b == 0) ++pure_classes;
  }
  d.image_rank = pair.b.quiver().component_count() - pair.a.quiver().component_count();
  d.hh1_dim = d.ker_dim - d.image_rank;
  d.radical_dim = d.hh1_dim - d.semisimple_dim;
  d.abelian_tail = pure_classes - d.image_rank;
  d.solvable = d.semisimple_dim == 0;
  return d;
}

// The same numbers recomputed from the cochain matrices and the Killing form,
// plus the structural shape of the relative kernel: it must be spanned
// exactly by the pairs (complement arrow // parallel ambient arrow).
template <class F>
struct RadZeroCrossCheck {
  int ker_dim = 0;
  int image_rank = 0;
  int hh1_dim = 0;
  int semisimple_dim = 0;
  int radical_dim = 0;
  bool solvable = false;
  bool kernel_is_pair_span = false;

  bool matches(const RadZeroDescriptor& d) const {
    return ker_dim == d.ker_dim && image_rank == d.image_rank && hh1_dim == d.hh1_dim &&
           semisimple_dim == d.semisimple_dim && radical_dim == d.radical_dim &&
           solvable == d.solvable && kernel_is_pair_span;
  }
};

template <class F>
RadZeroCrossCheck<F> radzero_generic(const CochainComplex<F>& cx, const SubalgebraPair& pair,
                                     const RelativeHh1<F>& rel) {
  assert_radical_square_zero(pair.a);
  RadZeroCrossCheck<F> out;
  out.ker_dim = rel.ker.dim();
  out.image_rank = rel.im.dim();
  out.hh1_dim = rel.h.dim();
  LieAlgebra<F> L = lie_from_subquotient(cx, rel.h);
  LieSummary s = analyze(L);
  out.solvable = s.solvable;
  out.semisimple_dim = s.semisimple_dim.value_or(-1);
  out.radical_dim = s.radical_dim.value_or(-1);

  const MonomialAlgebra& alg = cx.algebra();
  std::vector<std::vector<F>> units;
  for (const RadZeroClass& c : radzero_classes(pair))
    for (int a : c.members) {
      if (pair.in_b[static_cast<size_t>(a)]) continue;
      for (int b : c.members) {
        auto bi = alg.basis_index(arrow_path(alg.quiver(), b));
        auto k = cx.p1.index(a, *bi);
        std::vector<F> v(static_cast<size_t>(cx.p1.dim()), F{});
        v[static_cast<size_t>(*k)] = F{1};
        units.push_back(std::move(v));
      }
    }
  Subspace<F> span = Subspace<F>::from_vectors(cx.p1.dim(), std::move(units));
  out.kernel_is_pair_span = span.contains(rel.ker) && rel.ker.contains(span);
  return out;
}

}  // namespace qhh
