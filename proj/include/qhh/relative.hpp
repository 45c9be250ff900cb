#pragma once

#include <map>
#include <vector>

#include "qhh/cochain.hpp"
#include "qhh/lie.hpp"
#include "qhh/matrix.hpp"

namespace qhh {

// Kernel of d1 intersected with a coordinate subspace: solutions supported on
// the allowed pair coordinates only.  Implemented as the kernel of d1 stacked
// with one unit row per forbidden coordinate.
template <class F>
Subspace<F> kernel_supported(const ExactMatrix<F>& d1, const std::vector<bool>& allowed) {
  ExactMatrix<F> m = d1;
  for (int k = 0; k < d1.cols; ++k) {
    if (allowed[static_cast<size_t>(k)]) continue;
    m.entries[{m.rows, k}] = F{1};
    ++m.rows;
  }
  return kernel(m);
}

// Pair-1 coordinates allowed in the kernel relative to B: those whose left
// arrow lies outside B.
template <class F>
std::vector<bool> relative_mask(const CochainComplex<F>& cx, const SubalgebraPair& pair) {
  std::vector<bool> allowed(static_cast<size_t>(cx.p1.dim()), false);
  for (int k = 0; k < cx.p1.dim(); ++k)
    allowed[static_cast<size_t>(k)] = !pair.in_b[static_cast<size_t>(cx.p1.entry(k).left)];
  return allowed;
}

// Degree-one cohomology relative to the subalgebra B:
//   Ker d1_{A|B} = Ker d1 ∩ {support off B's arrows},
//   Im d0_{A|B}  = Im d0 ∩ Ker d1_{A|B},
// and their quotient, all in the pair-1 coordinates of A.
template <class F>
struct RelativeHh1 {
  Subspace<F> ker;
  Subspace<F> im;
  Subquotient<F> h;
  std::map<int, int> graded;

  int dim() const { return h.dim(); }
};

template <class F>
RelativeHh1<F> relative_hh1(const CochainComplex<F>& cx, const SubalgebraPair& pair,
                            const Hh1<F>& abs) {
  RelativeHh1<F> out;
  out.ker = kernel_supported(cx.d1, relative_mask(cx, pair));
  out.im = Subspace<F>::intersect(abs.im, out.ker);
  out.h = Subquotient<F>::make(out.ker, out.im);
  out.graded = graded_quotient_dims(row_degrees(out.ker, cx.p1), row_degrees(out.im, cx.p1));
  return out;
}

// The map from relative to absolute degree-one cohomology induced by the
// inclusion of kernels.  It is expected to be an injective morphism of Lie
// algebras; both facts are recomputed from the matrices, not assumed.
template <class F>
struct RelativeEmbedding {
  ExactMatrix<F> matrix;  // columns: absolute coordinates of relative classes
  bool injective = false;
  bool lie_morphism = false;
};

template <class F>
RelativeEmbedding<F> build_embedding(const CochainComplex<F>& cx, const RelativeHh1<F>& rel,
                                     const Hh1<F>& abs) {
  RelativeEmbedding<F> e;
  e.matrix = ExactMatrix<F>(abs.h.dim(), rel.h.dim());
  for (int k = 0; k < rel.h.dim(); ++k) {
    std::vector<F> c;
    if (!abs.h.coordinates(rel.h.transversal[static_cast<size_t>(k)], c))
      throw VerificationError("relative class representative is not a cocycle of the algebra");
    for (int r = 0; r < abs.h.dim(); ++r) e.matrix.add(r, k, c[static_cast<size_t>(r)]);
  }
  e.injective = rank(e.matrix) == rel.h.dim();

  e.lie_morphism = true;
  for (int s = 0; s < rel.h.dim() && e.lie_morphism; ++s)
    for (int t = s + 1; t < rel.h.dim() && e.lie_morphism; ++t) {
      std::vector<F> br = bracket_raw(cx, rel.h.transversal[static_cast<size_t>(s)],
                                      rel.h.transversal[static_cast<size_t>(t)]);
      std::vector<F> rel_c, abs_c;
      if (!rel.h.coordinates(br, rel_c) || !abs.h.coordinates(br, abs_c))
        throw VerificationError("bracket of relative classes left the kernel");
      std::vector<F> lifted = e.matrix.apply(rel_c);
      for (size_t j = 0; j < abs_c.size(); ++j)
        if (!is_zero(lifted[j] - abs_c[j])) e.lie_morphism = false;
    }
  return e;
}

}  // namespace qhh
