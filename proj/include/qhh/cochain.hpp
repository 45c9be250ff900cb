#pragma once

#include <map>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/errors.hpp"
#include "qhh/matrix.hpp"
#include "qhh/pairs.hpp"

namespace qhh {

// The parallel-pair cochain complex of a monomial algebra in low degrees:
//
//   k(Q0 // basis) --d0--> k(Q1 // basis) --d1--> k(Z // basis)
//
// d0 sends e//p to the sum of a//(p then a) over arrows a out of e minus the
// sum of a//(a then p) over arrows a into e, keeping surviving paths.  d1
// sends a//p to the sum over relations r of r//(r with one occurrence of a
// replaced by p), again keeping surviving paths.  Ker d1 / Im d0 computes the
// degree-one Hochschild cohomology of the algebra; Ker d0 the degree-zero one.
template <class F>
struct CochainComplex {
  const MonomialAlgebra* alg = nullptr;
  PairBasis p0, p1, p2;
  ExactMatrix<F> d0, d1;

  const MonomialAlgebra& algebra() const { return *alg; }
};

template <class F>
CochainComplex<F> build_complex(const MonomialAlgebra& alg) {
  CochainComplex<F> cx;
  cx.alg = &alg;
  cx.p0 = PairBasis(alg, Stratum::vertices);
  cx.p1 = PairBasis(alg, Stratum::arrows);
  cx.p2 = PairBasis(alg, Stratum::relations);
  const Quiver& q = alg.quiver();
  const FieldSpec& fs = alg.field();
  const F one = scalar_of<F>(1, fs);

  cx.d0 = ExactMatrix<F>(cx.p1.dim(), cx.p0.dim());
  for (int k = 0; k < cx.p0.dim(); ++k) {
    const auto& e = cx.p0.entry(k);
    int vertex = q.vertices()[static_cast<size_t>(e.left)];
    const Path& p = alg.basis()[static_cast<size_t>(e.basis)];
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).source == vertex) {
        if (auto b = alg.basis_index(chain(p, arrow_path(q, a))))
          cx.d0.add(*cx.p1.index(a, *b), k, one);
      }
      if (q.arrow(a).target == vertex) {
        if (auto b = alg.basis_index(chain(arrow_path(q, a), p)))
          cx.d0.add(*cx.p1.index(a, *b), k, -one);
      }
    }
  }

  cx.d1 = ExactMatrix<F>(cx.p2.dim(), cx.p1.dim());
  for (int k = 0; k < cx.p1.dim(); ++k) {
    const auto& e = cx.p1.entry(k);
    const Path& p = alg.basis()[static_cast<size_t>(e.basis)];
    for (size_t r = 0; r < alg.relations().size(); ++r) {
      for (const auto& [b, mult] : substitute(alg, alg.relations()[r], e.left, p))
        cx.d1.add(*cx.p2.index(static_cast<int>(r), b), k, scalar_of<F>(mult, fs));
    }
  }
  return cx;
}

template <class F>
bool composes_to_zero(const CochainComplex<F>& cx) {
  return ExactMatrix<F>::multiply(cx.d1, cx.d0).is_zero_matrix();
}

// Degree-zero cohomology, isomorphic to the center of the algebra.
template <class F>
Subspace<F> hh0(const CochainComplex<F>& cx) {
  return kernel(cx.d0);
}

// Per-row degrees of a subspace whose basis rows must be homogeneous with
// respect to the pair degrees.  Both differentials preserve the degree, so
// kernels and images of d0/d1 satisfy this; a mixed row is a hard error.
template <class F>
std::vector<int> row_degrees(const Subspace<F>& s, const PairBasis& pb) {
  std::vector<int> degs;
  for (size_t r = 0; r < s.basis.size(); ++r) {
    int d = pb.degree(s.pivots[r]);
    for (int j = 0; j < s.ambient; ++j)
      if (!is_zero(s.basis[r][j]) && pb.degree(j) != d)
        throw VerificationError("subspace row mixes pair degrees " + std::to_string(d) + " and " +
                                std::to_string(pb.degree(j)));
    degs.push_back(d);
  }
  return degs;
}

// Dimensions per degree of ker/im, as degree -> dimension with zeros omitted.
inline std::map<int, int> graded_quotient_dims(const std::vector<int>& ker_degs,
                                               const std::vector<int>& im_degs) {
  std::map<int, int> g;
  for (int d : ker_degs) ++g[d];
  for (int d : im_degs) --g[d];
  for (auto it = g.begin(); it != g.end();)
    it = it->second == 0 ? g.erase(it) : std::next(it);
  return g;
}

// Degree-one cohomology of the complex: Ker d1 / Im d0 with canonical
// representatives and graded dimensions.
template <class F>
struct Hh1 {
  Subspace<F> ker;
  Subspace<F> im;
  Subquotient<F> h;
  std::map<int, int> graded;

  int dim() const { return h.dim(); }
};

template <class F>
Hh1<F> hh1(const CochainComplex<F>& cx) {
  Hh1<F> out;
  out.ker = kernel(cx.d1);
  out.im = column_space(cx.d0);
  out.h = Subquotient<F>::make(out.ker, out.im);
  out.graded = graded_quotient_dims(row_degrees(out.ker, cx.p1), row_degrees(out.im, cx.p1));
  return out;
}

}  // namespace qhh
