#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/cochain.hpp"
#include "qhh/errors.hpp"
#include "qhh/lie.hpp"
#include "qhh/relative.hpp"

namespace qhh {

// The dual extension of B by A: same vertices, B's arrows followed by the
// reversed arrows of A (named with a trailing *), with three groups of
// relations: those of B, those of A reversed, and every composable length-two
// path that applies a B arrow after a reversed arrow.  Both inputs must be
// directed (arrows strictly ascend vertex ids) and share the vertex set; the
// result is then finite-dimensional with basis the paths that run through B
// first and reversed arrows second.
inline MonomialAlgebra dual_extension(const MonomialAlgebra& b, const MonomialAlgebra& a) {
  const Quiver& qb = b.quiver();
  const Quiver& qa = a.quiver();
  if (qb.vertices() != qa.vertices())
    throw VertexMismatch("dual extension inputs must share the vertex set");
  if (!qb.is_directed() || !qa.is_directed())
    throw NotDirected("dual extension inputs must have arrows ascending vertex ids");
  if (b.field().kind != a.field().kind || b.field().p != a.field().p)
    throw ValidationError("dual extension inputs must share the field");

  std::vector<Arrow> arrows = qb.arrows();
  for (const Arrow& ar : qa.arrows()) arrows.push_back({ar.name + "*", ar.target, ar.source});
  Quiver q(qb.vertices(), std::move(arrows));
  int nb = qb.arrow_count();

  std::vector<Path> rels;
  for (const Path& r : b.relations()) rels.push_back(make_path(q, r.arrows));
  for (const Path& r : a.relations()) {
    std::vector<int> word;
    for (auto it = r.arrows.rbegin(); it != r.arrows.rend(); ++it) word.push_back(nb + *it);
    rels.push_back(make_path(q, word));
  }
  for (int i = 0; i < qa.arrow_count(); ++i)
    for (int j = 0; j < nb; ++j)
      if (qa.arrow(i).source == qb.arrow(j).source) rels.push_back(make_path(q, {nb + i, j}));

  return MonomialAlgebra(std::move(q), std::move(rels), b.field());
}

// All the invariants of one dual extension: the two-sided ideal J of Ker d1
// (classes supported on B arrows over mixed paths, plus the kernel relative
// to B), the image I of d0 on nontrivial cycles, and the dimension bookkeeping
// that chains J/I with the degree-one cohomology of B.
struct DualExtResult {
  int dim_lambda = 0;
  int dim_hh0_lambda = 0;
  int dim_j_prime = 0;
  int dim_ker_rel_b = 0;    // Ker d1 of lambda relative to B
  int dim_j = 0;
  int dim_i = 0;
  int dim_j_mod_i = 0;
  int dim_hh1_lambda = 0;
  int dim_hh1_lambda_rel_b = 0;
  int dim_hh1_b = 0;
  std::map<int, int> graded_hh1_lambda;
  std::map<int, int> graded_j_mod_i;
  std::map<int, int> graded_hh1_b;
  bool i_in_j = false;
  bool exact_sequence = false;      // dims: hh1(lambda) = j/i + hh1(b)
  bool degree_one_additive = false;
  bool j_is_ideal = false;
  bool kernel_splits = false;       // Ker d1 = Ker rel A-part ⊕ Ker rel B
  bool b_kernel_embeds = false;     // Ker d1 of B sits inside Ker d1 of lambda
  bool split_brackets_vanish = false;
  LieSummary hh1_lambda_lie;
};

template <class F>
DualExtResult analyze_dual_extension(const MonomialAlgebra& b, const MonomialAlgebra& a) {
  MonomialAlgebra lambda = dual_extension(b, a);
  int nb = b.quiver().arrow_count();
  CochainComplex<F> cx = build_complex<F>(lambda);
  Hh1<F> abs = hh1(cx);

  std::vector<std::string> b_names;
  for (const Arrow& ar : b.quiver().arrows()) b_names.push_back(ar.name);
  SubalgebraPair pair = SubalgebraPair::make(lambda, b_names);
  RelativeHh1<F> rel = relative_hh1(cx, pair, abs);

  DualExtResult out;
  out.dim_lambda = lambda.dim();
  out.dim_hh0_lambda = hh0(cx).dim();
  out.dim_hh1_lambda = abs.h.dim();
  out.dim_hh1_lambda_rel_b = rel.h.dim();
  out.graded_hh1_lambda = abs.graded;
  out.dim_ker_rel_b = rel.ker.dim();

  auto is_mixed = [&](const Path& p) {
    bool has_b = false, has_star = false;
    for (int ar : p.arrows) (ar < nb ? has_b : has_star) = true;
    return has_b && has_star;
  };
  std::vector<bool> jmask(static_cast<size_t>(cx.p1.dim()), false);
  for (int k = 0; k < cx.p1.dim(); ++k) {
    const auto& e = cx.p1.entry(k);
    jmask[static_cast<size_t>(k)] =
        e.left < nb && is_mixed(lambda.basis()[static_cast<size_t>(e.basis)]);
  }
  Subspace<F> jprime = kernel_supported(cx.d1, jmask);
  out.dim_j_prime = jprime.dim();

  Subspace<F> j = Subspace<F>::sum(jprime, rel.ker);
  out.dim_j = j.dim();
  if (out.dim_j != out.dim_j_prime + out.dim_ker_rel_b)
    throw VerificationError("the two parts of J are not independent");

  std::vector<std::vector<F>> icols;
  auto cols = cx.d0.transposed().dense_rows();
  for (int k = 0; k < cx.p0.dim(); ++k)
    if (cx.p0.degree(k) >= 2) icols.push_back(std::move(cols[static_cast<size_t>(k)]));
  Subspace<F> i_space = Subspace<F>::from_vectors(cx.p1.dim(), std::move(icols));
  out.dim_i = i_space.dim();
  out.i_in_j = j.contains(i_space);
  if (!out.i_in_j) throw VerificationError("Im d0 on nontrivial cycles is not contained in J");

  Subquotient<F> jmodi = Subquotient<F>::make(j, i_space);
  out.dim_j_mod_i = jmodi.dim();
  out.graded_j_mod_i = graded_quotient_dims(row_degrees(j, cx.p1), row_degrees(i_space, cx.p1));

  CochainComplex<F> cxb = build_complex<F>(b);
  Hh1<F> hb = hh1(cxb);
  out.dim_hh1_b = hb.h.dim();
  out.graded_hh1_b = hb.graded;

  out.exact_sequence = out.dim_hh1_lambda == out.dim_j_mod_i + out.dim_hh1_b;
  auto deg1 = [](const std::map<int, int>& g) {
    auto it = g.find(1);
    return it == g.end() ? 0 : it->second;
  };
  out.degree_one_additive =
      deg1(out.graded_hh1_lambda) == deg1(out.graded_j_mod_i) + deg1(out.graded_hh1_b);

  out.j_is_ideal = true;
  for (const auto& u : abs.ker.basis)
    for (const auto& v : j.basis)
      if (!j.contains(bracket_raw(cx, u, v))) out.j_is_ideal = false;

  std::vector<bool> aopmask(static_cast<size_t>(cx.p1.dim()), false);
  for (int k = 0; k < cx.p1.dim(); ++k)
    aopmask[static_cast<size_t>(k)] = cx.p1.entry(k).left < nb;
  Subspace<F> ker_rel_aop = kernel_supported(cx.d1, aopmask);
  out.kernel_splits =
      ker_rel_aop.dim() + rel.ker.dim() == abs.ker.dim() &&
      Subspace<F>::sum(ker_rel_aop, rel.ker).dim() == abs.ker.dim();

  // embed the kernel of B's own complex along B-pairs of lambda
  out.b_kernel_embeds = true;
  std::vector<std::vector<F>> embedded;
  for (const auto& row : hb.ker.basis) {
    std::vector<F> v(static_cast<size_t>(cx.p1.dim()), F{});
    for (int k = 0; k < cxb.p1.dim(); ++k) {
      if (is_zero(row[static_cast<size_t>(k)])) continue;
      const auto& e = cxb.p1.entry(k);
      const Path& p = b.basis()[static_cast<size_t>(e.basis)];
      auto bi = lambda.basis_index(p.source, p.arrows);
      if (!bi) throw VerificationError("a basis path of B vanished in the dual extension");
      v[static_cast<size_t>(*cx.p1.index(e.left, *bi))] = row[static_cast<size_t>(k)];
    }
    if (!abs.ker.contains(v)) out.b_kernel_embeds = false;
    embedded.push_back(std::move(v));
  }

  // brackets between degree-one classes of the two summands die in cohomology
  out.split_brackets_vanish = true;
  std::vector<int> jdegs = row_degrees(j, cx.p1);
  std::vector<int> bdegs = row_degrees(hb.ker, cxb.p1);
  for (size_t s = 0; s < j.basis.size(); ++s) {
    if (jdegs[s] != 1) continue;
    for (size_t t = 0; t < embedded.size(); ++t) {
      if (bdegs[t] != 1) continue;
      std::vector<F> br = bracket_raw(cx, j.basis[s], embedded[t]);
      if (!abs.im.contains(br)) out.split_brackets_vanish = false;
    }
  }

  LieAlgebra<F> L = lie_from_subquotient(cx, abs.h);
  out.hh1_lambda_lie = analyze(L);
  return out;
}

}  // namespace qhh
