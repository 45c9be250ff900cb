#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhh/cochain.hpp"
#include "qhh/errors.hpp"
#include "qhh/matrix.hpp"

namespace qhh {

// The bracket on 1-cochains: on pairs,
//
//   [a//p, b//q] = b//(q with a replaced by p) - a//(p with b replaced by q),
//
// extended bilinearly.  It restricts to Ker d1 and descends to the quotient
// by Im d0; callers that accept arbitrary user vectors must go through the
// kernel-checked overload.
template <class F>
void accumulate_pair_bracket(const CochainComplex<F>& cx, int i, int j, const F& coeff,
                             std::vector<F>& out) {
  const MonomialAlgebra& alg = cx.algebra();
  const auto& ei = cx.p1.entry(i);
  const auto& ej = cx.p1.entry(j);
  const Path& p = alg.basis()[static_cast<size_t>(ei.basis)];
  const Path& q = alg.basis()[static_cast<size_t>(ej.basis)];
  for (const auto& [b, mult] : substitute(alg, q, ei.left, p))
    out[static_cast<size_t>(*cx.p1.index(ej.left, b))] += coeff * scalar_of<F>(mult, alg.field());
  for (const auto& [b, mult] : substitute(alg, p, ej.left, q))
    out[static_cast<size_t>(*cx.p1.index(ei.left, b))] -= coeff * scalar_of<F>(mult, alg.field());
}

template <class F>
std::vector<F> bracket_raw(const CochainComplex<F>& cx, const std::vector<F>& v,
                           const std::vector<F>& w) {
  std::vector<F> out(static_cast<size_t>(cx.p1.dim()), F{});
  for (int i = 0; i < cx.p1.dim(); ++i) {
    if (is_zero(v[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < cx.p1.dim(); ++j) {
      if (is_zero(w[static_cast<size_t>(j)])) continue;
      accumulate_pair_bracket(cx, i, j, v[static_cast<size_t>(i)] * w[static_cast<size_t>(j)], out);
    }
  }
  return out;
}

template <class F>
std::vector<F> bracket(const CochainComplex<F>& cx, const Subspace<F>& ker_d1,
                       const std::vector<F>& v, const std::vector<F>& w) {
  if (!ker_d1.contains(v) || !ker_d1.contains(w))
    throw InputNotInKernel("bracket operand does not lie in Ker d1");
  return bracket_raw(cx, v, w);
}

// A finite-dimensional Lie algebra by structure constants.  table[i][j] holds
// the coordinates of [x_i, x_j]; the bracket is alternating by construction
// of the sources we build these from, and that is re-checked cheaply here.
template <class F>
struct LieAlgebra {
  FieldSpec field;
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<F>>> table;

  int dim() const { return static_cast<int>(table.size()); }

  std::vector<F> apply(const std::vector<F>& x, const std::vector<F>& y) const {
    std::vector<F> out(static_cast<size_t>(dim()), F{});
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(x[static_cast<size_t>(i)])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (is_zero(y[static_cast<size_t>(j)])) continue;
        F c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        const auto& t = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int k = 0; k < dim(); ++k) out[static_cast<size_t>(k)] += c * t[static_cast<size_t>(k)];
      }
    }
    return out;
  }

  bool abelian() const {
    for (const auto& row : table)
      for (const auto& entry : row)
        for (const F& c : entry)
          if (!is_zero(c)) return false;
    return true;
  }
};

// Structure constants of a bracket-closed subspace of Ker d1, in the RREF
// basis of the subspace.  Rows are labeled by their pivot pairs.  A bracket
// falling outside the subspace is a hard error.
template <class F>
LieAlgebra<F> lie_from_subspace(const CochainComplex<F>& cx, const Subspace<F>& sub) {
  LieAlgebra<F> L;
  L.field = cx.algebra().field();
  int n = sub.dim();
  for (int r = 0; r < n; ++r) L.labels.push_back(cx.p1.label(sub.pivots[static_cast<size_t>(r)]));
  L.table.assign(static_cast<size_t>(n),
                 std::vector<std::vector<F>>(static_cast<size_t>(n),
                                             std::vector<F>(static_cast<size_t>(n), F{})));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      std::vector<F> br =
          bracket_raw(cx, sub.basis[static_cast<size_t>(s)], sub.basis[static_cast<size_t>(t)]);
      std::vector<F> c;
      if (!sub.coordinates(br, c))
        throw VerificationError("bracket of subspace elements left the subspace");
      L.table[static_cast<size_t>(s)][static_cast<size_t>(t)] = c;
      for (int k = 0; k < n; ++k)
        L.table[static_cast<size_t>(t)][static_cast<size_t>(s)][static_cast<size_t>(k)] =
            -c[static_cast<size_t>(k)];
    }
  return L;
}

// Structure constants of ker/im through the canonical transversal.  Labels
// come from the pair at the numerator pivot behind each transversal index.
template <class F>
LieAlgebra<F> lie_from_subquotient(const CochainComplex<F>& cx, const Subquotient<F>& q) {
  LieAlgebra<F> L;
  L.field = cx.algebra().field();
  int n = q.dim();
  for (int k = 0; k < n; ++k)
    L.labels.push_back(
        cx.p1.label(q.numerator.pivots[static_cast<size_t>(q.transversal_indices[static_cast<size_t>(k)])]));
  L.table.assign(static_cast<size_t>(n),
                 std::vector<std::vector<F>>(static_cast<size_t>(n),
                                             std::vector<F>(static_cast<size_t>(n), F{})));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      std::vector<F> br = bracket_raw(cx, q.transversal[static_cast<size_t>(s)],
                                      q.transversal[static_cast<size_t>(t)]);
      std::vector<F> c;
      if (!q.coordinates(br, c))
        throw VerificationError("bracket of cohomology classes left Ker d1 mod Im d0");
      L.table[static_cast<size_t>(s)][static_cast<size_t>(t)] = c;
      for (int k = 0; k < n; ++k)
        L.table[static_cast<size_t>(t)][static_cast<size_t>(s)][static_cast<size_t>(k)] =
            -c[static_cast<size_t>(k)];
    }
  return L;
}

// Span of all [u, v] with u, v running over basis rows of the two subspaces
// (coordinates of the Lie algebra itself, not of the pair space).
template <class F>
Subspace<F> span_bracket(const LieAlgebra<F>& L, const Subspace<F>& u, const Subspace<F>& v) {
  std::vector<std::vector<F>> gens;
  for (const auto& x : u.basis)
    for (const auto& y : v.basis) gens.push_back(L.apply(x, y));
  return Subspace<F>::from_vectors(L.dim(), std::move(gens));
}

template <class F>
bool is_ideal(const LieAlgebra<F>& L, const Subspace<F>& I) {
  return I.contains(span_bracket(L, Subspace<F>::full(L.dim()), I));
}

// Dimensions along the derived series L, [L,L], [[L,L],[L,L]], ... until the
// terms stabilize.  Solvable iff the last entry is zero.
template <class F>
std::vector<int> derived_series_dims(const LieAlgebra<F>& L) {
  std::vector<int> dims;
  Subspace<F> d = Subspace<F>::full(L.dim());
  dims.push_back(d.dim());
  while (d.dim() > 0) {
    Subspace<F> next = span_bracket(L, d, d);
    if (next.dim() == d.dim()) break;
    d = std::move(next);
    dims.push_back(d.dim());
  }
  return dims;
}

// Dimensions along the lower central series L, [L,L], [L,[L,L]], ...
template <class F>
std::vector<int> lower_central_dims(const LieAlgebra<F>& L) {
  std::vector<int> dims;
  Subspace<F> full = Subspace<F>::full(L.dim());
  Subspace<F> c = full;
  dims.push_back(c.dim());
  while (c.dim() > 0) {
    Subspace<F> next = span_bracket(L, full, c);
    if (next.dim() == c.dim()) break;
    c = std::move(next);
    dims.push_back(c.dim());
  }
  return dims;
}

// Whether the derived subalgebra is nilpotent, via its own lower central
// series computed in the coordinates of L.
template <class F>
bool derived_subalgebra_nilpotent(const LieAlgebra<F>& L) {
  Subspace<F> d = span_bracket(L, Subspace<F>::full(L.dim()), Subspace<F>::full(L.dim()));
  Subspace<F> c = d;
  while (c.dim() > 0) {
    Subspace<F> next = span_bracket(L, d, c);
    if (next.dim() == c.dim()) return false;
    c = std::move(next);
  }
  return true;
}

template <class F>
ExactMatrix<F> ad_matrix(const LieAlgebra<F>& L, int i) {
  ExactMatrix<F> m(L.dim(), L.dim());
  for (int j = 0; j < L.dim(); ++j)
    for (int k = 0; k < L.dim(); ++k)
      m.add(k, j, L.table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)]);
  return m;
}

template <class F>
ExactMatrix<F> killing_form(const LieAlgebra<F>& L) {
  int n = L.dim();
  std::vector<ExactMatrix<F>> ad;
  ad.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ad.push_back(ad_matrix(L, i));
  ExactMatrix<F> k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      F tr{};
      for (const auto& [rc, v] : ad[static_cast<size_t>(i)].entries)
        tr += v * ad[static_cast<size_t>(j)].at(rc.second, rc.first);
      k.add(i, j, tr);
      if (j != i) k.add(j, i, tr);
    }
  return k;
}

// The solvable radical in characteristic zero: the orthogonal space of the
// derived subalgebra under the Killing form.  The result is re-checked to be
// a solvable ideal whose quotient has zero radical.
template <class F>
Subspace<F> killing_radical(const LieAlgebra<F>& L, bool check = true);

template <class F>
LieAlgebra<F> quotient_lie(const LieAlgebra<F>& L, const Subspace<F>& ideal) {
  if (!is_ideal(L, ideal)) throw VerificationError("quotient by a non-ideal subspace");
  Subquotient<F> q = Subquotient<F>::make(Subspace<F>::full(L.dim()), ideal);
  LieAlgebra<F> out;
  out.field = L.field;
  int n = q.dim();
  for (int k = 0; k < n; ++k) out.labels.push_back("class" + std::to_string(k));
  out.table.assign(static_cast<size_t>(n),
                   std::vector<std::vector<F>>(static_cast<size_t>(n),
                                               std::vector<F>(static_cast<size_t>(n), F{})));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      std::vector<F> br =
          L.apply(q.transversal[static_cast<size_t>(s)], q.transversal[static_cast<size_t>(t)]);
      std::vector<F> c;
      if (!q.coordinates(br, c)) throw VerificationError("quotient bracket left the full space");
      out.table[static_cast<size_t>(s)][static_cast<size_t>(t)] = c;
      for (int k = 0; k < n; ++k)
        out.table[static_cast<size_t>(t)][static_cast<size_t>(s)][static_cast<size_t>(k)] =
            -c[static_cast<size_t>(k)];
    }
  return out;
}

template <class F>
Subspace<F> killing_radical(const LieAlgebra<F>& L, bool check) {
  if (L.field.characteristic() != 0)
    throw UnsupportedField("the Killing-form radical requires characteristic zero");
  ExactMatrix<F> k = killing_form(L);
  Subspace<F> derived =
      span_bracket(L, Subspace<F>::full(L.dim()), Subspace<F>::full(L.dim()));
  ExactMatrix<F> constraints(derived.dim(), L.dim());
  for (int r = 0; r < derived.dim(); ++r) {
    std::vector<F> row = k.apply(derived.basis[static_cast<size_t>(r)]);
    for (int j = 0; j < L.dim(); ++j) constraints.add(r, j, row[static_cast<size_t>(j)]);
  }
  Subspace<F> rad = kernel(constraints);
  if (check) {
    if (!is_ideal(L, rad)) throw VerificationError("computed radical is not an ideal");
    Subspace<F> d = rad;
    while (d.dim() > 0) {
      Subspace<F> next = span_bracket(L, d, d);
      if (next.dim() == d.dim()) throw VerificationError("computed radical is not solvable");
      d = std::move(next);
    }
    LieAlgebra<F> ss = quotient_lie(L, rad);
    if (killing_radical(ss, false).dim() != 0)
      throw VerificationError("quotient by the radical still has a nonzero radical");
  }
  return rad;
}

// Everything the reports and theorems need about one Lie algebra.  Radical
// and semisimple dimensions are only available in characteristic zero.
struct LieSummary {
  int dim = 0;
  std::vector<int> derived_dims;
  std::vector<int> lcs_dims;
  bool solvable = false;
  bool nilpotent = false;
  bool abelian = false;
  bool strongly_solvable = false;
  std::optional<int> radical_dim;
  std::optional<int> semisimple_dim;
};

template <class F>
LieSummary analyze(const LieAlgebra<F>& L) {
  LieSummary s;
  s.dim = L.dim();
  s.derived_dims = derived_series_dims(L);
  s.lcs_dims = lower_central_dims(L);
  s.solvable = s.derived_dims.back() == 0;
  s.nilpotent = s.lcs_dims.back() == 0;
  s.abelian = L.abelian();
  s.strongly_solvable = derived_subalgebra_nilpotent(L);
  if (L.field.characteristic() == 0) {
    int rad = killing_radical(L).dim();
    s.radical_dim = rad;
    s.semisimple_dim = L.dim() - rad;
  }
  return s;
}

}  // namespace qhh
