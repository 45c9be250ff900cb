#pragma once

// Brute-force reference values for the test suite.  This path never touches
// the pair complex: it sets up a derivation as one unknown coefficient per
// parallel basis pair, imposes the Leibniz rule on every product of basis
// elements, and quotients by the span of the commutator maps ad_z over
// diagonal (cycle) elements z.  Dimensions obtained this way are compared
// against the cochain pipeline in the tests.  Only fit for small algebras.

#include <map>
#include <vector>

#include "qhh/algebra.hpp"
#include "qhh/matrix.hpp"

namespace qhh::oracle {

struct Dims {
  int der = 0;
  int inner = 0;        // dim of Im(ad) inside the derivation space
  int hh1 = 0;
  int der_rel = 0;      // derivations vanishing on the subalgebra arrows
  int inner_rel = 0;
  int hh1_rel = 0;
  int center = 0;
};

template <class F>
Dims dims(const SubalgebraPair& pair) {
  const MonomialAlgebra& alg = pair.a;
  const FieldSpec& fs = alg.field();
  int n = alg.dim();
  auto len = [&](int i) { return alg.basis()[static_cast<size_t>(i)].length(); };
  auto src = [&](int i) { return alg.basis()[static_cast<size_t>(i)].source; };
  auto tgt = [&](int i) { return alg.basis()[static_cast<size_t>(i)].target; };

  // unknowns: f(b) = sum over b' parallel to b of c[(b, b')] b', for b nontrivial
  std::map<std::pair<int, int>, int> var;
  for (int b = 0; b < n; ++b) {
    if (len(b) == 0) continue;
    for (int bp : alg.parallel_basis(src(b), tgt(b)))
      var[{b, bp}] = static_cast<int>(var.size());
  }
  int nvars = static_cast<int>(var.size());

  // Leibniz on every composable product x*y (y acts first)
  std::vector<std::map<int, long long>> rows;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (len(x) == 0 && len(y) == 0) continue;
      if (tgt(y) != src(x)) continue;
      std::map<int, std::map<int, long long>> byw;
      auto m = alg.multiply(x, y);
      if (m && len(*m) >= 1)
        for (int w : alg.parallel_basis(src(y), tgt(x))) byw[w][var.at({*m, w})] += 1;
      if (len(x) >= 1)
        for (int u : alg.parallel_basis(src(x), tgt(x)))
          if (auto p = alg.multiply(u, y)) byw[*p][var.at({x, u})] -= 1;
      if (len(y) >= 1)
        for (int u : alg.parallel_basis(src(y), tgt(y)))
          if (auto p = alg.multiply(x, u)) byw[*p][var.at({y, u})] -= 1;
      for (auto& [w, row] : byw) rows.push_back(std::move(row));
    }

  auto to_matrix = [&](const std::vector<std::map<int, long long>>& rs, int extra_src) {
    ExactMatrix<F> m(static_cast<int>(rs.size()) + extra_src, nvars);
    for (size_t r = 0; r < rs.size(); ++r)
      for (const auto& [c, coeff] : rs[r]) m.add(static_cast<int>(r), c, scalar_of<F>(coeff, fs));
    return m;
  };

  Dims out;
  Subspace<F> der = kernel(to_matrix(rows, 0));
  out.der = der.dim();

  // the same system plus f(a) = 0 for every subalgebra arrow a
  std::vector<std::map<int, long long>> rel_rows = rows;
  for (const auto& [bv, idx] : var) {
    int b = bv.first;
    if (len(b) != 1) continue;
    if (!pair.in_b[static_cast<size_t>(alg.basis()[static_cast<size_t>(b)].arrows[0])]) continue;
    rel_rows.push_back({{idx, 1}});
  }
  Subspace<F> der_rel = kernel(to_matrix(rel_rows, 0));
  out.der_rel = der_rel.dim();

  // commutator maps of diagonal elements, in the same unknown coordinates
  std::vector<std::vector<F>> ad_cols;
  for (int z = 0; z < n; ++z) {
    if (src(z) != tgt(z)) continue;
    std::vector<F> col(static_cast<size_t>(nvars), F{});
    for (const auto& [bv, idx] : var) {
      auto [b, bp] = bv;
      F c{};
      if (auto p = alg.multiply(z, b); p && *p == bp) c += scalar_of<F>(1, fs);
      if (auto p = alg.multiply(b, z); p && *p == bp) c -= scalar_of<F>(1, fs);
      col[static_cast<size_t>(idx)] = c;
    }
    ad_cols.push_back(std::move(col));
  }
  Subspace<F> inner = Subspace<F>::from_vectors(nvars, std::move(ad_cols));
  out.inner = Subspace<F>::intersect(inner, der).dim();
  out.inner_rel = Subspace<F>::intersect(inner, der_rel).dim();
  out.hh1 = out.der - out.inner;
  out.hh1_rel = out.der_rel - out.inner_rel;

  // center: z with z*x = x*z against every basis element x
  std::vector<std::map<int, long long>> crows;
  for (int x = 0; x < n; ++x) {
    std::map<int, std::map<int, long long>> byw;
    for (int b = 0; b < n; ++b) {
      if (auto p = alg.multiply(b, x)) byw[*p][b] += 1;
      if (auto p = alg.multiply(x, b)) byw[*p][b] -= 1;
    }
    for (auto& [w, row] : byw) crows.push_back(std::move(row));
  }
  ExactMatrix<F> cm(static_cast<int>(crows.size()), n);
  for (size_t r = 0; r < crows.size(); ++r)
    for (const auto& [c, coeff] : crows[r]) cm.add(static_cast<int>(r), c, scalar_of<F>(coeff, fs));
  out.center = kernel(cm).dim();
  return out;
}

}  // namespace qhh::oracle
