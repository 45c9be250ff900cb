#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qhh/errors.hpp"
#include "qhh/field.hpp"

namespace qhh {

// Sparse exact matrix.  Stored entries are never zero.  Elimination is done on
// dense copies; every pivot choice is "first nonzero in canonical order", so
// echelon forms, kernels and transversals are deterministic and reproducible.
template <class F>
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, F> entries;

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c) {}

  F at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? F{} : it->second;
  }

  void set(int r, int c, const F& v) {
    if (is_zero(v))
      entries.erase({r, c});
    else
      entries[{r, c}] = v;
  }

  void add(int r, int c, const F& v) {
    auto it = entries.find({r, c});
    if (it == entries.end()) {
      if (!is_zero(v)) entries.emplace(std::make_pair(r, c), v);
      return;
    }
    it->second += v;
    if (is_zero(it->second)) entries.erase(it);
  }

  bool is_zero_matrix() const { return entries.empty(); }

  std::vector<F> apply(const std::vector<F>& x) const {
    std::vector<F> y(rows, F{});
    for (const auto& [rc, v] : entries) y[rc.first] += v * x[rc.second];
    return y;
  }

  ExactMatrix transposed() const {
    ExactMatrix t(cols, rows);
    for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
    return t;
  }

  std::vector<std::vector<F>> dense_rows() const {
    std::vector<std::vector<F>> d(rows, std::vector<F>(cols, F{}));
    for (const auto& [rc, v] : entries) d[rc.first][rc.second] = v;
    return d;
  }

  static ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix c(a.rows, b.cols);
    // group b's entries by row for the sparse product
    std::vector<std::vector<std::pair<int, F>>> brow(b.rows);
    for (const auto& [rc, v] : b.entries) brow[rc.first].push_back({rc.second, v});
    for (const auto& [rc, v] : a.entries)
      for (const auto& [j, w] : brow[rc.second]) c.add(rc.first, j, v * w);
    return c;
  }
};

template <class F>
struct Echelon {
  std::vector<std::vector<F>> rows;  // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;           // pivot column of each row, strictly increasing
  int cols = 0;
};

template <class F>
Echelon<F> rref(std::vector<std::vector<F>> rows, int cols) {
  Echelon<F> e;
  e.cols = cols;
  size_t done = 0;
  for (int col = 0; col < cols && done < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t r = done; r < rows.size(); ++r)
      if (!is_zero(rows[r][col])) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[done], rows[piv]);
    F inv = F{1} / rows[done][col];
    for (int c = col; c < cols; ++c) rows[done][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == done || is_zero(rows[r][col])) continue;
      F f = rows[r][col];
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[done][c];
    }
    e.pivots.push_back(col);
    ++done;
  }
  rows.resize(done);
  e.rows = std::move(rows);
  return e;
}

// A linear subspace of k^n held in reduced row echelon form, so that equal
// subspaces have identical representations.
template <class F>
struct Subspace {
  int ambient = 0;
  std::vector<std::vector<F>> basis;  // RREF rows
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(basis.size()); }

  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
  }

  static Subspace full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    for (int i = 0; i < ambient; ++i) {
      std::vector<F> row(ambient, F{});
      row[i] = F{1};
      s.basis.push_back(std::move(row));
      s.pivots.push_back(i);
    }
    return s;
  }

  static Subspace from_vectors(int ambient, std::vector<std::vector<F>> vecs) {
    Echelon<F> e = rref(std::move(vecs), ambient);
    Subspace s;
    s.ambient = ambient;
    s.basis = std::move(e.rows);
    s.pivots = std::move(e.pivots);
    return s;
  }

  // Canonical residue: v minus the unique element of the subspace matching v
  // on the pivot coordinates.  Zero iff v lies in the subspace.
  std::vector<F> reduce(std::vector<F> v) const {
    for (size_t r = 0; r < basis.size(); ++r) {
      const F& c = v[pivots[r]];
      if (is_zero(c)) continue;
      F f = c;
      for (int j = 0; j < ambient; ++j) v[j] -= f * basis[r][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    std::vector<F> r = reduce(v);
    for (const F& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  // Coordinates of v in the RREF basis (read off the pivot columns), or
  // false when v is not in the subspace.
  bool coordinates(const std::vector<F>& v, std::vector<F>& out) const {
    if (!contains(v)) return false;
    out.assign(basis.size(), F{});
    for (size_t r = 0; r < basis.size(); ++r) out[r] = v[pivots[r]];
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.basis)
      if (!contains(row)) return false;
    return true;
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<std::vector<F>> rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return from_vectors(a.ambient, std::move(rows));
  }

  // Zassenhaus: eliminate [a | a] over [b | 0]; rows whose left half died
  // carry the intersection in the right half.
  static Subspace intersect(const Subspace& a, const Subspace& b) {
    int n = a.ambient;
    std::vector<std::vector<F>> block;
    for (const auto& row : a.basis) {
      std::vector<F> r(2 * n, F{});
      for (int j = 0; j < n; ++j) r[j] = r[n + j] = row[j];
      block.push_back(std::move(r));
    }
    for (const auto& row : b.basis) {
      std::vector<F> r(2 * n, F{});
      for (int j = 0; j < n; ++j) r[j] = row[j];
      block.push_back(std::move(r));
    }
    Echelon<F> e = rref(std::move(block), 2 * n);
    std::vector<std::vector<F>> inter;
    for (size_t r = 0; r < e.rows.size(); ++r) {
      if (e.pivots[r] < n) continue;
      inter.emplace_back(e.rows[r].begin() + n, e.rows[r].end());
    }
    return from_vectors(n, std::move(inter));
  }
};

// Solution space of M x = 0.
template <class F>
Subspace<F> kernel(const ExactMatrix<F>& m) {
  Echelon<F> e = rref(m.dense_rows(), m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> vecs;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(m.cols, F{});
    v[c] = F{1};
    for (size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][c];
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::from_vectors(m.cols, std::move(vecs));
}

template <class F>
Subspace<F> column_space(const ExactMatrix<F>& m) {
  return Subspace<F>::from_vectors(m.rows, m.transposed().dense_rows());
}

template <class F>
int rank(const ExactMatrix<F>& m) {
  return static_cast<int>(rref(m.dense_rows(), m.cols).pivots.size());
}

// Canonical complement data for denominator ⊆ numerator, with coordinates of
// quotient classes read off deterministically.
template <class F>
struct Subquotient {
  Subspace<F> numerator;
  Subspace<F> denominator;
  // denominator expressed in numerator coordinates, echelonized
  Echelon<F> den_in_num;
  std::vector<int> transversal_indices;       // numerator rows not pivotal for den_in_num
  std::vector<std::vector<F>> transversal;    // canonical ambient representatives

  int dim() const { return numerator.dim() - denominator.dim(); }

  static Subquotient make(Subspace<F> num, Subspace<F> den) {
    if (!num.contains(den))
      throw VerificationError("subquotient denominator is not contained in the numerator");
    Subquotient q;
    q.numerator = std::move(num);
    q.denominator = std::move(den);
    int n = q.numerator.dim();
    std::vector<std::vector<F>> dcoords;
    for (const auto& row : q.denominator.basis) dcoords.push_back(q.coords_in_numerator(row));
    q.den_in_num = rref(std::move(dcoords), n);
    std::vector<bool> dpiv(n, false);
    for (int p : q.den_in_num.pivots) dpiv[p] = true;
    for (int i = 0; i < n; ++i) {
      if (dpiv[i]) continue;
      q.transversal_indices.push_back(i);
      std::vector<F> unit(n, F{});
      unit[i] = F{1};
      q.transversal.push_back(q.from_numerator_coords(q.reduce_coords(std::move(unit))));
    }
    return q;
  }

  // Quotient coordinates of an ambient vector; nullopt-like empty result if
  // the vector is not in the numerator.
  bool coordinates(const std::vector<F>& v, std::vector<F>& out) const {
    if (!numerator.contains(v)) return false;
    std::vector<F> c = coords_in_numerator(v);
    c = reduce_coords(std::move(c));
    out.assign(transversal_indices.size(), F{});
    for (size_t k = 0; k < transversal_indices.size(); ++k) out[k] = c[transversal_indices[k]];
    return true;
  }

 private:
  std::vector<F> coords_in_numerator(const std::vector<F>& v) const {
    // valid for v in the numerator because the numerator basis is in RREF
    std::vector<F> c(numerator.dim(), F{});
    for (int i = 0; i < numerator.dim(); ++i) c[i] = v[numerator.pivots[i]];
    return c;
  }

  std::vector<F> from_numerator_coords(const std::vector<F>& c) const {
    std::vector<F> v(numerator.ambient, F{});
    for (int i = 0; i < numerator.dim(); ++i) {
      if (is_zero(c[i])) continue;
      for (int j = 0; j < numerator.ambient; ++j) v[j] += c[i] * numerator.basis[i][j];
    }
    return v;
  }

  std::vector<F> reduce_coords(std::vector<F> c) const {
    for (size_t r = 0; r < den_in_num.rows.size(); ++r) {
      const F& x = c[den_in_num.pivots[r]];
      if (is_zero(x)) continue;
      F f = x;
      for (int j = 0; j < den_in_num.cols; ++j) c[j] -= f * den_in_num.rows[r][j];
    }
    return c;
  }
};

}  // namespace qhh
