#pragma once

#include <vector>

#include "ttilt/algebra.hpp"

namespace ttilt {

/// A-linear map between direct sums of indecomposable projectives,
/// ⊕_s P_{cols[s]} → ⊕_t P_{rows[t]}. Entry (t, s) lies in e_{rows[t]} A e_{cols[s]}
/// and acts by left multiplication, so composition is ordinary matrix product
/// with algebra entries.
template <class S>
struct ProjMap {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<Elem<S>> entries;  // row-major

  ProjMap() = default;
  ProjMap(std::vector<int> r, std::vector<int> c)
      : rows(std::move(r)), cols(std::move(c)), entries(rows.size() * cols.size()) {}

  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return cols.size(); }
  Elem<S>& at(std::size_t t, std::size_t s) { return entries[t * cols.size() + s]; }
  const Elem<S>& at(std::size_t t, std::size_t s) const { return entries[t * cols.size() + s]; }
  bool is_zero() const {
    for (const auto& e : entries)
      if (!e.empty()) return false;
    return true;
  }
  std::size_t nonzeros() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += !e.empty();
    return c;
  }
  friend bool operator==(const ProjMap&, const ProjMap&) = default;
};

template <class S>
ProjMap<S> identity_projmap(const Algebra<S>& alg, const std::vector<int>& vs) {
  ProjMap<S> m(vs, vs);
  for (std::size_t i = 0; i < vs.size(); ++i) m.at(i, i) = alg.unit(vs[i]);
  return m;
}

/// g ∘ f.
template <class S>
ProjMap<S> compose(const Algebra<S>& alg, const ProjMap<S>& g, const ProjMap<S>& f) {
  ProjMap<S> r(g.rows, f.cols);
  for (std::size_t t = 0; t < f.nrows(); ++t)
    for (std::size_t s = 0; s < f.ncols(); ++s) {
      const Elem<S>& x = f.at(t, s);
      if (x.empty()) continue;
      for (std::size_t u = 0; u < g.nrows(); ++u) {
        const Elem<S>& y = g.at(u, t);
        if (y.empty()) continue;
        r.at(u, s) = add(r.at(u, s), alg.multiply(y, x));
      }
    }
  return r;
}

template <class S>
ProjMap<S> add(const ProjMap<S>& a, const ProjMap<S>& b, const S& f = S(1)) {
  ProjMap<S> r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = add(a.entries[i], b.entries[i], f);
  return r;
}

template <class S>
ProjMap<S> scale(const ProjMap<S>& a, const S& f) {
  ProjMap<S> r = a;
  for (auto& e : r.entries) e = scale(e, f);
  return r;
}

/// Sub-map on the chosen rows and columns.
template <class S>
ProjMap<S> restrict_map(const ProjMap<S>& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
  std::vector<int> rv, cv;
  for (auto r : rs) rv.push_back(m.rows[r]);
  for (auto c : cs) cv.push_back(m.cols[c]);
  ProjMap<S> out(rv, cv);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, j) = m.at(rs[i], cs[j]);
  return out;
}

/// [[a, b], [c, d]] as one map; any block may be given by its shape only.
template <class S>
ProjMap<S> block_map(const ProjMap<S>& a, const ProjMap<S>& b, const ProjMap<S>& c, const ProjMap<S>& d) {
  std::vector<int> rows = a.rows, cols = a.cols;
  rows.insert(rows.end(), c.rows.begin(), c.rows.end());
  cols.insert(cols.end(), b.cols.begin(), b.cols.end());
  ProjMap<S> m(rows, cols);
  auto put = [&](const ProjMap<S>& blk, std::size_t r0, std::size_t c0) {
    if (blk.entries.empty()) return;
    for (std::size_t i = 0; i < blk.nrows(); ++i)
      for (std::size_t j = 0; j < blk.ncols(); ++j) m.at(r0 + i, c0 + j) = blk.at(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.ncols());
  put(c, a.nrows(), 0);
  put(d, a.nrows(), a.ncols());
  return m;
}

/// Map with the given shape and no nonzero entries.
template <class S>
ProjMap<S> zero_projmap(const std::vector<int>& rows, const std::vector<int>& cols) {
  return ProjMap<S>(rows, cols);
}

/// Coefficient of e_v in an entry of e_v A e_v; zero for other entries.
template <class S>
S unit_part(const Algebra<S>& alg, const Elem<S>& x, int v) {
  (void)alg;
  for (const auto& [b, c] : x) {
    if (b == v) return c;
    if (b > v) break;
  }
  return S(0);
}

/// Inverse of a unit λ e_v + r of e_v A e_v with r in the radical.
template <class S>
Elem<S> invert_local(const Algebra<S>& alg, const Elem<S>& x, int v) {
  S lam = unit_part(alg, x, v);
  if (lam.is_zero()) throw InvariantViolation("inverting a non-unit algebra element");
  S li = lam.inverse();
  Elem<S> r = add(x, alg.unit(v), -lam);  // radical part
  Elem<S> q = scale(r, -li);             // -λ⁻¹ r, nilpotent
  Elem<S> term = alg.unit(v), sum = alg.unit(v);
  for (;;) {
    term = alg.multiply(term, q);
    if (term.empty()) break;
    sum = add(sum, term);
  }
  return scale(sum, li);
}

/// Reduction modulo the radical: scalar matrix of unit parts, zero between
/// different vertices.
template <class S>
Matrix<S> top_part(const Algebra<S>& alg, const ProjMap<S>& m) {
  Matrix<S> r = zero_matrix<S>(static_cast<Index>(m.nrows()), static_cast<Index>(m.ncols()));
  for (std::size_t t = 0; t < m.nrows(); ++t)
    for (std::size_t s = 0; s < m.ncols(); ++s)
      if (m.rows[t] == m.cols[s]) r(static_cast<Index>(t), static_cast<Index>(s)) = unit_part(alg, m.at(t, s), m.rows[t]);
  return r;
}

/// Inverse of a square map whose reduction modulo the radical is invertible.
template <class S>
ProjMap<S> invert_projmap(const Algebra<S>& alg, const ProjMap<S>& m) {
  const Index k = static_cast<Index>(m.nrows());
  Matrix<S> top = top_part(alg, m);
  auto inv = solve<S>(top, identity_matrix<S>(k));
  if (!inv || mul<S>(top, *inv) != identity_matrix<S>(k)) throw InvariantViolation("projective map is not invertible");
  ProjMap<S> ti(m.cols, m.rows);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      if (!(*inv)(i, j).is_zero()) ti.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = alg.unit(m.cols[static_cast<std::size_t>(i)], (*inv)(i, j));
  // m = top (1 + top⁻¹ n) with n radical; invert the unipotent factor by a finite series.
  ProjMap<S> one = identity_projmap(alg, m.cols);
  ProjMap<S> q = add(compose(alg, ti, m), one, S(-1));  // top⁻¹ m - 1, nilpotent
  ProjMap<S> term = one, sum = one;
  for (;;) {
    term = scale(compose(alg, term, q), S(-1));
    if (term.is_zero()) break;
    sum = add(sum, term);
  }
  return compose(alg, sum, ti);
}

}  // namespace ttilt
