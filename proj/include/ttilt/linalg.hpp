#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ttilt/scalar.hpp"

namespace ttilt {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  m.fill(S(0));
  return m;
}

template <class S>
Matrix<S> identity_matrix(Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool is_zero(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Product that skips zero entries; exact matrices here are mostly sparse.
template <class S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r = zero_matrix<S>(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < b.rows(); ++k) {
      const S& bkj = b(k, j);
      if (bkj.is_zero()) continue;
      for (Index i = 0; i < a.rows(); ++i)
        if (!a(i, k).is_zero()) r(i, j) += a(i, k) * bkj;
    }
  return r;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  r << a, b;
  return r;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix<S> r(a.rows() + b.rows(), a.cols());
  r << a, b;
  return r;
}

/// Reduced row echelon form. `pivots[k]` is the pivot column of row k; rows
/// past the rank are dropped.
template <class S>
struct Echelon {
  Matrix<S> r;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Within each column the pivot is the nonzero
/// entry of smallest bit size, ties going to the topmost row.
template <class S>
Echelon<S> rref(Matrix<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  std::vector<Index> nz;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_cost = 0;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      std::size_t cost = ScalarTraits<S>::cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    S inv = m(r, c).inverse();
    nz.clear();
    for (Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S f = m(i, c);
      for (Index j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Columns form a basis of {x : m x = 0}, one per free column of rref(m).
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  Echelon<S> e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<S> k = zero_matrix<S>(n, n - e.rank());
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = S(1);
    for (Index i = 0; i < e.rank(); ++i) k(e.pivots[static_cast<std::size_t>(i)], col) = -e.r(i, f);
    ++col;
  }
  return k;
}

/// Rows spanning {y : y m = 0}.
template <class S>
Matrix<S> left_kernel_basis(const Matrix<S>& m) {
  return kernel_basis<S>(m.transpose()).transpose();
}

/// Some x with a x = b, taking free variables to be zero.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  Echelon<S> e = rref<S>(hstack<S>(a, b));
  const Index n = a.cols();
  Matrix<S> x = zero_matrix<S>(n, b.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    Index p = e.pivots[static_cast<std::size_t>(i)];
    if (p >= n) return std::nullopt;
    x.row(p) = e.r.row(i).tail(b.cols());
  }
  return x;
}

/// h with g = f h, if one exists.
template <class S>
std::optional<Matrix<S>> solve_factorization(const Matrix<S>& f, const Matrix<S>& g) {
  return solve<S>(f, g);
}

/// Basis (as rows, in reduced echelon form) of the row space.
template <class S>
Matrix<S> row_basis(const Matrix<S>& m) {
  return rref(m).r;
}

/// Rows of `candidates` (in order) that extend `base` to a basis of the sum.
template <class S>
std::vector<Index> extending_rows(const Matrix<S>& base, const Matrix<S>& candidates) {
  std::vector<Index> chosen;
  Matrix<S> acc = row_basis<S>(base);
  Index rk = acc.rows();
  for (Index i = 0; i < candidates.rows(); ++i) {
    Matrix<S> trial = vstack<S>(acc, candidates.row(i));
    Echelon<S> e = rref<S>(trial);
    if (e.rank() > rk) {
      acc = e.r;
      rk = e.rank();
      chosen.push_back(i);
    }
  }
  return chosen;
}

template <class S>
using SparseRow = std::vector<std::pair<Index, S>>;

/// a - f * b for sparse rows sorted by column.
template <class S>
SparseRow<S> axpy(const SparseRow<S>& a, const S& f, const SparseRow<S>& b) {
  SparseRow<S> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      S v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental row echelon form for large sparse systems. Rows are reduced
/// against earlier rows in column order and normalized to a leading 1, so a
/// fixed column order plays the role of the pivot rule.
template <class S>
class SparseEchelon {
 public:
  explicit SparseEchelon(Index cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  SparseRow<S> reduce(SparseRow<S> row) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
      Index pr = pivot_row_[static_cast<std::size_t>(row[pos].first)];
      if (pr < 0) {
        ++pos;
        continue;
      }
      const SparseRow<S>& p = rows_[static_cast<std::size_t>(pr)];
      S f = row[pos].second;
      SparseRow<S> tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
      SparseRow<S> merged = axpy<S>(tail, f, p);
      row.resize(pos);
      row.insert(row.end(), merged.begin(), merged.end());
    }
    return row;
  }

  /// Returns true when the row was independent of the rows seen so far.
  bool add(SparseRow<S> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    S inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    pivot_row_[static_cast<std::size_t>(row.front().first)] = rank();
    rows_.push_back(std::move(row));
    return true;
  }

  bool in_span(const SparseRow<S>& row) const { return reduce(row).empty(); }

  std::vector<Index> free_columns() const {
    std::vector<Index> f;
    for (Index c = 0; c < cols_; ++c)
      if (pivot_row_[static_cast<std::size_t>(c)] < 0) f.push_back(c);
    return f;
  }

  /// Basis of {x : r . x = 0 for every added row r}, one vector per free
  /// column, by back substitution.
  std::vector<SparseRow<S>> kernel() const {
    std::vector<Index> order;
    for (Index c = cols_ - 1; c >= 0; --c)
      if (pivot_row_[static_cast<std::size_t>(c)] >= 0) order.push_back(c);
    std::vector<SparseRow<S>> basis;
    std::vector<S> x(static_cast<std::size_t>(cols_), S(0));
    std::vector<Index> touched;
    for (Index f : free_columns()) {
      for (Index t : touched) x[static_cast<std::size_t>(t)] = S(0);
      touched.clear();
      x[static_cast<std::size_t>(f)] = S(1);
      touched.push_back(f);
      for (Index c : order) {
        if (c > f) continue;
        const SparseRow<S>& r = rows_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(c)])];
        S acc(0);
        for (std::size_t k = 1; k < r.size(); ++k) {
          const S& xv = x[static_cast<std::size_t>(r[k].first)];
          if (!xv.is_zero()) acc -= r[k].second * xv;
        }
        if (!acc.is_zero()) {
          x[static_cast<std::size_t>(c)] = acc;
          touched.push_back(c);
        }
      }
      SparseRow<S> v;
      std::sort(touched.begin(), touched.end());
      for (Index t : touched)
        if (!x[static_cast<std::size_t>(t)].is_zero()) v.emplace_back(t, x[static_cast<std::size_t>(t)]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  Index cols_;
  std::vector<Index> pivot_row_;
  std::vector<SparseRow<S>> rows_;
};

template <class S>
SparseRow<S> to_sparse(const Vector<S>& v) {
  SparseRow<S> r;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) r.emplace_back(i, v(i));
  return r;
}

template <class S>
Vector<S> to_dense(const SparseRow<S>& r, Index n) {
  Vector<S> v(n);
  v.fill(S(0));
  for (const auto& [i, x] : r) v(i) = x;
  return v;
}

/// Coordinates with respect to a fixed family of independent sparse vectors.
/// Each basis vector is stored with a tag column appended after the ambient
/// columns; reducing a vector leaves minus its coordinates in the tags.
template <class S>
class SpanCoords {
 public:
  SpanCoords(Index ambient, const std::vector<SparseRow<S>>& basis)
      : ambient_(ambient), size_(static_cast<Index>(basis.size())), ech_(ambient + static_cast<Index>(basis.size())) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SparseRow<S> r = basis[i];
      r.emplace_back(ambient + static_cast<Index>(i), S(1));
      ech_.add(std::move(r));
    }
  }

  Index size() const { return size_; }

  std::optional<Vector<S>> coords(const SparseRow<S>& v) const {
    SparseRow<S> r = ech_.reduce(v);
    Vector<S> c(size_);
    c.fill(S(0));
    for (const auto& [i, x] : r) {
      if (i < ambient_) return std::nullopt;
      c(i - ambient_) = -x;
    }
    return c;
  }

 private:
  Index ambient_;
  Index size_;
  SparseEchelon<S> ech_;
};

}  // namespace ttilt
