#pragma once

// Splitting finite-dimensional endomorphism algebras given by structure
// constants. Shared by module and complex decomposition.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ttilt/linalg.hpp"

namespace ttilt {

/// Algebra E with basis x_0..x_{m-1}; table[i*m + j] holds the coordinates of
/// x_i x_j, where the product means "x_i after x_j".
template <class S>
struct FiniteAlgebra {
  int dim = 0;
  std::vector<Vector<S>> table;
  Vector<S> one;

  Vector<S> mul(const Vector<S>& x, const Vector<S>& y) const {
    Vector<S> r(dim);
    r.fill(S(0));
    for (int i = 0; i < dim; ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y(j).is_zero()) continue;
        S c = x(i) * y(j);
        const Vector<S>& t = table[static_cast<std::size_t>(i * dim + j)];
        for (int k = 0; k < dim; ++k)
          if (!t(k).is_zero()) r(k) += c * t(k);
      }
    }
    return r;
  }

  /// Matrix of y ↦ x y.
  Matrix<S> left_regular(const Vector<S>& x) const {
    Matrix<S> l = zero_matrix<S>(dim, dim);
    for (int j = 0; j < dim; ++j) {
      Vector<S> e(dim);
      e.fill(S(0));
      e(j) = S(1);
      l.col(j) = mul(x, e);
    }
    return l;
  }

  Vector<S> basis_vector(int i) const {
    Vector<S> e(dim);
    e.fill(S(0));
    e(i) = S(1);
    return e;
  }
};

/// Gram matrix of the trace form (x, y) ↦ tr(L_{xy}). In characteristic 0
/// its kernel is the Jacobson radical.
template <class S>
Matrix<S> trace_form(const FiniteAlgebra<S>& e) {
  const int m = e.dim;
  std::vector<S> tr(static_cast<std::size_t>(m), S(0));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) tr[static_cast<std::size_t>(k)] += e.table[static_cast<std::size_t>(k * m + l)](l);
  Matrix<S> g = zero_matrix<S>(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vector<S>& p = e.table[static_cast<std::size_t>(i * m + j)];
      S acc(0);
      for (int k = 0; k < m; ++k)
        if (!p(k).is_zero()) acc += p(k) * tr[static_cast<std::size_t>(k)];
      g(i, j) = acc;
    }
  return g;
}

namespace detail {

template <class S>
using Poly = std::vector<S>;  // coefficients, constant term first

template <class S>
void trim(Poly<S>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class S>
Poly<S> poly_sub(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r(std::max(a.size(), b.size()), S(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class S>
Poly<S> poly_mul(const Poly<S>& a, const Poly<S>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<S> r(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

template <class S>
void poly_divmod(Poly<S> a, const Poly<S>& b, Poly<S>& q, Poly<S>& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, S(0));
  S lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    S c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  r = a;
}

// u, v with u a + v b = gcd(a, b), gcd monic.
template <class S>
Poly<S> ext_gcd(const Poly<S>& a, const Poly<S>& b, Poly<S>& u, Poly<S>& v) {
  Poly<S> r0 = a, r1 = b, s0{S(1)}, s1{}, t0{}, t1{S(1)};
  while (!r1.empty()) {
    Poly<S> q, r;
    poly_divmod(r0, r1, q, r);
    Poly<S> s2 = poly_sub(s0, poly_mul(q, s1));
    Poly<S> t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  S inv = r0.back().inverse();
  for (auto& c : r0) c *= inv;
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  u = s0;
  v = t0;
  return r0;
}

// Minimal polynomial of y in E, from the first linear dependence among powers.
template <class S>
Poly<S> minimal_polynomial(const FiniteAlgebra<S>& e, const Vector<S>& y) {
  std::vector<Vector<S>> powers{e.one};
  for (int k = 1; k <= e.dim + 1; ++k) {
    powers.push_back(e.mul(y, powers.back()));
    Matrix<S> m(e.dim, k);
    for (int i = 0; i < k; ++i) m.col(i) = powers[static_cast<std::size_t>(i)];
    auto c = solve<S>(m, Matrix<S>(powers.back()));
    if (!c) continue;
    Poly<S> p(static_cast<std::size_t>(k) + 1, S(0));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = -(*c)(i, 0);
    p[static_cast<std::size_t>(k)] = S(1);
    return p;
  }
  throw InvariantViolation("no minimal polynomial found");
}

template <class S>
Vector<S> evaluate(const FiniteAlgebra<S>& e, const Poly<S>& p, const Vector<S>& y) {
  Vector<S> acc(e.dim);
  acc.fill(S(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = e.mul(y, acc);
    acc += e.one * p[i];
  }
  return acc;
}

// Rational approximations of x with small denominators (continued fractions).
inline std::vector<Rational> rational_candidates(double x) {
  std::vector<Rational> out;
  if (!std::isfinite(x) || std::fabs(x) > 1e12) return out;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double f = x;
  for (int it = 0; it < 12; ++it) {
    double a = std::floor(f);
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    if (k2 > 1000000) break;
    out.push_back(Rational(h2, k2));
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    double frac = f - a;
    if (std::fabs(frac) < 1e-12) break;
    f = 1.0 / frac;
  }
  return out;
}

// Idempotent splitting off the generalized kernel of y, if y is neither
// nilpotent nor invertible.
template <class S>
std::optional<Vector<S>> fitting_idempotent(const FiniteAlgebra<S>& e, const Vector<S>& y) {
  Poly<S> mu = minimal_polynomial(e, y);
  std::size_t k = 0;
  while (k < mu.size() && mu[k].is_zero()) ++k;
  if (k == 0) return std::nullopt;  // invertible
  Poly<S> q(mu.begin() + static_cast<std::ptrdiff_t>(k), mu.end());
  if (q.size() <= 1) return std::nullopt;  // nilpotent
  Poly<S> tk(k + 1, S(0));
  tk[k] = S(1);
  Poly<S> u, v;
  ext_gcd(tk, q, u, v);
  // u t^k + v q = 1, so v(y) q(y) is the projection onto ker y^k.
  return evaluate(e, poly_mul(v, q), y);
}

}  // namespace detail

/// A nontrivial idempotent of E, or nothing when E is local. Throws
/// DecompositionFailure when neither can be established.
template <class S>
std::optional<Vector<S>> split_idempotent(const FiniteAlgebra<S>& e, std::uint64_t seed) {
  if constexpr (!ScalarTraits<S>::char_zero) {
    (void)e;
    (void)seed;
    throw DomainError("decomposition needs characteristic 0");
  } else {
    if (e.dim <= 1) return std::nullopt;
    Matrix<S> g = trace_form(e);
    Index r = rank<S>(g);
    if (r == 1) return std::nullopt;
    if (r == 0) throw InvariantViolation("endomorphism algebra with zero trace form");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    const int trials = e.dim + 64;
    for (int t = 0; t < trials; ++t) {
      Vector<S> x;
      if (t < e.dim) {
        x = e.basis_vector(t);
      } else {
        x.resize(e.dim);
        for (int i = 0; i < e.dim; ++i) x(i) = S(coef(rng));
      }
      Matrix<S> lx = e.left_regular(x);
      Eigen::MatrixXd ld(e.dim, e.dim);
      for (int i = 0; i < e.dim; ++i)
        for (int j = 0; j < e.dim; ++j) ld(i, j) = lx(i, j).to_double();
      Eigen::EigenSolver<Eigen::MatrixXd> es(ld, false);
      std::vector<Rational> tried;
      for (Index i = 0; i < es.eigenvalues().size(); ++i) {
        auto ev = es.eigenvalues()(i);
        if (std::fabs(ev.imag()) > 1e-6) continue;
        for (const Rational& lam : detail::rational_candidates(ev.real())) {
          if (std::find(tried.begin(), tried.end(), lam) != tried.end()) continue;
          tried.push_back(lam);
          Vector<S> y = x - e.one * lam;
          if (auto idem = detail::fitting_idempotent(e, y)) return idem;
        }
      }
    }
    throw DecompositionFailure("could not split an endomorphism algebra whose semisimple part has dimension " +
                               std::to_string(r));
  }
}

/// Whether x lies outside the radical (trace form kernel).
template <class S>
bool outside_radical(const Matrix<S>& gram, const Vector<S>& x) {
  Vector<S> gx = mul<S>(gram, Matrix<S>(x));
  for (Index i = 0; i < gx.size(); ++i)
    if (!gx(i).is_zero()) return true;
  return false;
}

}  // namespace ttilt
