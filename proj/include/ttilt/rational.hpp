#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace ttilt {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger is promoted to a GMP rational and demoted again as
/// soon as it fits. Matrices arising from quiver representations are mostly
/// 0/±1, so the inline path carries almost all of the arithmetic.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long v) : num_(v) { if (v == INT64_MIN) promote_from(mpq_class(mpz_class(v))); }
  Rational(long long v) : Rational(static_cast<long>(v)) {}
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  bool is_integer() const;
  int sign() const;

  /// Bits in numerator plus bits in denominator; the pivot cost used by
  /// elimination.
  std::size_t bit_size() const;

  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  /// Numerator and denominator; only valid when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void assign(const mpq_class& q);
  void promote_from(const mpq_class& q) { big_ = std::make_unique<mpq_class>(q); }
  static Rational from_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ttilt

namespace Eigen {
template <>
struct NumTraits<ttilt::Rational> : GenericNumTraits<ttilt::Rational> {
  using Real = ttilt::Rational;
  using NonInteger = ttilt::Rational;
  using Nested = ttilt::Rational;
  using Literal = ttilt::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(INT64_MAX); }
  static inline Real lowest() { return Real(-INT64_MAX); }
};
}  // namespace Eigen
