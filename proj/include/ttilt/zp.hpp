#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace ttilt {

/// Element of the prime field F_p.
///
/// The modulus travels with the value. A value built from a plain integer has
/// modulus 0 and takes the modulus of whatever it is combined with, so generic
/// code can write `S(0)` and `S(1)` without knowing p. Mixing two different
/// nonzero moduli throws.
class Zp {
 public:
  Zp() = default;
  Zp(int v) : v_(v) {}
  Zp(long v) : v_(v) {}
  Zp(long long v) : v_(v) {}
  Zp(std::int64_t v, std::int64_t p);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  bool is_zero() const;
  bool is_one() const;
  Zp inverse() const;
  std::string str() const;

  friend Zp operator+(const Zp& a, const Zp& b);
  friend Zp operator-(const Zp& a, const Zp& b);
  friend Zp operator*(const Zp& a, const Zp& b);
  friend Zp operator/(const Zp& a, const Zp& b);
  friend Zp operator-(const Zp& a);
  Zp& operator+=(const Zp& b) { return *this = *this + b; }
  Zp& operator-=(const Zp& b) { return *this = *this - b; }
  Zp& operator*=(const Zp& b) { return *this = *this * b; }
  Zp& operator/=(const Zp& b) { return *this = *this / b; }

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

 private:
  std::int64_t v_ = 0;
  std::int64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

bool is_prime(std::int64_t p);

}  // namespace ttilt

namespace Eigen {
template <>
struct NumTraits<ttilt::Zp> : GenericNumTraits<ttilt::Zp> {
  using Real = ttilt::Zp;
  using NonInteger = ttilt::Zp;
  using Nested = ttilt::Zp;
  using Literal = ttilt::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
