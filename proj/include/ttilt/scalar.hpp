#pragma once

#include <cstdint>
#include <string>

#include "ttilt/errors.hpp"
#include "ttilt/rational.hpp"
#include "ttilt/zp.hpp"

namespace ttilt {

/// Which exact field an algebra lives over.
struct FieldChoice {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::int64_t p = 0;

  static FieldChoice rationals() { return {}; }
  static FieldChoice prime(std::int64_t p) { return {Kind::prime, p}; }
  bool is_prime() const { return kind == Kind::prime; }
  std::string str() const { return is_prime() ? "Fp:" + std::to_string(p) : "Q"; }
  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool char_zero = true;
  static Rational from_rational(const Rational& r, const FieldChoice&) { return r; }
  static std::size_t cost(const Rational& r) { return r.bit_size(); }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static std::string str(const Rational& r) { return r.str(); }
  static bool matches(const FieldChoice& f) { return !f.is_prime(); }
};

template <>
struct ScalarTraits<Zp> {
  static constexpr bool char_zero = false;
  static Zp from_rational(const Rational& r, const FieldChoice& f) {
    if (!r.is_small()) {
      mpz_class n = r.to_mpq().get_num() % f.p, d = r.to_mpq().get_den() % f.p;
      if (d == 0) throw DomainError("denominator " + r.str() + " vanishes in " + f.str());
      return Zp(n.get_si(), f.p) / Zp(d.get_si(), f.p);
    }
    Zp d(r.small_den(), f.p);
    if (d.is_zero()) throw DomainError("denominator " + r.str() + " vanishes in " + f.str());
    return Zp(r.small_num(), f.p) / d;
  }
  static std::size_t cost(const Zp&) { return 1; }
  static bool is_zero(const Zp& z) { return z.is_zero(); }
  static std::string str(const Zp& z) { return z.str(); }
  static bool matches(const FieldChoice& f) { return f.is_prime(); }
};

}  // namespace ttilt
