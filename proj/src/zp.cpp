#include "ttilt/zp.hpp"

#include <ostream>
#include <stdexcept>

namespace ttilt {
namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t common_modulus(const Zp& a, const Zp& b) {
  if (a.modulus() == 0) return b.modulus();
  if (b.modulus() != 0 && b.modulus() != a.modulus())
    throw std::domain_error("arithmetic between different prime fields");
  return a.modulus();
}

// Value of z reduced into [0, p); p == 0 leaves plain integers alone.
std::int64_t val(const Zp& z, std::int64_t p) { return p == 0 ? z.value() : reduce(z.value(), p); }

}  // namespace

Zp::Zp(std::int64_t v, std::int64_t p) : v_(p > 0 ? reduce(v, p) : v), p_(p) {
  if (p < 0) throw std::domain_error("negative modulus");
}

bool Zp::is_zero() const { return v_ == 0; }

bool Zp::is_one() const { return p_ == 0 ? v_ == 1 : v_ == 1 % p_; }

Zp Zp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("inverse of an integer literal outside any field");
  }
  if (v_ == 0) throw std::domain_error("inverse of zero");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Zp(x0, p_);
}

std::string Zp::str() const { return std::to_string(v_); }

Zp operator+(const Zp& a, const Zp& b) {
  std::int64_t p = common_modulus(a, b);
  if (p == 0) return Zp(a.value() + b.value());
  return Zp(val(a, p) + val(b, p), p);
}

Zp operator-(const Zp& a, const Zp& b) {
  std::int64_t p = common_modulus(a, b);
  if (p == 0) return Zp(a.value() - b.value());
  return Zp(val(a, p) - val(b, p), p);
}

Zp operator-(const Zp& a) {
  if (a.modulus() == 0) return Zp(-a.value());
  return Zp(-a.value(), a.modulus());
}

Zp operator*(const Zp& a, const Zp& b) {
  std::int64_t p = common_modulus(a, b);
  if (p == 0) return Zp(a.value() * b.value());
  __int128 prod = static_cast<__int128>(val(a, p)) * val(b, p);
  return Zp(static_cast<std::int64_t>(prod % p), p);
}

Zp operator/(const Zp& a, const Zp& b) {
  std::int64_t p = common_modulus(a, b);
  if (p == 0) return a * b.inverse();
  return a * Zp(b.value(), p).inverse();
}

bool operator==(const Zp& a, const Zp& b) {
  std::int64_t p = common_modulus(a, b);
  return val(a, p) == val(b, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.str(); }

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace ttilt
