#include "ttilt/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ttilt {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi = static_cast<unsigned long>(u >> 64);
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::size_t bits_of(std::int64_t v) {
  std::uint64_t u = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  return u == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(u));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
    r.big_->canonicalize();
  }
  return r;
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN && d.get_si() != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s[0] == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::size_t Rational::bit_size() const {
  if (big_) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  return bits_of(num_) + bits_of(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!big_) return from_i128(den_, num_);
  Rational r;
  r.assign(1 / *big_);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    i128 s;
    if (!__builtin_add_overflow(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(b.num_) * a.den_, &s))
      return Rational::from_i128(s, static_cast<i128>(a.den_) * b.den_);
  }
  Rational r;
  r.assign(a.to_mpq() + b.to_mpq());
  return r;
}

Rational operator-(const Rational& a) {
  if (!a.big_) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  Rational r;
  r.assign(-*a.big_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) - b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    if (b.num_ == 0) return a;
    i128 s;
    if (!__builtin_sub_overflow(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(b.num_) * a.den_, &s))
      return Rational::from_i128(s, static_cast<i128>(a.den_) * b.den_);
  }
  Rational r;
  r.assign(a.to_mpq() - b.to_mpq());
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        return r;
      }
    }
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  if (a.is_zero() || b.is_zero()) return Rational();
  Rational r;
  r.assign(a.to_mpq() * b.to_mpq());
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return Rational();
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  Rational r;
  r.assign(a.to_mpq() / b.to_mpq());
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // a big value never equals a small one: both are canonical
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ttilt
