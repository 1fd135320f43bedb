#include "cfrac/exact.hpp"

#include <limits>
#include <ostream>

#include "cfrac/errors.hpp"

namespace cfrac {

ExactInt ExactInt::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(mpz_class(s, 10));
}

bool ExactInt::fits_u64() const {
  return sign() >= 0 && mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

std::uint64_t ExactInt::to_u64() const {
  if (!fits_u64()) throw DomainError("integer out of index range: " + to_string());
  // mpz_get_ui is only guaranteed for unsigned long.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_get_ui(v_.get_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(q);
}

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(q);
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(g);
}

ExactInt pow(const ExactInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return ExactInt(r);
}

ExactRational ExactRational::make(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw ZeroDenominatorError();
  if (num.is_zero()) return ExactRational();
  ExactInt g = gcd(num, den);
  ExactInt n = exact_div(num, g);
  ExactInt d = exact_div(den, g);
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return ExactRational(std::move(n), std::move(d), 0);
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(ExactInt::parse(text));
  return make(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(text.substr(slash + 1)));
}

ExactRational ExactRational::abs() const { return ExactRational(num_.abs(), den_, 0); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError();
  return make(den_, num_);
}

std::string ExactRational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  *this = make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  *this = make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  *this = make(num_ * o.num_, den_ * o.den_);
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw DivisionByZeroError();
  *this = make(num_ * o.den_, den_ * o.num_);
  return *this;
}

ExactRational operator-(const ExactRational& a) { return ExactRational(-a.num_, a.den_, 0); }

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

ExactRational pow(const ExactRational& base, unsigned long exponent) {
  return ExactRational::make(pow(base.num(), exponent), pow(base.den(), exponent));
}

ExactRational pow10_inverse(unsigned long k) {
  return ExactRational::make(ExactInt(1), pow(ExactInt(10), k));
}

}  // namespace cfrac
