#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace cfrac {

/// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(long value) : v_(value) {}  // NOLINT: implicit from integer literals
  ExactInt(int value) : v_(value) {}   // NOLINT
  ExactInt(unsigned long value) : v_(value) {}  // NOLINT
  explicit ExactInt(const mpz_class& value) : v_(value) {}

  /// Parses an optionally signed decimal string. Throws DomainError on junk.
  static ExactInt parse(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  ExactInt abs() const { return ExactInt(mpz_class(::abs(v_))); }

  /// True when the value fits in an unsigned 64-bit index.
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  std::string to_string() const { return v_.get_str(10); }
  const mpz_class& raw() const { return v_; }

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  friend ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.v_)); }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v);

 private:
  mpz_class v_;
};

/// Quotient rounded toward negative infinity. Throws DivisionByZeroError.
ExactInt floor_div(const ExactInt& a, const ExactInt& b);
/// Quotient for b dividing a exactly.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);
/// Nonnegative gcd; gcd(0, 0) = 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);
ExactInt pow(const ExactInt& base, unsigned long exponent);

/// Reduced fraction num/den with den >= 1. The canonical form is enforced by
/// every constructor, so equality is structural.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(const ExactInt& integer) : num_(integer), den_(1) {}  // NOLINT
  ExactRational(long integer) : num_(integer), den_(1) {}             // NOLINT
  ExactRational(int integer) : num_(integer), den_(1) {}              // NOLINT
  ExactRational(unsigned long integer) : num_(integer), den_(1) {}    // NOLINT

  /// Reduces num/den. Throws ZeroDenominatorError when den == 0.
  static ExactRational make(const ExactInt& num, const ExactInt& den);
  /// Parses "p/q" or "p".
  static ExactRational parse(std::string_view text);

  const ExactInt& num() const { return num_; }
  const ExactInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == ExactInt(1); }

  ExactRational abs() const;
  /// Throws DivisionByZeroError for zero.
  ExactRational reciprocal() const;
  ExactInt floor() const { return floor_div(num_, den_); }

  /// "p/q", always with the slash.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  /// Throws DivisionByZeroError when o == 0.
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a);

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Cross-multiplication; denominators are positive so the order is kept.
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& v);

 private:
  ExactRational(ExactInt num, ExactInt den, int) : num_(std::move(num)), den_(std::move(den)) {}

  ExactInt num_;
  ExactInt den_;
};

inline std::strong_ordering compare(const ExactRational& a, const ExactRational& b) {
  return a <=> b;
}

ExactRational pow(const ExactRational& base, unsigned long exponent);
/// 10^-k as an exact rational.
ExactRational pow10_inverse(unsigned long k);

}  // namespace cfrac
