#include "cfrac/cli/decimal.hpp"

#include "cfrac/errors.hpp"
#include "cfrac/expansions.hpp"

namespace cfrac::cli {

std::string DigitString::str() const {
  std::string s = sign < 0 ? "-" : "";
  s += integer_part;
  if (!fractional_part.empty()) s += "." + fractional_part;
  return s;
}

DigitString truncate_decimal(const ExactRational& v, std::size_t digits) {
  ExactRational magnitude = v.abs();
  ExactInt scaled = (magnitude * ExactRational(pow(ExactInt(10), digits))).floor();
  std::string text = scaled.to_string();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');

  DigitString out;
  out.sign = scaled.is_zero() ? 0 : v.sign();
  out.integer_part = text.substr(0, text.size() - digits);
  out.fractional_part = text.substr(text.size() - digits);
  out.guaranteed_digits = digits;
  return out;
}

std::string decimal_preview(const ExactRational& v, std::size_t significant) {
  if (v.is_zero()) return "0";
  ExactRational magnitude = v.abs();
  std::size_t fractional = 0;
  if (magnitude >= ExactRational(1)) {
    std::size_t int_digits = magnitude.floor().to_string().size();
    fractional = int_digits >= significant ? 0 : significant - int_digits;
  } else {
    std::size_t leading_zeros = 0;
    for (ExactRational m = magnitude * ExactRational(10); m < ExactRational(1);
         m *= ExactRational(10)) {
      ++leading_zeros;
    }
    fractional = leading_zeros + significant;
  }
  return truncate_decimal(v, fractional).str();
}

namespace {

ApproximationResult approximate(DigitExpr expr, const ExactInt& x, const ExactInt& y,
                                const ExactRational& tol) {
  switch (expr) {
    case DigitExpr::Exp:
      return exp_rational(x, y, tol);
    case DigitExpr::Tanh:
      return tanh_rational(x, y, tol);
  }
  throw DomainError("unknown expression");
}

}  // namespace

CertifiedDigits certified_digits(DigitExpr expr, const ExactInt& x, const ExactInt& y,
                                 std::size_t digits) {
  if (digits < 1 || digits > kMaxDigits) {
    throw DomainError("digits must be in [1, " + std::to_string(kMaxDigits) + "], got " +
                      std::to_string(digits));
  }
  // A straddled boundary needs the interval to shrink below the distance to
  // it; doubling the extra precision finds any irrational value's digits.
  for (std::size_t extra = 2; extra <= 4 * kMaxDigits; extra *= 2) {
    ApproximationResult r = approximate(expr, x, y, pow10_inverse(digits + extra));
    DigitString lo = truncate_decimal(r.value - r.error_bound, digits);
    DigitString hi = truncate_decimal(r.value + r.error_bound, digits);
    if (lo == hi) return {std::move(lo), std::move(r)};
  }
  throw DomainError("could not pin " + std::to_string(digits) + " digits");
}

}  // namespace cfrac::cli
