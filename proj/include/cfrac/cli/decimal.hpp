#pragma once

// Decimal rendering. Everything here is display-side: no decimal string is
// ever fed back into the exact core.

#include <cstddef>
#include <string>

#include "cfrac/continued_fraction.hpp"
#include "cfrac/exact.hpp"

namespace cfrac::cli {

/// A decimal value truncated toward zero.
struct DigitString {
  int sign = 0;  // -1, 0 or +1; 0 only when every rendered digit is zero
  std::string integer_part;
  std::string fractional_part;
  std::size_t guaranteed_digits = 0;

  std::string str() const;
  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// |v| truncated to `digits` fractional digits, sign reattached.
DigitString truncate_decimal(const ExactRational& v, std::size_t digits);

/// Truncated decimal with `significant` significant digits.
std::string decimal_preview(const ExactRational& v, std::size_t significant = 20);

enum class DigitExpr { Exp, Tanh };

inline constexpr std::size_t kMaxDigits = 10'000;

struct CertifiedDigits {
  DigitString digits;
  ApproximationResult approximation;
};

/// Evaluates e^(x/y) or tanh(x/y) tightly enough that every point of
/// [value - bound, value + bound] truncates to the same `digits` fractional
/// digits, tightening the tolerance whenever the interval straddles a digit
/// boundary. Throws DomainError for digits outside [1, kMaxDigits] and for
/// arguments outside the expression's domain.
CertifiedDigits certified_digits(DigitExpr expr, const ExactInt& x, const ExactInt& y,
                                 std::size_t digits);

}  // namespace cfrac::cli
