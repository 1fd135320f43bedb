#pragma once

#include "cfrac/continued_fraction.hpp"
#include "cfrac/exact.hpp"

namespace cfrac {

/// Gauss's expansion tanh z = z / (1 + z^2 / (3 + z^2 / (5 + ...))).
/// Throws DomainError for z == 0.
CfExpansion gauss_tanh_cf(const ExactRational& z);

/// The pair (x, y) of the argument z = x/y, both positive integers.
class TanhFamily {
 public:
  /// Throws DomainError unless x >= 1 and y >= 1.
  TanhFamily(ExactInt x, ExactInt y);

  const ExactInt& x() const { return x_; }
  const ExactInt& y() const { return y_; }

  /// Same argument with gcd(x, y) divided out.
  TanhFamily reduced() const;

  /// x / (y + x^2 / (3y + x^2 / (5y + ...))): gauss_tanh_cf(x/y) rescaled by
  /// c_i = y, giving b_1 = x, b_i = x^2, a_i = (2i - 1) y.
  CfExpansion expansion() const;

 private:
  ExactInt x_;
  ExactInt y_;
};

/// Integer-term expansion of tanh(x/y). Throws DomainError for x < 1 or y < 1.
CfExpansion tanh_integer_cf(const ExactInt& x, const ExactInt& y);

/// e = 2 + 1/(1 + 1/(2 + 1/(1 + 1/(1 + 1/(4 + ...))))).
CfExpansion e_simple_cf();

/// tanh(x/y) to within tol, x, y >= 1.
ApproximationResult tanh_rational(const ExactInt& x, const ExactInt& y, const ExactRational& tol,
                                  const EvaluateOptions& options = {});

/// e^(x/y) to within tol for any integer x and y >= 1, through
/// e^(2r) = (1 + tanh r) / (1 - tanh r) at r = |x| / (2y), reciprocated for
/// x < 0. The tanh bound is pushed through the map as an exact interval.
/// `depth` reports the number of tanh terms consumed.
ApproximationResult exp_rational(const ExactInt& x, const ExactInt& y, const ExactRational& tol,
                                 const EvaluateOptions& options = {});

}  // namespace cfrac
