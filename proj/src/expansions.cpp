#include "cfrac/expansions.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cfrac {

CfExpansion gauss_tanh_cf(const ExactRational& z) {
  if (z.is_zero()) throw DomainError("tanh expansion is degenerate at z = 0");
  return CfExpansion(ExactRational(0), ClosedFormRule{2, -1, z, z * z});
}

TanhFamily::TanhFamily(ExactInt x, ExactInt y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.sign() <= 0 || y_.sign() <= 0) {
    throw DomainError("tanh(x/y) needs positive integers, got x=" + x_.to_string() +
                      ", y=" + y_.to_string());
  }
}

TanhFamily TanhFamily::reduced() const {
  ExactInt g = gcd(x_, y_);
  return TanhFamily(exact_div(x_, g), exact_div(y_, g));
}

CfExpansion TanhFamily::expansion() const {
  return equivalence_transform(gauss_tanh_cf(ExactRational::make(x_, y_)),
                               ScaleRule::constant(ExactRational(y_)));
}

CfExpansion tanh_integer_cf(const ExactInt& x, const ExactInt& y) {
  return TanhFamily(x, y).expansion();
}

CfExpansion e_simple_cf() { return CfExpansion(ExactRational(2), EPatternRule{}); }

ApproximationResult tanh_rational(const ExactInt& x, const ExactInt& y, const ExactRational& tol,
                                  const EvaluateOptions& options) {
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  // Same stopping rule as evaluate(), except that odd convergents at or above
  // 1 are skipped so the value stays in (0, 1) like tanh itself. The next even
  // convergent lies below the limit with a smaller gap.
  ConvergentWalker walker(TanhFamily(x, y).reduced().expansion());
  std::optional<ApproximationResult> best;
  const ExactRational one(1);
  while (walker.depth() < options.max_depth) {
    walker.advance();
    ExactRational value = walker.value();
    ExactRational gap = walker.gap();
    bool done = gap <= tol && value < one;
    best = ApproximationResult{std::move(value), std::move(gap), walker.depth()};
    if (done) return std::move(*best);
  }
  if (!best) throw DomainError("depth limit must be >= 1");
  throw DepthLimitError(options.max_depth, std::move(*best));
}

namespace {

// (1 + t) / (1 - t), t < 1.
ExactRational double_exp_from_tanh(const ExactRational& t) {
  return (ExactRational(1) + t) / (ExactRational(1) - t);
}

}  // namespace

ApproximationResult exp_rational(const ExactInt& x, const ExactInt& y, const ExactRational& tol,
                                 const EvaluateOptions& options) {
  if (y.sign() <= 0) throw DomainError("exp(x/y) needs y >= 1, got y=" + y.to_string());
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  if (x.is_zero()) return {ExactRational(1), ExactRational(0), 0};

  const bool negative = x.sign() < 0;
  ConvergentWalker walker(TanhFamily(x.abs(), y * ExactInt(2)).reduced().expansion());
  // |d/dt| of the map is >= 1/2 on [0, 1), so nothing certifies while the
  // tanh gap exceeds 2 tol.
  const ExactRational skip_above = tol * ExactRational(2);
  std::optional<ApproximationResult> best;

  while (walker.depth() < options.max_depth) {
    walker.advance();
    ExactRational t = walker.value();
    ExactRational eps = walker.gap();
    ExactRational hi = t + eps;
    if (hi >= ExactRational(1)) continue;
    if (best && eps > skip_above) continue;
    ExactRational lo = std::max(t - eps, ExactRational(0));

    ExactRational value = double_exp_from_tanh(t);
    ExactRational upper = double_exp_from_tanh(hi);
    ExactRational lower = double_exp_from_tanh(lo);
    if (negative) {
      value = value.reciprocal();
      std::swap(upper, lower);
      upper = upper.reciprocal();
      lower = lower.reciprocal();
    }
    ExactRational bound = std::max(upper - value, value - lower);
    bool done = bound <= tol;
    best = ApproximationResult{std::move(value), std::move(bound), walker.depth()};
    if (done) return std::move(*best);
  }
  if (!best) throw DomainError("depth limit too small to bound exp(x/y)");
  throw DepthLimitError(options.max_depth, std::move(*best));
}

}  // namespace cfrac
