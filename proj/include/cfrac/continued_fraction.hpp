#pragma once

// Generalized continued fractions
//
//   a_0 + b_1 / (a_1 + b_2 / (a_2 + b_3 / (a_3 + ...)))
//
// Terms are 1-based; a_0 is the leading term. Convergents c_n = h_n / k_n
// follow the fundamental recurrence
//
//   h_n = a_n h_{n-1} + b_n h_{n-2},   k_n = a_n k_{n-1} + b_n k_{n-2}
//
// with h_{-1} = 1, h_0 = a_0, k_{-1} = 0, k_0 = 1.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "cfrac/errors.hpp"
#include "cfrac/exact.hpp"

namespace cfrac {

/// One level of the fraction: partial denominator a, partial numerator b.
/// A zero partial numerator is rejected; finite fractions end by running out
/// of terms instead.
struct Term {
  ExactRational a;
  ExactRational b;

  Term(ExactRational a_, ExactRational b_, std::size_t index = 0);

  friend bool operator==(const Term&, const Term&) = default;
};

/// a_i = a_slope * i + a_intercept; b_1 = b_first; b_i = b_rest for i >= 2.
struct ClosedFormRule {
  ExactRational a_slope;
  ExactRational a_intercept;
  ExactRational b_first;
  ExactRational b_rest;

  bool has_integer_coefficients() const;
  friend bool operator==(const ClosedFormRule&, const ClosedFormRule&) = default;
};

struct ExplicitListRule {
  std::vector<Term> terms;
};

/// b_i = 1; a_i = 2(i+1)/3 when i = 2 (mod 3), else 1. Used with a_0 = 2 this
/// is the simple continued fraction of e.
struct EPatternRule {};

class CfExpansion;

/// The scale sequence c_i of an equivalence transform, with c_0 = 1.
class ScaleRule {
 public:
  static ScaleRule constant(ExactRational c);
  static ScaleRule indexed(std::function<ExactRational(std::size_t)> c);

  /// c_i; c_0 is always 1.
  ExactRational at(std::size_t i) const;
  /// The shared value when every c_i (i >= 1) is the same.
  const std::optional<ExactRational>& constant_value() const { return constant_; }

 private:
  std::optional<ExactRational> constant_;
  std::function<ExactRational(std::size_t)> indexed_;
};

/// Lazily rescaled expansion, used when the transform has no closed form.
struct ScaledRule {
  std::shared_ptr<const CfExpansion> base;
  ScaleRule scales;
};

using TermRule = std::variant<ClosedFormRule, ExplicitListRule, EPatternRule, ScaledRule>;

/// A leading term plus a deterministic, indexed term source.
class CfExpansion {
 public:
  CfExpansion(ExactRational a0, TermRule rule);

  const ExactRational& a0() const { return a0_; }
  const TermRule& rule() const { return rule_; }

  /// Term i (i >= 1). Throws ExpansionExhaustedError past the end of a finite
  /// expansion, ZeroScaleError for a zero scale in a lazily scaled rule.
  Term term(std::size_t i) const;

  /// Number of terms for finite expansions, nullopt for infinite ones.
  std::optional<std::size_t> length() const;

  const ClosedFormRule* closed_form() const { return std::get_if<ClosedFormRule>(&rule_); }

 private:
  ExactRational a0_;
  TermRule rule_;
};

/// Rolling state of the fundamental recurrence after `index` terms.
struct ConvergentState {
  std::size_t index = 0;
  ExactRational h_prev{1};
  ExactRational h_curr{0};
  ExactRational k_prev{0};
  ExactRational k_curr{1};

  static ConvergentState initial(const ExactRational& a0);

  /// h_n / k_n. Throws DivisionByZeroError if k_n vanished.
  ExactRational value() const { return h_curr / k_curr; }
  /// h_{n-1} / k_{n-1}; undefined (k_{-1} = 0) before the first step.
  ExactRational previous_value() const { return h_prev / k_prev; }

  /// D_n = h_n k_{n-1} - h_{n-1} k_n. Satisfies D_n = -b_n D_{n-1}, D_0 = -1.
  ExactRational determinant() const { return h_curr * k_prev - h_prev * k_curr; }

  friend bool operator==(const ConvergentState&, const ConvergentState&) = default;
};

/// Applies one term of the recurrence.
ConvergentState step(const ConvergentState& state, const Term& term);

/// c_1 .. c_depth as reduced rationals. Throws ExpansionExhaustedError when a
/// finite expansion is shorter than depth, DomainError when depth == 0.
std::vector<ExactRational> convergents(const CfExpansion& cf, std::size_t depth);

/// A convergent together with a proven bound |limit - value| <= error_bound.
struct ApproximationResult {
  ExactRational value;
  ExactRational error_bound;
  std::size_t depth = 0;
};

/// Evaluation gave up before reaching the tolerance. Carries the best
/// certified result found so far.
class DepthLimitError : public Error {
 public:
  DepthLimitError(std::size_t limit, ApproximationResult best);
  const ApproximationResult& best() const { return best_; }

 private:
  ApproximationResult best_;
};

/// Steps through the convergents of a positive-term expansion one level at a
/// time. Every consumed term is checked for a > 0 and b > 0, so consecutive
/// convergents bracket the limit.
class ConvergentWalker {
 public:
  explicit ConvergentWalker(CfExpansion cf);

  /// Consumes the next term. Throws NonPositiveTermError, and
  /// ExpansionExhaustedError when called after exhausted().
  void advance();
  /// True once every term of a finite expansion has been consumed.
  bool exhausted() const;

  std::size_t depth() const { return state_.index; }
  const ConvergentState& state() const { return state_; }
  ExactRational value() const { return state_.value(); }
  /// |c_n - c_{n-1}|; requires depth() >= 1.
  ExactRational gap() const;

 private:
  CfExpansion cf_;
  std::optional<std::size_t> length_;
  ConvergentState state_;
};

struct EvaluateOptions {
  std::size_t max_depth = 1'000'000;
};

/// First convergent c_n whose gap |c_n - c_{n-1}| is <= tol, reported with
/// that gap as error bound. An exhausted finite expansion is exact and
/// reports bound 0. Throws DomainError (tol <= 0), NonPositiveTermError,
/// DepthLimitError.
ApproximationResult evaluate(const CfExpansion& cf, const ExactRational& tol,
                             const EvaluateOptions& options = {});

/// Rescales a_i -> c_i a_i and b_i -> c_i c_{i-1} b_i (c_0 = 1). Every
/// convergent is preserved exactly. Closed-form and finite inputs under a
/// constant or finite scale stay in their own rule family; anything else is
/// scaled lazily. Throws ZeroScaleError.
CfExpansion equivalence_transform(const CfExpansion& cf, const ScaleRule& scales);

}  // namespace cfrac
