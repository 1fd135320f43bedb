#include "cfrac/continued_fraction.hpp"

#include <utility>

namespace cfrac {

Term::Term(ExactRational a_, ExactRational b_, std::size_t index)
    : a(std::move(a_)), b(std::move(b_)) {
  if (b.is_zero()) throw ZeroNumeratorError(index);
}

bool ClosedFormRule::has_integer_coefficients() const {
  return a_slope.is_integer() && a_intercept.is_integer() && b_first.is_integer() &&
         b_rest.is_integer();
}

ScaleRule ScaleRule::constant(ExactRational c) {
  ScaleRule r;
  r.constant_ = std::move(c);
  return r;
}

ScaleRule ScaleRule::indexed(std::function<ExactRational(std::size_t)> c) {
  ScaleRule r;
  r.indexed_ = std::move(c);
  return r;
}

ExactRational ScaleRule::at(std::size_t i) const {
  if (i == 0) return ExactRational(1);
  ExactRational c = constant_ ? *constant_ : indexed_(i);
  if (c.is_zero()) throw ZeroScaleError(i);
  return c;
}

CfExpansion::CfExpansion(ExactRational a0, TermRule rule)
    : a0_(std::move(a0)), rule_(std::move(rule)) {}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Term CfExpansion::term(std::size_t i) const {
  if (i == 0) throw DomainError("term indices start at 1");
  return std::visit(
      Overloaded{
          [i](const ClosedFormRule& r) {
            ExactRational a = r.a_slope * ExactRational(i) + r.a_intercept;
            return Term(std::move(a), i == 1 ? r.b_first : r.b_rest, i);
          },
          [i](const ExplicitListRule& r) {
            if (i > r.terms.size()) throw ExpansionExhaustedError(i);
            return r.terms[i - 1];
          },
          [i](const EPatternRule&) {
            ExactRational a = (i % 3 == 2) ? ExactRational(2 * (i + 1) / 3) : ExactRational(1);
            return Term(std::move(a), ExactRational(1), i);
          },
          [i](const ScaledRule& r) {
            Term t = r.base->term(i);
            ExactRational c = r.scales.at(i);
            ExactRational b = c * r.scales.at(i - 1) * t.b;
            return Term(c * t.a, std::move(b), i);
          },
      },
      rule_);
}

std::optional<std::size_t> CfExpansion::length() const {
  if (const auto* list = std::get_if<ExplicitListRule>(&rule_)) return list->terms.size();
  if (const auto* scaled = std::get_if<ScaledRule>(&rule_)) return scaled->base->length();
  return std::nullopt;
}

ConvergentState ConvergentState::initial(const ExactRational& a0) {
  return ConvergentState{0, ExactRational(1), a0, ExactRational(0), ExactRational(1)};
}

ConvergentState step(const ConvergentState& s, const Term& t) {
  return ConvergentState{
      s.index + 1,
      s.h_curr,
      t.a * s.h_curr + t.b * s.h_prev,
      s.k_curr,
      t.a * s.k_curr + t.b * s.k_prev,
  };
}

std::vector<ExactRational> convergents(const CfExpansion& cf, std::size_t depth) {
  if (depth == 0) throw DomainError("convergent depth must be >= 1");
  if (auto n = cf.length(); n && *n < depth) throw ExpansionExhaustedError(*n + 1);
  std::vector<ExactRational> out;
  out.reserve(depth);
  ConvergentState s = ConvergentState::initial(cf.a0());
  for (std::size_t i = 1; i <= depth; ++i) {
    s = step(s, cf.term(i));
    out.push_back(s.value());
  }
  return out;
}

DepthLimitError::DepthLimitError(std::size_t limit, ApproximationResult best)
    : Error("depth limit " + std::to_string(limit) + " reached before tolerance"),
      best_(std::move(best)) {}

ConvergentWalker::ConvergentWalker(CfExpansion cf)
    : cf_(std::move(cf)), length_(cf_.length()), state_(ConvergentState::initial(cf_.a0())) {}

void ConvergentWalker::advance() {
  std::size_t i = state_.index + 1;
  Term t = cf_.term(i);
  if (t.a.sign() <= 0 || t.b.sign() <= 0) throw NonPositiveTermError(i);
  state_ = step(state_, t);
}

bool ConvergentWalker::exhausted() const { return length_ && state_.index >= *length_; }

ExactRational ConvergentWalker::gap() const {
  // |c_n - c_{n-1}| = |D_n| / (k_n k_{n-1})
  return (state_.determinant() / (state_.k_curr * state_.k_prev)).abs();
}

ApproximationResult evaluate(const CfExpansion& cf, const ExactRational& tol,
                             const EvaluateOptions& options) {
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  ConvergentWalker walker(cf);
  if (walker.exhausted()) return {walker.value(), ExactRational(0), 0};
  std::optional<ApproximationResult> best;
  while (true) {
    if (walker.depth() >= options.max_depth) {
      if (!best) throw DomainError("depth limit must be >= 1");
      throw DepthLimitError(options.max_depth, std::move(*best));
    }
    walker.advance();
    if (walker.exhausted()) return {walker.value(), ExactRational(0), walker.depth()};
    ExactRational gap = walker.gap();
    if (gap <= tol) return {walker.value(), std::move(gap), walker.depth()};
    best = ApproximationResult{walker.value(), std::move(gap), walker.depth()};
  }
}

CfExpansion equivalence_transform(const CfExpansion& cf, const ScaleRule& scales) {
  const auto& c = scales.constant_value();
  if (c && c->is_zero()) throw ZeroScaleError(1);

  if (const auto* r = cf.closed_form(); r && c) {
    return CfExpansion(cf.a0(), ClosedFormRule{*c * r->a_slope, *c * r->a_intercept,
                                               *c * r->b_first, *c * *c * r->b_rest});
  }
  if (const auto* list = std::get_if<ExplicitListRule>(&cf.rule())) {
    ExplicitListRule out;
    out.terms.reserve(list->terms.size());
    for (std::size_t i = 1; i <= list->terms.size(); ++i) {
      const Term& t = list->terms[i - 1];
      ExactRational ci = scales.at(i);
      out.terms.emplace_back(ci * t.a, ci * scales.at(i - 1) * t.b, i);
    }
    return CfExpansion(cf.a0(), std::move(out));
  }
  return CfExpansion(cf.a0(), ScaledRule{std::make_shared<const CfExpansion>(cf), scales});
}

}  // namespace cfrac
