#include "cfrac/irrationality.hpp"

#include <stdexcept>

#include "cfrac/errors.hpp"
#include "cfrac/expansions.hpp"
#include "cfrac/version.hpp"

namespace cfrac {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedIrrational:
      return "CertifiedIrrational";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

Verdict parse_verdict(const std::string& name) {
  if (name == "CertifiedIrrational") return Verdict::CertifiedIrrational;
  if (name == "NotApplicable") return Verdict::NotApplicable;
  throw DomainError("unknown verdict '" + name + "'");
}

namespace {

// Returns the first index in [from, to] violating the tail criterion for the
// given tail index, or 0 when every term passes. A term at i == tail (tail >=
// 2) must fail a > b, otherwise a smaller tail index exists.
std::size_t first_violation(const CfExpansion& cf, std::size_t from, std::size_t to,
                            std::size_t tail) {
  for (std::size_t i = from; i <= to; ++i) {
    Term t = cf.term(i);
    if (!t.a.is_integer() || !t.b.is_integer()) return i;
    if (t.a.sign() <= 0 || t.b.sign() <= 0) return i;
    if (i > tail && !(t.a > t.b)) return i;
    if (i == tail && tail >= 2 && t.a > t.b) return i;
  }
  return 0;
}

}  // namespace

TailArgument tail_argument(const CfExpansion& cf) {
  const ClosedFormRule* rule = cf.closed_form();
  if (rule == nullptr) throw UnsupportedRuleError("tail criterion needs a closed-form rule");

  if (!rule->has_integer_coefficients()) {
    // A fractional slope or intercept shows up in a_1 or a_2.
    for (std::size_t i = 1; i <= 2; ++i) {
      Term t = cf.term(i);
      if (!t.a.is_integer() || !t.b.is_integer()) throw NonIntegralTermError(i);
    }
    throw NonIntegralTermError(1);
  }
  if (rule->b_first.sign() <= 0) throw NonPositiveTermError(1);
  if (rule->b_rest.sign() <= 0) throw NonPositiveTermError(2);
  if (rule->a_slope.sign() <= 0) {
    throw TailUnreachableError("a-slope " + rule->a_slope.to_string() +
                               " never lets a_i overtake b_i");
  }
  if ((rule->a_slope + rule->a_intercept).sign() <= 0) throw NonPositiveTermError(1);

  TailArgument arg{rule->a_slope.num(), rule->a_intercept.num(), rule->b_rest.num(), 0};
  // Smallest integer i with slope * i + intercept > b_rest.
  ExactInt first = floor_div(arg.b_rest - arg.a_intercept, arg.a_slope) + ExactInt(1);
  // The criterion only constrains i > n >= 1, so the threshold is at least 2.
  if (first < ExactInt(2)) first = ExactInt(2);
  if (!first.fits_u64()) throw DomainError("tail index exceeds the index range");
  arg.threshold_index = first.to_u64();
  return arg;
}

std::size_t legendre_tail_index(const CfExpansion& cf) {
  TailArgument arg = tail_argument(cf);
  std::size_t tail = arg.threshold_index - 1;
  if (std::size_t bad = first_violation(cf, 1, tail + 10, tail)) {
    throw std::logic_error("tail scan disagrees with closed form at index " +
                           std::to_string(bad));
  }
  return tail;
}

IrrationalityCertificate certify_irrational(const ExactInt& x, const ExactInt& y) {
  if (y.sign() <= 0) throw DomainError("certificate needs y >= 1, got y=" + y.to_string());

  IrrationalityCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.engine_version = kEngineVersion;
  if (x.is_zero()) {
    cert.reduced_x = ExactInt(0);
    cert.reduced_y = ExactInt(1);
    cert.verdict = Verdict::NotApplicable;
    return cert;
  }

  ExactInt g = gcd(x, y);
  cert.reduced_x = exact_div(x, g);
  cert.reduced_y = exact_div(y, g);
  CfExpansion cf = tanh_integer_cf(cert.reduced_x.abs(), cert.reduced_y);

  cert.closed_form = tail_argument(cf);
  cert.tail_index = legendre_tail_index(cf);
  cert.checked_prefix_depth = cert.tail_index + kCertificateScanMargin;
  if (std::size_t bad = first_violation(cf, 1, cert.checked_prefix_depth, cert.tail_index)) {
    throw std::logic_error("prefix scan failed at index " + std::to_string(bad));
  }
  cert.verdict = Verdict::CertifiedIrrational;
  return cert;
}

namespace {

VerificationReport fail(std::string reason, std::optional<std::size_t> index = std::nullopt) {
  return VerificationReport{false, std::move(reason), index};
}

}  // namespace

VerificationReport verify_certificate(const IrrationalityCertificate& cert, std::size_t depth) {
  if (cert.y.sign() <= 0) return fail("y must be >= 1");

  if (cert.verdict == Verdict::NotApplicable) {
    if (!cert.x.is_zero()) return fail("NotApplicable is only valid for x = 0");
    if (cert.reduced_x != ExactInt(0) || cert.reduced_y != ExactInt(1)) {
      return fail("reduced pair of x = 0 must be (0, 1)");
    }
    if (cert.tail_index != 0 || cert.checked_prefix_depth != 0 ||
        cert.closed_form != TailArgument{}) {
      return fail("NotApplicable certificate carries tail data");
    }
    return {true, "", std::nullopt};
  }

  if (cert.x.is_zero()) return fail("x = 0 cannot be certified irrational");
  ExactInt g = gcd(cert.x, cert.y);
  const ExactInt& rx = cert.reduced_x;
  const ExactInt& ry = cert.reduced_y;
  if (rx != exact_div(cert.x, g) || ry != exact_div(cert.y, g)) {
    return fail("reduced pair does not match gcd reduction of (x, y)");
  }
  if (cert.tail_index < 1) return fail("tail index must be >= 1");
  if (cert.checked_prefix_depth <= cert.tail_index) {
    return fail("checked prefix does not reach past the tail index");
  }
  const ExactInt ax = rx.abs();
  const ExactInt b_rest = ax * ax;
  CfExpansion cf = tanh_integer_cf(ax, ry);
  for (std::size_t i = 1; i <= depth; ++i) {
    Term t = cf.term(i);
    if (!t.a.is_integer() || !t.b.is_integer()) return fail("nonintegral term", i);
    ExactInt a_direct = (ExactInt(2) * ExactInt(i) - ExactInt(1)) * ry;
    ExactInt b_direct = i == 1 ? ax : b_rest;
    if (t.a.num() != a_direct || t.b.num() != b_direct) {
      return fail("expansion term differs from x/(y + x^2/(3y + ...))", i);
    }
    if (t.a.sign() <= 0 || t.b.sign() <= 0) return fail("nonpositive term", i);
    if (i > cert.tail_index && !(t.a > t.b)) return fail("a_i <= b_i past the tail index", i);
    if (i == cert.tail_index && i >= 2 && t.a > t.b) {
      return fail("tail index is not the smallest", i);
    }
  }

  if (depth < cert.checked_prefix_depth) return fail("depth is below the checked prefix");

  // a_i = (2i - 1) y', b_i = x'^2: (2i - 1) y' > x'^2 first holds at
  // i = floor((x'^2 + y') / (2 y')) + 1.
  const ExactInt slope = ExactInt(2) * ry;
  ExactInt first = floor_div(b_rest + ry, slope) + ExactInt(1);
  if (first < ExactInt(2)) first = ExactInt(2);
  if (!first.fits_u64()) return fail("threshold exceeds the index range");
  TailArgument expected{slope, -ry, b_rest, first.to_u64()};
  if (cert.closed_form != expected) return fail("closed-form argument does not recompute");
  if (cert.closed_form.threshold_index != cert.tail_index + 1) {
    return fail("threshold index is not tail index + 1");
  }

  return {true, "", std::nullopt};
}

}  // namespace cfrac
