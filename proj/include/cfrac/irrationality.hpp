#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cfrac/continued_fraction.hpp"
#include "cfrac/exact.hpp"

namespace cfrac {

/// Tail criterion for irrationality: if every a_i, b_i is a positive integer
/// and a_i > b_i for all i beyond some n, the fraction b_1/(a_1 + b_2/(...))
/// is irrational. Only this sufficient direction is checked here; a failed
/// hypothesis proves nothing.

enum class Verdict { CertifiedIrrational, NotApplicable };

const char* to_string(Verdict v);
/// Throws DomainError for unknown names.
Verdict parse_verdict(const std::string& name);

/// The symbolic half of a certificate: a_slope * i + a_intercept > b_rest for
/// every i >= threshold_index, which holds forever once it holds because the
/// left side increases with i.
struct TailArgument {
  ExactInt a_slope;
  ExactInt a_intercept;
  ExactInt b_rest;
  std::size_t threshold_index = 0;

  friend bool operator==(const TailArgument&, const TailArgument&) = default;
};

/// Smallest n >= 1 with a_i > b_i for every i > n, for a closed-form rule with
/// integer coefficients, positive a-slope and positive b_rest. Computed
/// symbolically and confirmed by scanning terms 1 .. n + 10.
///
/// Throws UnsupportedRuleError (not closed form), NonIntegralTermError,
/// NonPositiveTermError, TailUnreachableError (a-slope <= 0).
std::size_t legendre_tail_index(const CfExpansion& cf);

/// The full symbolic argument behind legendre_tail_index.
TailArgument tail_argument(const CfExpansion& cf);

struct IrrationalityCertificate {
  ExactInt x;
  ExactInt y;
  ExactInt reduced_x;
  ExactInt reduced_y;
  std::size_t tail_index = 0;
  std::size_t checked_prefix_depth = 0;
  TailArgument closed_form;
  Verdict verdict = Verdict::NotApplicable;
  std::string engine_version;

  friend bool operator==(const IrrationalityCertificate&,
                         const IrrationalityCertificate&) = default;
};

/// Extra terms scanned past the tail index when certifying.
inline constexpr std::size_t kCertificateScanMargin = 50;

/// Certifies tanh(x/y), and with it e^(x/y), irrational. x = 0 gives
/// NotApplicable. Negative x is certified through |x| since
/// e^(-r) = 1 / e^r. Throws DomainError for y < 1.
IrrationalityCertificate certify_irrational(const ExactInt& x, const ExactInt& y);

struct VerificationReport {
  bool ok = false;
  std::string reason;
  std::optional<std::size_t> violating_index;

  explicit operator bool() const { return ok; }
};

/// Re-derives everything in the certificate from (x, y) and rescans the terms
/// up to `depth`. Never throws on a bad certificate; the report says why.
VerificationReport verify_certificate(const IrrationalityCertificate& cert, std::size_t depth);

}  // namespace cfrac
