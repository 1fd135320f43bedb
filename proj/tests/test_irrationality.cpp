#include <gtest/gtest.h>

#include <random>

#include "cfrac/expansions.hpp"
#include "cfrac/irrationality.hpp"
#include "oracle.hpp"

using namespace cfrac;

namespace {

ExactRational q(long n, long d = 1) { return ExactRational::make(ExactInt(n), ExactInt(d)); }

}  // namespace

TEST(TailIndex, SpotValues) {
  EXPECT_EQ(legendre_tail_index(tanh_integer_cf(1, 1)), 1u);
  EXPECT_EQ(legendre_tail_index(tanh_integer_cf(3, 2)), 2u);  // a_2 = 6 <= 9 < 10 = a_3
  EXPECT_EQ(legendre_tail_index(tanh_integer_cf(2, 1)), 2u);  // a_2 = 3 <= 4 < 5 = a_3
  EXPECT_EQ(legendre_tail_index(tanh_integer_cf(1, 2)), 1u);
}

TEST(TailIndex, MatchesBruteForceScan) {
  for (long x = 1; x <= 20; ++x) {
    for (long y = 1; y <= 20; ++y) {
      ASSERT_EQ(legendre_tail_index(tanh_integer_cf(x, y)), oracle::brute_force_tail(x, y))
          << "x=" << x << " y=" << y;
    }
  }
}

TEST(TailIndex, Monotone) {
  for (long y = 1; y <= 20; ++y) {
    for (long x = 2; x <= 20; ++x) {
      EXPECT_LE(legendre_tail_index(tanh_integer_cf(x - 1, y)),
                legendre_tail_index(tanh_integer_cf(x, y)));
    }
  }
  for (long x = 1; x <= 20; ++x) {
    for (long y = 2; y <= 20; ++y) {
      EXPECT_GE(legendre_tail_index(tanh_integer_cf(x, y - 1)),
                legendre_tail_index(tanh_integer_cf(x, y)));
    }
  }
}

TEST(TailIndex, ArgumentRecordsThreshold) {
  TailArgument arg = tail_argument(tanh_integer_cf(3, 2));
  EXPECT_EQ(arg.a_slope, ExactInt(4));
  EXPECT_EQ(arg.a_intercept, ExactInt(-2));
  EXPECT_EQ(arg.b_rest, ExactInt(9));
  EXPECT_EQ(arg.threshold_index, 3u);
}

TEST(TailIndex, LargeArgumentsStaySymbolic) {
  // (2i - 1) * 1 > 1000^2 first at i = 500001.
  TailArgument arg = tail_argument(tanh_integer_cf(1000, 1));
  EXPECT_EQ(arg.threshold_index, 500001u);
  EXPECT_EQ(legendre_tail_index(tanh_integer_cf(1000, 1)), 500000u);
}

TEST(TailIndex, Errors) {
  EXPECT_THROW(legendre_tail_index(e_simple_cf()), UnsupportedRuleError);
  EXPECT_THROW(legendre_tail_index(gauss_tanh_cf(q(1, 2))), NonIntegralTermError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(1, 2), q(1), q(1), q(1)})),
               NonIntegralTermError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(0), q(5), q(1), q(1)})),
               TailUnreachableError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(-1), q(50), q(1), q(1)})),
               TailUnreachableError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(2), q(-1), q(-1), q(1)})),
               NonPositiveTermError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(2), q(-1), q(1), q(-4)})),
               NonPositiveTermError);
  EXPECT_THROW(legendre_tail_index(CfExpansion(q(0), ClosedFormRule{q(1), q(-3), q(1), q(1)})),
               NonPositiveTermError);
}

TEST(Certify, OneOne) {
  IrrationalityCertificate c = certify_irrational(1, 1);
  EXPECT_EQ(c.verdict, Verdict::CertifiedIrrational);
  EXPECT_EQ(c.tail_index, 1u);
  EXPECT_EQ(c.closed_form.threshold_index, 2u);
  EXPECT_EQ(c.checked_prefix_depth, 51u);
  EXPECT_FALSE(c.engine_version.empty());
}

TEST(Certify, ZeroExponentNotApplicable) {
  IrrationalityCertificate c = certify_irrational(0, 5);
  EXPECT_EQ(c.verdict, Verdict::NotApplicable);
  EXPECT_TRUE(verify_certificate(c, 0).ok);
}

TEST(Certify, ReducesPair) {
  IrrationalityCertificate c = certify_irrational(4, 2);
  EXPECT_EQ(c.reduced_x, ExactInt(2));
  EXPECT_EQ(c.reduced_y, ExactInt(1));
  EXPECT_EQ(c.verdict, Verdict::CertifiedIrrational);
  EXPECT_EQ(c.tail_index, 2u);
}

TEST(Certify, NegativeExponentUsesMagnitude) {
  IrrationalityCertificate c = certify_irrational(-3, 2);
  EXPECT_EQ(c.reduced_x, ExactInt(-3));
  EXPECT_EQ(c.tail_index, 2u);
  EXPECT_TRUE(verify_certificate(c, 100).ok);
}

TEST(Certify, NonPositiveYRejected) {
  EXPECT_THROW(certify_irrational(1, 0), DomainError);
  EXPECT_THROW(certify_irrational(1, -4), DomainError);
}

TEST(Verify, ValidCertificate) {
  IrrationalityCertificate c = certify_irrational(1, 1);
  EXPECT_TRUE(verify_certificate(c, 100).ok);
  EXPECT_TRUE(verify_certificate(c, c.checked_prefix_depth).ok);
}

TEST(Verify, ForgedTailIndexExposed) {
  IrrationalityCertificate c = certify_irrational(3, 2);
  c.tail_index = 1;
  VerificationReport r = verify_certificate(c, 10);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.violating_index.has_value());
  EXPECT_EQ(*r.violating_index, 2u);
}

TEST(Verify, NonMinimalTailRejected) {
  IrrationalityCertificate c = certify_irrational(3, 2);
  c.tail_index = 3;
  c.closed_form.threshold_index = 4;
  VerificationReport r = verify_certificate(c, 200);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violating_index, std::optional<std::size_t>(3));
}

TEST(Verify, DepthBelowPrefixRejected) {
  IrrationalityCertificate c = certify_irrational(2, 1);
  EXPECT_FALSE(verify_certificate(c, c.checked_prefix_depth - 1).ok);
}

TEST(Verify, NotApplicableMisuseRejected) {
  IrrationalityCertificate c = certify_irrational(0, 3);
  c.x = ExactInt(1);
  EXPECT_FALSE(verify_certificate(c, 10).ok);

  IrrationalityCertificate d = certify_irrational(5, 3);
  d.verdict = Verdict::NotApplicable;
  EXPECT_FALSE(verify_certificate(d, 200).ok);
}

// Properties.

TEST(CertificateProperty, EmittedCertificatesVerifyAtDoubleDepth) {
  for (long x = -20; x <= 20; ++x) {
    for (long y = 1; y <= 20; ++y) {
      IrrationalityCertificate c = certify_irrational(x, y);
      VerificationReport r = verify_certificate(c, 2 * c.checked_prefix_depth);
      ASSERT_TRUE(r.ok) << "x=" << x << " y=" << y << ": " << r.reason;
    }
  }
}

TEST(CertificateProperty, SingleFieldMutationsFail) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> xs(1, 20), ys(1, 20);
  std::uniform_int_distribution<int> kinds(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IrrationalityCertificate c = certify_irrational(xs(rng), ys(rng));
    int kind = kinds(rng);
    switch (kind) {
      case 0: c.tail_index -= 1; break;
      case 1: c.x += ExactInt(1); break;
      case 2: c.closed_form.threshold_index += 1; break;
      case 3: c.closed_form.threshold_index -= 1; break;
      case 4: c.tail_index += 1; break;
      case 5: c.y += ExactInt(1); break;
      case 6: c.reduced_x += ExactInt(1); break;
    }
    EXPECT_FALSE(verify_certificate(c, 2 * (c.checked_prefix_depth + 1)).ok)
        << "trial " << trial << " mutation " << kind;
  }
}
