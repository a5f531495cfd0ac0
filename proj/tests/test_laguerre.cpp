#include "lgal/laguerre.hpp"

#include <gtest/gtest.h>

namespace lgal {
namespace {

// Literal loop over the defining product, kept apart from cj().
Integer product_oracle(long n, long u, long j) {
  Integer r = 1;
  for (long i = j + 1; i <= n; ++i) r *= 2 * i + 2 * u + 1;
  return r;
}

TEST(LaguerreParamsTest, DerivedFields) {
  const LaguerreParams p(8, -5);
  EXPECT_EQ(p.v(), 5);
  EXPECT_EQ(p.alpha(), Rational(-9, 2));
  EXPECT_THROW(LaguerreParams(0, -2), std::invalid_argument);
}

TEST(CjTest, Examples) {
  EXPECT_EQ(cj(LaguerreParams(8, -5), 8), 1);
  EXPECT_EQ(cj(LaguerreParams(8, -5), 0), 11025);
  EXPECT_EQ(cj(LaguerreParams(2, -2), 1), 1);
  EXPECT_THROW(cj(LaguerreParams(8, -5), 9), std::out_of_range);
  EXPECT_THROW(cj(LaguerreParams(8, -5), -1), std::out_of_range);
}

TEST(CurlyLTest, SmallCases) {
  EXPECT_EQ(curly_l(LaguerreParams(2, -2)), (IntPolynomial{-1, 2, 1}));
  EXPECT_EQ(curly_l(LaguerreParams(2, -3)), (IntPolynomial{3, -2, 1}));
}

TEST(CurlyLTest, MonicWithBinomialTimesProductCoefficients) {
  for (long n = 1; n <= 30; ++n)
    for (long u = -18; u <= -2; ++u) {
      const IntPolynomial f = curly_l(LaguerreParams(n, u));
      ASSERT_EQ(f.degree(), n);
      ASSERT_EQ(f.leading(), 1);
      for (long j = 0; j <= n; ++j) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
        ASSERT_EQ(f.coeff(static_cast<std::size_t>(j)), b * product_oracle(n, u, j)) << n << "," << u << "," << j;
      }
    }
}

TEST(GlpTest, DegreeOneSignedDefinition) {
  // (-1)^1 [binom(-1/2, 1) - x] = x + 1/2 for alpha = -3/2.
  EXPECT_EQ(glp(LaguerreParams(1, -2)), (RatPolynomial{Rational(1, 2), 1}));
  EXPECT_EQ(glp_classical(LaguerreParams(1, -2)), (RatPolynomial{Rational(-1, 2), -1}));
}

TEST(GlpTest, GeneralizedBinomial) {
  EXPECT_EQ(generalized_binomial(Rational(5, 2), 2), Rational(15, 8));
  EXPECT_EQ(generalized_binomial(Rational(-1, 2), 3), Rational(-5, 16));
  EXPECT_EQ(generalized_binomial(Rational(7), 0), 1);
}

TEST(GlpTest, ScalingIdentityClassical) {
  for (long n = 1; n <= 12; ++n)
    for (long u = -18; u <= 2; ++u) {
      const LaguerreParams params(n, u);
      Integer scale;
      mpz_fac_ui(scale.get_mpz_t(), static_cast<unsigned long>(n));
      scale <<= static_cast<mp_bitcnt_t>(n);
      const RatPolynomial lhs = scale_compose(curly_l(params), Rational(2), Rational(0));
      const RatPolynomial rhs = Rational(scale) * scale_compose(glp_classical(params), Rational(-1), Rational(0));
      ASSERT_EQ(lhs, rhs) << n << "," << u;
      // The signed definition differs by (-1)^n.
      const RatPolynomial signed_rhs = Rational(scale) * scale_compose(glp(params), Rational(-1), Rational(0));
      ASSERT_EQ(lhs == signed_rhs, n % 2 == 0);
    }
}

TEST(DiscriminantFormulaTest, Examples) {
  EXPECT_EQ(discriminant_formula(LaguerreParams(2, -2)), 2);
  EXPECT_EQ(discriminant_formula(LaguerreParams(2, -3)), -2);
  EXPECT_EQ(discriminant_formula(LaguerreParams(1, -7)), 1);
}

TEST(DiscriminantFormulaTest, FactoredFormAgrees) {
  for (long n = 1; n <= 40; ++n)
    for (long u = -18; u <= 3; ++u) {
      const LaguerreParams params(n, u);
      const auto factored = discriminant_formula_factored(params);
      ASSERT_EQ(factored.value(), discriminant_formula(params)) << n << "," << u;
    }
}

TEST(DiscriminantFormulaTest, MatchesResultantUpToPowerOfTwo) {
  for (long n = 2; n <= 9; ++n)
    for (long u = -18; u <= -2; ++u) {
      const LaguerreParams params(n, u);
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n * (n - 1)));
      ASSERT_EQ(Rational(discriminant(curly_l(params))), Rational(scale) * discriminant_formula(params));
    }
}

TEST(DvProductTest, Examples) {
  EXPECT_EQ(dv_product(LaguerreParams(2, -2)), 1);
  EXPECT_EQ(dv_product(LaguerreParams(3, -2)), 3);
  EXPECT_THROW(dv_product(LaguerreParams(1, -2)), std::invalid_argument);
  // n = 5, v = 4: 1*3*5 * (-7+4)(-7+8) = 15 * -3 * 1
  EXPECT_EQ(dv_product(LaguerreParams(5, -4)), -45);
}

TEST(DvProductTest, PositiveForSmallV) {
  for (long n = 2; n <= 30; ++n) {
    EXPECT_GT(dv_product(LaguerreParams(n, -2)), 0);
    EXPECT_GT(dv_product(LaguerreParams(n, -1)), 0);
  }
}

}  // namespace
}  // namespace lgal
