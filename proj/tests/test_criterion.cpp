#include "lgal/criterion.hpp"

#include <gtest/gtest.h>

namespace lgal {
namespace {

TEST(NormalizedCoeffsTest, Examples) {
  EXPECT_EQ(binomial_normalized_coeffs(IntPolynomial{-1, 2, 1}), (std::vector<Rational>{-1, 1, 1}));
  EXPECT_EQ(binomial_normalized_coeffs(IntPolynomial{7}), (std::vector<Rational>{7}));
}

TEST(NormalizedCoeffsTest, RecoverCjForLaguerre) {
  for (long n : {5L, 14L, 41L, 90L})
    for (long u : {-18L, -9L, -2L}) {
      const LaguerreParams params(n, u);
      const auto c = binomial_normalized_coeffs(curly_l(params));
      for (long j = 0; j <= n; ++j) ASSERT_EQ(c[static_cast<std::size_t>(j)], Rational(cj(params, j)));
    }
}

TEST(CheckHajirTest, PassingPrime) {
  const auto rep = check_hajir(curly_l(LaguerreParams(41, -2)), 29);
  EXPECT_TRUE(rep.window_ok);
  EXPECT_TRUE(rep.cond_i);
  EXPECT_TRUE(rep.cond_ii);
  EXPECT_TRUE(rep.cond_iii);
  EXPECT_TRUE(rep.cond_iv);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.m, 41);
}

TEST(CheckHajirTest, WindowRejectsSmallPrime) {
  const IntPolynomial f = curly_l(LaguerreParams(10, -3));
  const auto rep = check_hajir(f, 2);
  EXPECT_FALSE(rep.window_ok);
  EXPECT_FALSE(rep.passed);
  EXPECT_THROW(check_hajir(f, 9), std::invalid_argument);
}

TEST(CheckHajirTest, SmallExceptionalPair) {
  // nu_5(c_j) for (8,-5) is 2,2,1,1,1,1,1,0,0 (sympy): c_0 has valuation 2.
  const auto rep = check_hajir(curly_l(LaguerreParams(8, -5)), 5);
  EXPECT_TRUE(rep.window_ok);
  EXPECT_TRUE(rep.cond_i);
  EXPECT_FALSE(rep.cond_ii);
  EXPECT_TRUE(rep.cond_iii);
  EXPECT_FALSE(rep.cond_iv);
  EXPECT_FALSE(rep.passed);
}

TEST(CheckHajirTest, PassedIsConjunction) {
  for (long n = 6; n <= 45; ++n)
    for (long u = -18; u <= -2; ++u) {
      const auto normalized = binomial_normalized_coeffs(curly_l(LaguerreParams(n, u)));
      for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
        const auto r = check_hajir(normalized, p);
        ASSERT_EQ(r.passed, r.window_ok && r.cond_i && r.cond_ii && r.cond_iii && r.cond_iv);
      }
    }
}

TEST(FindCriterionPrimeTest, Examples) {
  const auto a = find_criterion_prime(LaguerreParams(41, -2));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->prime, 29U);
  EXPECT_TRUE(a->inequalities.three_p_exceeds);
  EXPECT_TRUE(a->inequalities.p_below_n);

  EXPECT_FALSE(find_criterion_prime(LaguerreParams(16, -9)).has_value());

  const auto c = find_criterion_prime(LaguerreParams(50, -18));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->prime, 37U);

  const auto d = find_criterion_prime(LaguerreParams(14, -2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->prime, 11U);
}

TEST(FindCriterionPrimeTest, ProofInequalitiesHoldForLargeN) {
  for (long u = -18; u <= -2; ++u)
    for (long n = std::max(14L, 2 * -u - 1); n <= 120; ++n) {
      const auto r = find_criterion_prime(LaguerreParams(n, u));
      if (!r) continue;
      ASSERT_TRUE(r->inequalities.three_p_exceeds) << n << "," << u;
      ASSERT_TRUE(r->inequalities.p_below_n);
      ASSERT_TRUE(r->inequalities.p_at_least_two_thirds);
      ASSERT_TRUE(r->inequalities.p_at_least_2v_minus_1);
      // Literal restatement of the conditions on the closed-form c_j.
      const LaguerreParams params(n, u);
      const auto p = r->prime;
      ASSERT_EQ(valuation(p, cj(params, 0)), Valuation::finite(1));
      ASSERT_EQ(valuation(p, cj(params, static_cast<long>(p))), Valuation::finite(0));
      for (long j = 0; j <= n - static_cast<long>(p); ++j) ASSERT_TRUE(valuation(p, cj(params, j)) >= 1);
    }
}

TEST(IsRationalSquareTest, Examples) {
  EXPECT_TRUE(is_rational_square(Rational(9, 4)));
  EXPECT_FALSE(is_rational_square(Rational(2)));
  EXPECT_FALSE(is_rational_square(Rational(-4)));
  EXPECT_TRUE(is_rational_square(discriminant_formula(LaguerreParams(8, -5))));
  EXPECT_THROW(is_rational_square(Rational(0)), std::domain_error);
}

TEST(SquarefreePartTest, Basics) {
  EXPECT_EQ(squarefree_part(Integer(72)), 2);
  EXPECT_EQ(squarefree_part(Integer(-50)), -2);
  EXPECT_EQ(squarefree_part(Rational(9, 8)), 2);
  EXPECT_EQ(squarefree_part(Integer(1)), 1);
  EXPECT_THROW(squarefree_part(Integer(Integer(1009) * 1013), 100), std::domain_error);
  EXPECT_TRUE(same_square_class(Rational(8), Rational(1, 2)));
  EXPECT_FALSE(same_square_class(Rational(8), Rational(-2)));
}

TEST(NonSquareCertificateTest, Examples) {
  EXPECT_EQ(nonsquare_certificate(LaguerreParams(14, -2)).kind, CertificateKind::n_mod4_shortcut);
  EXPECT_EQ(nonsquare_certificate(LaguerreParams(16, -9)).kind, CertificateKind::square);

  const auto c = nonsquare_certificate(LaguerreParams(20, -2));
  EXPECT_EQ(c.kind, CertificateKind::p0_exact_division);
  EXPECT_EQ(c.p0, std::optional<std::uint64_t>(19));
  EXPECT_EQ(c.r, std::optional<unsigned>(1));
  EXPECT_EQ(nonsquare_certificate(LaguerreParams(2, -3)).kind, CertificateKind::negative_value);
}

TEST(NonSquareCertificateTest, VerdictAgreesWithDirectSquareTest) {
  for (long n = 2; n <= 60; ++n)
    for (long u = -18; u <= -2; ++u) {
      const LaguerreParams params(n, u);
      const auto cert = nonsquare_certificate(params);
      const bool square = is_rational_square(discriminant_formula(params));
      ASSERT_EQ(cert.kind == CertificateKind::square, square) << n << "," << u;
      ASSERT_EQ(discriminant_formula_factored(params).is_square(), square);
      if (cert.kind == CertificateKind::p0_exact_division) {
        ASSERT_EQ(valuation(*cert.p0, dv_product(params)), Valuation::finite(1));
        ASSERT_EQ(*cert.p0 % 4, (3 * *cert.r) % 4);
        ASSERT_GE(3 * *cert.p0, static_cast<std::uint64_t>(2 * n));
      }
    }
}

TEST(NonSquareCertificateTest, SmallGridAgreesWithResultant) {
  for (long n = 2; n <= 10; ++n)
    for (long u = -18; u <= -2; ++u) {
      const LaguerreParams params(n, u);
      const Rational oracle(discriminant(curly_l(params)));
      ASSERT_EQ(nonsquare_certificate(params).kind == CertificateKind::square, is_rational_square(oracle));
    }
}

}  // namespace
}  // namespace lgal
