#pragma once

// The family L_n^(u + 1/2) and its monic integer normalization.

#include "lgal/poly.hpp"

#include <map>

namespace lgal {

/// Degree n and integer shift u; alpha = u + 1/2 and v = -u are derived.
class LaguerreParams {
 public:
  LaguerreParams(long n, long u);

  [[nodiscard]] long n() const { return n_; }
  [[nodiscard]] long u() const { return u_; }
  [[nodiscard]] long v() const { return -u_; }
  [[nodiscard]] Rational alpha() const { return Rational(2 * u_ + 1, 2); }

  friend bool operator==(const LaguerreParams&, const LaguerreParams&) = default;

 private:
  long n_;
  long u_;
};

/// c_j = prod_{i=j+1}^{n} (1 + 2(u + i)); c_n = 1.
Integer cj(const LaguerreParams& params, long j);

/// Monic integer polynomial with coefficient binom(n, j) * c_j at x^j.
IntPolynomial curly_l(const LaguerreParams& params);

/// L_n^(alpha)(x) = (-1)^n sum_j binom(n + alpha, n - j) (-x)^j / j!, exactly as displayed,
/// including the leading (-1)^n.
RatPolynomial glp(const LaguerreParams& params);

/// The customary normalization sum_j binom(n + alpha, n - j) (-x)^j / j!,
/// i.e. glp() without the (-1)^n factor.
RatPolynomial glp_classical(const LaguerreParams& params);

/// Generalized binomial binom(top, k) as a falling-factorial quotient.
Rational generalized_binomial(const Rational& top, long k);

/// prod_{j=2}^{n} j^j ((2u + 1 + 2j) / 2)^(j-1). Equal to the product from j = 1
/// (its j = 1 factor is 1), and 1 for n = 1.
Rational discriminant_formula(const LaguerreParams& params);

/// The same product kept as a sign and a prime-exponent map (exponents may be
/// negative: the powers of 2 in the denominators). Factors are small, so this
/// is cheap and gives an independent route to the square class.
struct FactoredRational {
  int sign = 1;
  std::map<unsigned long, long> exponents;

  [[nodiscard]] Rational value() const;
  [[nodiscard]] bool is_square() const;
  /// Smallest prime with odd exponent, 0 if none.
  [[nodiscard]] unsigned long odd_exponent_prime() const;
};

FactoredRational discriminant_formula_factored(const LaguerreParams& params);

/// D_v = 1*3*5*...*n_o * (-2v+1+4)(-2v+1+8)...(-2v+1+2n_e), n_o / n_e the largest
/// odd / even integers <= n. Requires n >= 2.
Integer dv_product(const LaguerreParams& params);

}  // namespace lgal
