#include "lgal/laguerre.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lgal {

namespace {

void add_factorization(std::map<unsigned long, long>& exps, unsigned long value, long power) {
  for (unsigned long d = 2; d * d <= value; ++d) {
    while (value % d == 0) {
      exps[d] += power;
      value /= d;
    }
  }
  if (value > 1) exps[value] += power;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

LaguerreParams::LaguerreParams(long n, long u) : n_(n), u_(u) {
  if (n < 1) throw std::invalid_argument("Laguerre degree must be >= 1, got " + std::to_string(n));
}

Integer cj(const LaguerreParams& params, long j) {
  if (j < 0 || j > params.n())
    throw std::out_of_range("c_j index " + std::to_string(j) + " outside [0, " + std::to_string(params.n()) + "]");
  Integer prod = 1;
  for (long i = j + 1; i <= params.n(); ++i) prod *= 1 + 2 * (params.u() + i);
  return prod;
}

IntPolynomial curly_l(const LaguerreParams& params) {
  const long n = params.n();
  std::vector<Integer> coeffs(static_cast<std::size_t>(n + 1));
  // Build c_j from the top down so each step is one multiplication.
  Integer c = 1;
  for (long j = n; j >= 0; --j) {
    coeffs[static_cast<std::size_t>(j)] = binomial(n, j) * c;
    c *= 1 + 2 * (params.u() + j);
  }
  return IntPolynomial(std::move(coeffs));
}

Rational generalized_binomial(const Rational& top, long k) {
  Rational num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / Rational(den);
}

RatPolynomial glp_classical(const LaguerreParams& params) {
  const long n = params.n();
  const Rational top = Rational(n) + params.alpha();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
  Integer jfact = 1;
  for (long j = 0; j <= n; ++j) {
    if (j > 0) jfact *= j;
    Rational c = generalized_binomial(top, n - j) / Rational(jfact);
    coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : Rational(-c);
  }
  return RatPolynomial(std::move(coeffs));
}

RatPolynomial glp(const LaguerreParams& params) {
  RatPolynomial base = glp_classical(params);
  return params.n() % 2 == 0 ? base : Rational(-1) * base;
}

Rational discriminant_formula(const LaguerreParams& params) {
  Rational prod = 1;
  for (long j = 2; j <= params.n(); ++j) {
    Integer jj;
    mpz_ui_pow_ui(jj.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(j));
    Integer num;
    Integer base = 2 * params.u() + 1 + 2 * j;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(j - 1));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(j - 1));
    Rational factor(jj * num, den);
    factor.canonicalize();
    prod *= factor;
  }
  prod.canonicalize();
  return prod;
}

FactoredRational discriminant_formula_factored(const LaguerreParams& params) {
  FactoredRational out;
  for (long j = 2; j <= params.n(); ++j) {
    add_factorization(out.exponents, static_cast<unsigned long>(j), j);
    const long odd = 2 * params.u() + 1 + 2 * j;
    if (odd < 0 && (j - 1) % 2 == 1) out.sign = -out.sign;
    add_factorization(out.exponents, static_cast<unsigned long>(std::labs(odd)), j - 1);
    out.exponents[2] -= j - 1;
  }
  std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational FactoredRational::value() const {
  Integer num = 1;
  Integer den = 1;
  for (const auto& [p, e] : exponents) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
    (e > 0 ? num : den) *= pe;
  }
  Rational r(sign * num, den);
  r.canonicalize();
  return r;
}

bool FactoredRational::is_square() const { return sign > 0 && odd_exponent_prime() == 0; }

unsigned long FactoredRational::odd_exponent_prime() const {
  for (const auto& [p, e] : exponents)
    if (e % 2 != 0) return p;
  return 0;
}

Integer dv_product(const LaguerreParams& params) {
  const long n = params.n();
  if (n < 2) throw std::invalid_argument("D_v needs n >= 2");
  const long n_odd = (n % 2 == 1) ? n : n - 1;
  const long n_even = (n % 2 == 0) ? n : n - 1;
  Integer prod = 1;
  for (long k = 1; k <= n_odd; k += 2) prod *= k;
  for (long t = 4; t <= 2 * n_even; t += 4) prod *= -2 * params.v() + 1 + t;
  return prod;
}

}  // namespace lgal
