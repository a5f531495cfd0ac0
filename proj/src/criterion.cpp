#include "lgal/criterion.hpp"

#include "lgal/primes.hpp"

#include <stdexcept>
#include <string>

namespace lgal {

std::vector<Rational> binomial_normalized_coeffs(const IntPolynomial& f) {
  const long m = f.degree();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m + 1));
  Integer binom = 1;
  for (long j = 0; j <= m; ++j) {
    Rational c(f.coeff(static_cast<std::size_t>(j)), binom);
    c.canonicalize();
    out.push_back(std::move(c));
    // binom(m, j + 1) = binom(m, j) * (m - j) / (j + 1)
    binom *= m - j;
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  return out;
}

HajirConditionReport check_hajir(const std::vector<Rational>& c, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("criterion prime " + std::to_string(p) + " is not prime");
  HajirConditionReport rep;
  rep.m = static_cast<long>(c.size()) - 1;
  rep.p = p;
  const long m = rep.m;
  const auto pl = static_cast<long>(p);
  rep.window_ok = 2 * pl > m && pl < m - 2;

  rep.cond_i = true;
  for (const auto& cj : c)
    if (!(valuation(p, cj) >= 0)) {
      rep.cond_i = false;
      break;
    }
  rep.cond_ii = !c.empty() && valuation(p, c[0]) == 1;
  rep.cond_iii = true;
  for (long j = 0; j <= m - pl && j <= m; ++j)
    if (!(valuation(p, c[static_cast<std::size_t>(j)]) >= 1)) {
      rep.cond_iii = false;
      break;
    }
  rep.cond_iv = pl <= m && valuation(p, c[static_cast<std::size_t>(pl)]) == 0;
  rep.passed = rep.window_ok && rep.cond_i && rep.cond_ii && rep.cond_iii && rep.cond_iv;
  return rep;
}

HajirConditionReport check_hajir(const IntPolynomial& f, std::uint64_t p) {
  return check_hajir(binomial_normalized_coeffs(f), p);
}

std::optional<CriterionResult> find_criterion_prime(const LaguerreParams& params) {
  const long n = params.n();
  const long v = params.v();
  // Open window (2v - 3, n - 2).
  if (2 * v - 3 >= n - 2) return std::nullopt;
  const long lo = std::max({2 * v - 1, (2 * n + 2) / 3, 2L});
  const long hi = n - 3;
  if (lo > hi) return std::nullopt;

  const auto normalized = binomial_normalized_coeffs(curly_l(params));
  for (long p = lo; p <= hi; ++p) {
    const auto up = static_cast<std::uint64_t>(p);
    if (!is_prime(up)) continue;
    auto report = check_hajir(normalized, up);
    if (!report.passed) continue;
    CriterionResult result{up, report, {}};
    result.inequalities.three_p_exceeds = 3 * p > 2 * (n - v) + 3;
    result.inequalities.p_below_n = p < n && n <= 2 * (n - v) + 1;
    result.inequalities.p_at_least_two_thirds = 3 * p >= 2 * n;
    result.inequalities.p_at_least_2v_minus_1 = p >= 2 * v - 1;
    return result;
  }
  return std::nullopt;
}

std::optional<CriterionResult> probe_hajir_window(const IntPolynomial& f) {
  const long m = f.degree();
  const auto normalized = binomial_normalized_coeffs(f);
  for (long p = m / 2 + 1; p < m - 2; ++p) {
    const auto up = static_cast<std::uint64_t>(p);
    if (!is_prime(up)) continue;
    auto report = check_hajir(normalized, up);
    if (report.passed) return CriterionResult{up, report, {}};
  }
  return std::nullopt;
}

bool is_rational_square(const Rational& q) {
  if (q == 0) throw std::domain_error("square test on zero (repeated root upstream)");
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Integer squarefree_part(const Integer& z, unsigned long smooth_bound) {
  if (z == 0) throw std::domain_error("squarefree part of zero");
  Integer rest = abs(z);
  Integer out = 1;
  for (unsigned long d = 2; d <= smooth_bound && rest > 1; ++d) {
    if (!is_prime(d)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e % 2) out *= d;
  }
  if (rest != 1 && !mpz_perfect_square_p(rest.get_mpz_t()))
    throw std::domain_error("cofactor " + rest.get_str() + " is not " + std::to_string(smooth_bound) + "-smooth");
  return z < 0 ? Integer(-out) : out;
}

Integer squarefree_part(const Rational& q, unsigned long smooth_bound) {
  Rational r = q;
  r.canonicalize();
  return squarefree_part(Integer(r.get_num() * r.get_den()), smooth_bound);
}

bool same_square_class(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("square class of zero");
  return is_rational_square(a * b);
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::negative_value: return "negative_value";
    case CertificateKind::n_mod4_shortcut: return "n_mod4_shortcut";
    case CertificateKind::p0_exact_division: return "p0_exact_division";
    case CertificateKind::odd_exponent_prime: return "odd_exponent_prime";
    case CertificateKind::square: return "square";
  }
  return "unknown";
}

NonSquareCertificate nonsquare_certificate(const LaguerreParams& params) {
  const long n = params.n();
  const long v = params.v();
  const FactoredRational delta = discriminant_formula_factored(params);
  NonSquareCertificate cert;

  if (delta.sign < 0) {
    cert.kind = CertificateKind::negative_value;
    return cert;
  }

  if (n % 4 == 2 || n % 4 == 3) {
    const auto it = delta.exponents.find(2);
    if (it == delta.exponents.end() || it->second % 2 == 0)
      throw std::logic_error("2-adic shortcut failed for n = " + std::to_string(n));
    cert.kind = CertificateKind::n_mod4_shortcut;
    return cert;
  }

  if (n >= 2) {
    const auto r = static_cast<unsigned>((((-2 * v + 1) % 4) + 4) % 4);
    const unsigned target = (3 * r) % 4;
    cert.r = r;
    // Largest prime in [2n/3, n) of the required class.
    for (long p = n - 1; 3 * p >= 2 * n && p >= 2; --p) {
      const auto up = static_cast<std::uint64_t>(p);
      if (up % 4 != target || !is_prime(up)) continue;
      const bool guards = 3 * p > 2 * n && 2 * v - 5 <= 2 * n;
      if (guards && valuation(up, dv_product(params)) == 1) {
        cert.kind = CertificateKind::p0_exact_division;
        cert.p0 = up;
        return cert;
      }
      break;
    }
  }

  if (is_rational_square(discriminant_formula(params))) {
    cert.kind = CertificateKind::square;
    return cert;
  }

  const unsigned long odd = delta.odd_exponent_prime();
  if (odd == 0) throw std::logic_error("factored and expanded discriminants disagree on the square class");
  cert.kind = CertificateKind::odd_exponent_prime;
  cert.p0 = odd;
  return cert;
}

}  // namespace lgal
