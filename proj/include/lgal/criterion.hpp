#pragma once

// A_m-containment criterion on binomial-normalized coefficients, the
// criterion-prime search for the Laguerre family, and square-class decisions
// for its discriminant.

#include "lgal/laguerre.hpp"
#include "lgal/padic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgal {

/// Outcome of the four valuation conditions at p, plus the window m/2 < p < m - 2.
struct HajirConditionReport {
  long m = 0;
  std::uint64_t p = 0;
  bool window_ok = false;
  bool cond_i = false;    // nu_p(c_j) >= 0 for all j
  bool cond_ii = false;   // nu_p(c_0) == 1
  bool cond_iii = false;  // nu_p(c_j) >= 1 for 0 <= j <= m - p
  bool cond_iv = false;   // nu_p(c_p) == 0
  bool passed = false;

  friend bool operator==(const HajirConditionReport&, const HajirConditionReport&) = default;
};

/// c_j = a_j / binom(m, j).
std::vector<Rational> binomial_normalized_coeffs(const IntPolynomial& f);

/// Evaluates the conditions on the actual coefficients of f. The conclusion
/// (Galois group contains A_m) is only meaningful for irreducible f.
/// Throws std::invalid_argument if p is not prime.
HajirConditionReport check_hajir(const IntPolynomial& f, std::uint64_t p);
HajirConditionReport check_hajir(const std::vector<Rational>& normalized, std::uint64_t p);

/// Diagnostics from the criterion-prime search: the inequalities that make the
/// proof go through. The verdict never depends on these.
struct CriterionInequalities {
  bool three_p_exceeds = false;       // 3p > 2(n - v) + 3
  bool p_below_n = false;             // p < n <= 2(n - v) + 1
  bool p_at_least_two_thirds = false; // 3p >= 2n
  bool p_at_least_2v_minus_1 = false;
};

struct CriterionResult {
  std::uint64_t prime = 0;
  HajirConditionReport report;
  CriterionInequalities inequalities;
};

/// Smallest prime p in (2v - 3, n - 2) with p >= max(2n/3, 2v - 1) whose
/// condition report passes; nullopt when the window is empty or none passes.
std::optional<CriterionResult> find_criterion_prime(const LaguerreParams& params);

/// Smallest prime in (m/2, m - 2) passing the conditions, without the
/// Laguerre-specific restrictions.
std::optional<CriterionResult> probe_hajir_window(const IntPolynomial& f);

/// q > 0 with square numerator and denominator. Throws std::domain_error on 0.
bool is_rational_square(const Rational& q);

/// Squarefree part of a nonzero integer, sign kept, by trial division with
/// primes up to smooth_bound. Throws std::domain_error if the remaining
/// cofactor is neither 1 nor a perfect square.
Integer squarefree_part(const Integer& z, unsigned long smooth_bound = 1000);
/// Squarefree part of num * den for a reduced fraction; same square class as q.
Integer squarefree_part(const Rational& q, unsigned long smooth_bound = 1000);

/// a / b is a nonzero rational square, decided without factoring.
bool same_square_class(const Rational& a, const Rational& b);

enum class CertificateKind {
  negative_value,
  n_mod4_shortcut,
  p0_exact_division,
  odd_exponent_prime,
  square,
};

std::string to_string(CertificateKind kind);

struct NonSquareCertificate {
  CertificateKind kind = CertificateKind::square;
  std::optional<std::uint64_t> p0;  // p0_exact_division / odd_exponent_prime witness
  std::optional<unsigned> r;        // -2v + 1 mod 4, when the p0 search ran
};

/// Cheapest applicable certificate for the square class of the discriminant:
/// negative value, then the 2-adic shortcut for n = 2, 3 (mod 4), then the
/// largest prime p0 in [2n/3, n) with p0 = 3r (mod 4) dividing D_v exactly,
/// then the square verdict, else a prime of odd exponent in the factored
/// discriminant. Every non-square kind is verified before it is returned.
NonSquareCertificate nonsquare_certificate(const LaguerreParams& params);

}  // namespace lgal
