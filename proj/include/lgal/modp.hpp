#pragma once

// Polynomials over F_p: distinct-degree factorization, Frobenius cycle types
// and irreducibility witnesses.

#include "lgal/poly.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace lgal {

/// Dense polynomial over F_p, residues in [0, p), top coefficient nonzero.
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  explicit ModPoly(std::uint64_t p) : p_(p) {}

  static ModPoly x_power(std::uint64_t p, std::size_t k);

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const { return c_; }
  [[nodiscard]] std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  [[nodiscard]] ModPoly monic() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ModPoly& f);

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(ModPoly a, ModPoly b);  // monic, or zero
ModPoly derivative(const ModPoly& f);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

ModPoly reduce_mod(const IntPolynomial& f, std::uint64_t p);

/// gcd(f, f') == 1 for a nonconstant f.
bool is_squarefree(const ModPoly& f);

/// Multiset of factor degrees, ascending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> degrees);

  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] int total() const;
  /// Even iff sum of (d - 1) is even.
  [[nodiscard]] bool is_even() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> degrees_;
};

/// Factor degrees of a squarefree polynomial via gcds with x^(p^d) - x.
/// Throws std::domain_error if f is not squarefree mod p, or is constant.
CycleType distinct_degree_factor(const ModPoly& f);

/// No factor of degree <= deg/2; irreducible mod p. Constant input is not irreducible.
bool is_irreducible(const ModPoly& f);

/// Squarefree factorization: pairs (squarefree monic factor, multiplicity).
std::vector<std::pair<ModPoly, int>> squarefree_factorization(const ModPoly& f);

/// Irreducible factor degrees with multiplicity, any nonconstant f.
CycleType factor_degrees(const ModPoly& f);

struct FrobeniusSample {
  std::uint64_t p;
  CycleType cycle_type;
};

/// Cycle types at the first `count` primes p > deg f with f squarefree mod p,
/// in increasing order of p. Primes above max_prime are never tried.
std::vector<FrobeniusSample> frobenius_sample(const IntPolynomial& f, std::size_t count,
                                              std::uint64_t max_prime = 1'000'000);
/// Serial reference for frobenius_sample.
std::vector<FrobeniusSample> frobenius_sample_serial(const IntPolynomial& f, std::size_t count,
                                                     std::uint64_t max_prime = 1'000'000);

/// First squarefree-reducing prime p (among the first max_primes primes) at which
/// f stays irreducible. A witness proves irreducibility over Q; nullopt proves nothing.
std::optional<std::uint64_t> irreducibility_witness(const IntPolynomial& f, std::size_t max_primes);

/// CSV: "p,deg1|deg2|...,parity".
void write_samples_csv(std::ostream& os, const std::vector<FrobeniusSample>& samples);

}  // namespace lgal
