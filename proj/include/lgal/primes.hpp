#pragma once

// Prime sieving, deterministic 64-bit primality, and prime listing over
// rational-bounded windows.

#include "lgal/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgal {

/// Deterministic Miller-Rabin for all 64-bit inputs (witnesses 2..37).
bool is_prime(std::uint64_t n);

/// Eratosthenes sieve over [0, limit]. Immutable once built; concurrent
/// queries are safe.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] bool is_prime(std::uint64_t n) const;
  [[nodiscard]] const std::vector<std::uint64_t>& primes() const { return primes_; }

  /// Number of primes p <= x with p = r (mod 4); r = 0 counts every prime.
  [[nodiscard]] std::uint64_t count_upto(std::uint64_t x, unsigned r = 0) const;
  /// Smallest prime in [lo, hi] with the residue filter, if any.
  [[nodiscard]] std::optional<std::uint64_t> first_in(std::uint64_t lo, std::uint64_t hi, unsigned r = 0) const;
  /// Largest prime in [lo, hi] with the residue filter, if any.
  [[nodiscard]] std::optional<std::uint64_t> last_in(std::uint64_t lo, std::uint64_t hi, unsigned r = 0) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
  // Cumulative counts indexed by n: all primes, primes = 1 (mod 4), primes = 3 (mod 4).
  std::vector<std::uint32_t> count_all_;
  std::vector<std::uint32_t> count_1_;
  std::vector<std::uint32_t> count_3_;
};

/// Primes in [lo, hi], segmented over OpenMP threads.
std::vector<std::uint64_t> segmented_primes(std::uint64_t lo, std::uint64_t hi);
/// Serial reference for segmented_primes.
std::vector<std::uint64_t> segmented_primes_serial(std::uint64_t lo, std::uint64_t hi);

/// Interval endpoint: an exact rational and whether it is included.
struct Bound {
  Rational value;
  bool closed;

  static Bound closed_at(const Rational& v) { return {v, true}; }
  static Bound open_at(const Rational& v) { return {v, false}; }
};

struct Window {
  Bound lo;
  Bound hi;

  /// Smallest and largest integers inside the window; empty when first > last.
  [[nodiscard]] long first_integer() const;
  [[nodiscard]] long last_integer() const;
  [[nodiscard]] bool contains(const Rational& x) const;
  [[nodiscard]] std::string to_string() const;
};

struct Residue {
  unsigned long r;
  unsigned long modulus;
};

/// Primes inside the window, optionally restricted to p = r (mod modulus),
/// in increasing order. Throws std::invalid_argument on lo > hi or modulus 0.
std::vector<std::uint64_t> primes_in(const Window& window, std::optional<Residue> residue = std::nullopt);

}  // namespace lgal
