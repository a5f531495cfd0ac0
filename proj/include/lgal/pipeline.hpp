#pragma once

// End-to-end S_n / A_n classification of the Laguerre family with a
// certificate chain, and grid tables over (n, u).

#include "lgal/criterion.hpp"
#include "lgal/modp.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgal {

enum class GaloisGroup { symmetric, alternating };
enum class Tier { certified, heuristic };

std::string to_string(GaloisGroup g);
std::string to_string(Tier t);

struct IrreducibilityEvidence {
  enum class Kind { witness, assumed };
  Kind kind = Kind::assumed;
  std::optional<std::uint64_t> prime;  // set for witness

  friend bool operator==(const IrreducibilityEvidence&, const IrreducibilityEvidence&) = default;
};

struct GroupCertificate {
  long n = 0;
  long u = 0;
  IrreducibilityEvidence irreducibility;
  /// Criterion prime and its condition report; absent means the A_n-containment
  /// evidence is the Frobenius sample set alone.
  std::optional<CriterionResult> criterion;
  std::vector<FrobeniusSample> frobenius_samples;
  bool disc_square = false;
  NonSquareCertificate disc_certificate;
  GaloisGroup group = GaloisGroup::symmetric;
  Tier tier = Tier::heuristic;
};

/// The input cannot be labelled: outside the range where irreducibility is
/// known and no mod-p witness was found.
class NotCertifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check between independent evidence failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ClassifyOptions {
  /// Primes tried when irreducibility is already known for the u-range.
  std::size_t opportunistic_witness_primes = 10;
  /// Primes tried when irreducibility must come from a witness.
  std::size_t required_witness_primes = 400;
  std::size_t min_samples = 50;
  std::size_t max_samples = 200;
};

/// Irreducibility is known for -18 <= u <= -2.
constexpr long kKnownIrreducibleUMin = -18;
constexpr long kKnownIrreducibleUMax = -2;

/// Throws std::invalid_argument for n < 2, NotCertifiable as above, and
/// InvariantViolation if the Frobenius parities contradict the discriminant.
GroupCertificate classify(long n, long u, const ClassifyOptions& options = {});

struct TableRequest {
  long n_max = 40;
  long u_min = kKnownIrreducibleUMin;
  long u_max = kKnownIrreducibleUMax;
};

/// All cells 2 <= n <= n_max, u_min <= u <= u_max in (n, u) lexicographic order.
std::vector<GroupCertificate> classification_table(const TableRequest& request, const ClassifyOptions& options = {});
/// Serial reference for classification_table.
std::vector<GroupCertificate> classification_table_serial(const TableRequest& request,
                                                   const ClassifyOptions& options = {});

/// (n, u) pairs labelled A_n, in table order.
std::vector<std::pair<long, long>> alternating_pairs(const std::vector<GroupCertificate>& table);

/// The twelve pairs with group A_n for 2 <= n, -18 <= u <= -2.
const std::vector<std::pair<long, long>>& known_alternating_pairs();

}  // namespace lgal
