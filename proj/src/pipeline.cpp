#include "lgal/pipeline.hpp"

#include <algorithm>

namespace lgal {

std::string to_string(GaloisGroup g) { return g == GaloisGroup::alternating ? "A_n" : "S_n"; }
std::string to_string(Tier t) { return t == Tier::certified ? "certified" : "heuristic"; }

namespace {

bool in_known_range(long u) { return u >= kKnownIrreducibleUMin && u <= kKnownIrreducibleUMax; }

std::string cell(long n, long u) { return "(" + std::to_string(n) + ", " + std::to_string(u) + ")"; }

}  // namespace

GroupCertificate classify(long n, long u, const ClassifyOptions& options) {
  if (n < 2) throw std::invalid_argument("classify needs n >= 2, got " + std::to_string(n));
  const LaguerreParams params(n, u);
  const IntPolynomial f = curly_l(params);

  GroupCertificate cert;
  cert.n = n;
  cert.u = u;

  const bool known = in_known_range(u);
  const auto witness = irreducibility_witness(
      f, known ? options.opportunistic_witness_primes : options.required_witness_primes);
  if (witness) {
    cert.irreducibility = {IrreducibilityEvidence::Kind::witness, witness};
  } else if (known) {
    cert.irreducibility = {IrreducibilityEvidence::Kind::assumed, std::nullopt};
  } else {
    throw NotCertifiable("no irreducibility witness for " + cell(n, u) + " and u is outside [-18, -2]");
  }

  cert.criterion = find_criterion_prime(params);
  if (!cert.criterion) cert.criterion = probe_hajir_window(f);

  cert.disc_certificate = nonsquare_certificate(params);
  cert.disc_square = cert.disc_certificate.kind == CertificateKind::square;
  cert.group = cert.disc_square ? GaloisGroup::alternating : GaloisGroup::symmetric;

  if (cert.criterion) {
    cert.tier = Tier::certified;
    return cert;
  }

  // No criterion prime: fall back to Frobenius cycle types. A square
  // discriminant forces every sample even; otherwise odd ones must show up.
  cert.tier = Tier::heuristic;
  cert.frobenius_samples = frobenius_sample(f, options.min_samples);
  auto has_odd = [&] {
    return std::any_of(cert.frobenius_samples.begin(), cert.frobenius_samples.end(),
                       [](const FrobeniusSample& s) { return !s.cycle_type.is_even(); });
  };
  if (cert.disc_square) {
    if (has_odd()) throw InvariantViolation("odd Frobenius element with square discriminant at " + cell(n, u));
  } else if (!has_odd()) {
    cert.frobenius_samples = frobenius_sample(f, options.max_samples);
    if (!has_odd())
      throw InvariantViolation("no odd Frobenius element in " + std::to_string(options.max_samples) +
                               " samples with non-square discriminant at " + cell(n, u));
  }
  if (cert.frobenius_samples.size() < options.min_samples)
    throw InvariantViolation("too few unramified primes sampled at " + cell(n, u));
  return cert;
}

std::vector<GroupCertificate> classification_table_serial(const TableRequest& request, const ClassifyOptions& options) {
  std::vector<GroupCertificate> out;
  for (long n = 2; n <= request.n_max; ++n)
    for (long u = request.u_min; u <= request.u_max; ++u) out.push_back(classify(n, u, options));
  return out;
}

std::vector<GroupCertificate> classification_table(const TableRequest& request, const ClassifyOptions& options) {
  const long rows = std::max(0L, request.n_max - 1);
  const long cols = std::max(0L, request.u_max - request.u_min + 1);
  const long cells = rows * cols;
  std::vector<GroupCertificate> out(static_cast<std::size_t>(cells));
  // Exceptions cannot cross the parallel region; keep the first by cell index.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < cells; ++i) {
    const long n = 2 + i / cols;
    const long u = request.u_min + i % cols;
    try {
      out[static_cast<std::size_t>(i)] = classify(n, u, options);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::pair<long, long>> alternating_pairs(const std::vector<GroupCertificate>& table) {
  std::vector<std::pair<long, long>> out;
  for (const auto& c : table)
    if (c.group == GaloisGroup::alternating) out.emplace_back(c.n, c.u);
  return out;
}

const std::vector<std::pair<long, long>>& known_alternating_pairs() {
  static const std::vector<std::pair<long, long>> pairs = {
      {8, -6},   {8, -5},   {9, -6},   {9, -5},   {16, -10}, {16, -9},
      {24, -14}, {24, -13}, {25, -14}, {25, -13}, {32, -18}, {32, -17},
  };
  return pairs;
}

}  // namespace lgal
