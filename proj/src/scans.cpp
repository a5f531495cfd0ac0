#include "lgal/scans.hpp"

#include <stdexcept>

namespace lgal {

namespace {

struct IntRange {
  long first;
  long last;
};

IntRange integer_range(const Window& w) { return {std::max(2L, w.first_integer()), w.last_integer()}; }

std::optional<std::uint64_t> sieve_witness(const PrimeSieve& sieve, IntRange r, unsigned residue) {
  if (r.last < r.first) return std::nullopt;
  return sieve.first_in(static_cast<std::uint64_t>(r.first), static_cast<std::uint64_t>(r.last), residue);
}

// Reference path: walk the integers and test each with Miller-Rabin.
std::optional<std::uint64_t> trial_witness(IntRange r, unsigned residue) {
  for (long k = r.first; k <= r.last; ++k) {
    const auto c = static_cast<std::uint64_t>(k);
    if ((residue == 0 || c % 4 == residue) && is_prime(c)) return c;
  }
  return std::nullopt;
}

template <typename WindowFn, typename WitnessFn>
std::vector<WindowReport> run_residue_scan(long lo, long hi, WindowFn window_of, WitnessFn witness, bool parallel) {
  const long count = hi - lo + 1;
  std::vector<WindowReport> out(static_cast<std::size_t>(2 * std::max(0L, count)),
                                WindowReport{0, Window{Bound::closed_at(0), Bound::closed_at(0)}, {}, {}});
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < count; ++i) {
    const long param = lo + i;
    const Window w = window_of(param);
    const IntRange r = integer_range(w);
    for (unsigned k = 0; k < 2; ++k) {
      const unsigned residue = k == 0 ? 1 : 3;
      out[static_cast<std::size_t>(2 * i + k)] = WindowReport{param, w, residue, witness(r, residue)};
    }
  }
  return out;
}

}  // namespace

Window short_window(long n) {
  Rational lo(2 * n, 3);
  lo.canonicalize();
  return {Bound::closed_at(lo), Bound::open_at(Rational(n - 2))};
}

Window growth_window(long x) {
  Rational hi(1048 * x, 1000);
  hi.canonicalize();
  return {Bound::open_at(Rational(x)), Bound::closed_at(hi)};
}

std::vector<WindowReport> short_window_scan(long n_lo, long n_hi) {
  const long count = n_hi - n_lo + 1;
  if (count <= 0) return {};
  const PrimeSieve sieve(static_cast<std::uint64_t>(std::max(2L, n_hi)));
  std::vector<WindowReport> out(static_cast<std::size_t>(count),
                                WindowReport{0, Window{Bound::closed_at(0), Bound::closed_at(0)}, {}, {}});
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const long n = n_lo + i;
    const Window w = short_window(n);
    out[static_cast<std::size_t>(i)] = WindowReport{n, w, std::nullopt, sieve_witness(sieve, integer_range(w), 0)};
  }
  return out;
}

std::vector<WindowReport> short_window_scan_serial(long n_lo, long n_hi) {
  std::vector<WindowReport> out;
  for (long n = n_lo; n <= n_hi; ++n) {
    const Window w = short_window(n);
    out.push_back({n, w, std::nullopt, trial_witness(integer_range(w), 0)});
  }
  return out;
}

ShortWindowSummary short_window_check(long n_max) {
  if (n_max < 14) throw std::invalid_argument("short_window_check needs n_max >= 14");
  ShortWindowSummary summary;
  summary.n_max = n_max;
  for (auto& report : short_window_scan(14, n_max)) {
    ++summary.checked;
    if (!report.witness) summary.failures.push_back(std::move(report));
  }
  return summary;
}

std::vector<WindowReport> residue_window_scan(long n_lo, long n_hi) {
  const PrimeSieve sieve(static_cast<std::uint64_t>(std::max(2L, n_hi)));
  return run_residue_scan(
      n_lo, n_hi, short_window, [&](IntRange r, unsigned res) { return sieve_witness(sieve, r, res); }, true);
}

std::vector<WindowReport> residue_window_scan_serial(long n_lo, long n_hi) {
  return run_residue_scan(n_lo, n_hi, short_window, trial_witness, false);
}

std::vector<long> residue_exception_scan(long n_lo, long n_hi) {
  if (n_lo < 14 || n_lo > n_hi) throw std::invalid_argument("residue_exception_scan needs 14 <= lo <= hi");
  std::vector<long> out;
  for (const auto& report : residue_window_scan(n_lo, n_hi))
    if (!report.witness && (out.empty() || out.back() != report.param)) out.push_back(report.param);
  return out;
}

std::vector<WindowReport> growth_window_scan(long x_lo, long x_hi) {
  const PrimeSieve sieve(static_cast<std::uint64_t>(std::max(2L, 1048 * x_hi / 1000)));
  return run_residue_scan(
      x_lo, x_hi, growth_window, [&](IntRange r, unsigned res) { return sieve_witness(sieve, r, res); }, true);
}

std::vector<WindowReport> growth_window_scan_serial(long x_lo, long x_hi) {
  return run_residue_scan(x_lo, x_hi, growth_window, trial_witness, false);
}

void write_window_csv(std::ostream& os, const std::vector<WindowReport>& reports) {
  const bool filtered = !reports.empty() && reports.front().residue.has_value();
  os << "n,window_lo,window_hi,witness_or_EMPTY" << (filtered ? ",residue" : "") << '\n';
  for (const auto& r : reports) {
    os << r.param << ',' << r.window.lo.value.get_str() << ',' << r.window.hi.value.get_str() << ',';
    if (r.witness) os << *r.witness;
    else os << "EMPTY";
    if (r.residue) os << ',' << *r.residue;
    os << '\n';
  }
}

}  // namespace lgal
