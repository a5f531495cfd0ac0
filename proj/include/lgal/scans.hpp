#pragma once

// Prime-window scans over ranges of n (or x). Each scan has an OpenMP kernel
// driven by a shared sieve and a serial reference that walks the window with
// Miller-Rabin only; tests compare the two.

#include "lgal/primes.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace lgal {

/// [2n/3, n - 2)
Window short_window(long n);
/// (x, 1048x/1000]
Window growth_window(long x);

struct WindowReport {
  long param;  // n or x
  Window window;
  std::optional<unsigned> residue;  // 1 or 3 mod 4 when filtered
  std::optional<std::uint64_t> witness;  // smallest prime found
};

/// One report per n in [n_lo, n_hi] for the window [2n/3, n - 2).
std::vector<WindowReport> short_window_scan(long n_lo, long n_hi);
std::vector<WindowReport> short_window_scan_serial(long n_lo, long n_hi);

struct ShortWindowSummary {
  long n_max = 0;
  std::size_t checked = 0;
  std::vector<WindowReport> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Every 14 <= n <= n_max must have a prime in [2n/3, n - 2).
/// Throws std::invalid_argument for n_max < 14.
ShortWindowSummary short_window_check(long n_max);

/// Two reports per n (residues 1 then 3 mod 4) for [2n/3, n - 2).
std::vector<WindowReport> residue_window_scan(long n_lo, long n_hi);
std::vector<WindowReport> residue_window_scan_serial(long n_lo, long n_hi);

/// n in [n_lo, n_hi] whose window [2n/3, n - 2) misses a prime = 1 or a prime = 3 (mod 4).
/// Throws std::invalid_argument unless 14 <= n_lo <= n_hi.
std::vector<long> residue_exception_scan(long n_lo, long n_hi);

/// Two reports per integer x in [x_lo, x_hi] (residues 1 then 3 mod 4) for (x, 1.048x].
std::vector<WindowReport> growth_window_scan(long x_lo, long x_hi);
std::vector<WindowReport> growth_window_scan_serial(long x_lo, long x_hi);

/// CSV: "n,window_lo,window_hi,witness_or_EMPTY"; residue-filtered reports carry a
/// trailing ",residue" column.
void write_window_csv(std::ostream& os, const std::vector<WindowReport>& reports);

}  // namespace lgal
