#pragma once

// Test-only oracle: factor degrees over F_p by exhaustive trial division with
// every monic irreducible of degree <= max_degree. Independent of the
// gcd/power-based routines under test; uses only schoolbook arithmetic on
// coefficient vectors.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace lgal::testing {

using Coeffs = std::vector<std::uint64_t>;  // low to high, monic, trimmed

inline Coeffs mul_mod(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

/// All monic polynomials of exactly the given degree.
inline std::vector<Coeffs> all_monic(int degree, std::uint64_t p) {
  std::vector<Coeffs> out;
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Coeffs c(static_cast<std::size_t>(degree + 1));
    std::uint64_t x = code;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = x % p;
      x /= p;
    }
    c.back() = 1;
    out.push_back(c);
  }
  return out;
}

/// Monic irreducibles of degree 1..max_degree: monic polys that are not a
/// product of two monic polys of positive degree.
inline std::vector<Coeffs> monic_irreducibles(int max_degree, std::uint64_t p) {
  std::set<Coeffs> reducible;
  for (int d1 = 1; d1 < max_degree; ++d1)
    for (int d2 = d1; d1 + d2 <= max_degree; ++d2)
      for (const auto& a : all_monic(d1, p))
        for (const auto& b : all_monic(d2, p)) reducible.insert(mul_mod(a, b, p));
  std::vector<Coeffs> out;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& f : all_monic(d, p))
      if (!reducible.count(f)) out.push_back(f);
  return out;
}

/// Exact division by a monic divisor; returns false if the remainder is nonzero.
inline bool divide_monic(const Coeffs& f, const Coeffs& g, std::uint64_t p, Coeffs& quotient) {
  if (f.size() < g.size()) return false;
  Coeffs r = f;
  Coeffs q(f.size() - g.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = r[k + g.size() - 1];
    q[k] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[k + i] = (r[k + i] + p * p - c * g[i]) % p;
  }
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (r[i] != 0) return false;
  quotient = q;
  return true;
}

/// Sorted factor degrees with multiplicity.
inline std::vector<int> brute_force_degrees(Coeffs f, std::uint64_t p, const std::vector<Coeffs>& irreducibles) {
  std::vector<int> out;
  for (const auto& g : irreducibles) {
    Coeffs q;
    while (f.size() >= g.size() && divide_monic(f, g, p, q)) {
      out.push_back(static_cast<int>(g.size()) - 1);
      f = q;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lgal::testing
