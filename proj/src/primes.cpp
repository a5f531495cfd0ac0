#include "lgal/primes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lgal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
  std::vector<char> mark(limit + 1, 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!mark[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
  }
  return out;
}

// Primes in [lo, hi] using the precomputed base primes up to sqrt(hi).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& base,
                   std::vector<std::uint64_t>& out) {
  if (lo > hi) return;
  std::vector<char> alive(hi - lo + 1, 1);
  for (std::uint64_t p : base) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j <= hi; j += p) alive[j - lo] = 0;
  }
  for (std::uint64_t i = lo; i <= hi; ++i)
    if (i >= 2 && alive[i - lo]) out.push_back(i);
}

constexpr std::uint64_t kSegment = 1 << 16;

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite_[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;

  count_all_.assign(limit + 1, 0);
  count_1_.assign(limit + 1, 0);
  count_3_.assign(limit + 1, 0);
  std::uint32_t a = 0, c1 = 0, c3 = 0;
  for (std::uint64_t i = 0; i <= limit; ++i) {
    if (!composite_[i]) {
      primes_.push_back(i);
      ++a;
      if (i % 4 == 1) ++c1;
      if (i % 4 == 3) ++c3;
    }
    count_all_[i] = a;
    count_1_[i] = c1;
    count_3_[i] = c3;
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("query " + std::to_string(n) + " beyond sieve limit");
  return !composite_[n];
}

std::uint64_t PrimeSieve::count_upto(std::uint64_t x, unsigned r) const {
  if (x > limit_) throw std::out_of_range("query " + std::to_string(x) + " beyond sieve limit");
  switch (r) {
    case 0: return count_all_[x];
    case 1: return count_1_[x];
    case 3: return count_3_[x];
    default: throw std::invalid_argument("residue filter must be 0, 1 or 3");
  }
}

std::optional<std::uint64_t> PrimeSieve::first_in(std::uint64_t lo, std::uint64_t hi, unsigned r) const {
  if (hi > limit_) throw std::out_of_range("query " + std::to_string(hi) + " beyond sieve limit");
  auto it = std::lower_bound(primes_.begin(), primes_.end(), lo);
  for (; it != primes_.end() && *it <= hi; ++it)
    if (r == 0 || *it % 4 == r) return *it;
  return std::nullopt;
}

std::optional<std::uint64_t> PrimeSieve::last_in(std::uint64_t lo, std::uint64_t hi, unsigned r) const {
  if (hi > limit_) throw std::out_of_range("query " + std::to_string(hi) + " beyond sieve limit");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), hi);
  while (it != primes_.begin()) {
    --it;
    if (*it < lo) break;
    if (r == 0 || *it % 4 == r) return *it;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> segmented_primes_serial(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (lo > hi) return out;
  const auto base = base_primes(isqrt(hi));
  for (std::uint64_t s = lo; s <= hi; s += kSegment) {
    sieve_segment(s, std::min(hi, s + kSegment - 1), base, out);
    if (s + kSegment < s) break;
  }
  return out;
}

std::vector<std::uint64_t> segmented_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return {};
  const auto base = base_primes(isqrt(hi));
  const std::uint64_t segments = (hi - lo) / kSegment + 1;
  std::vector<std::vector<std::uint64_t>> parts(segments);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(segments); ++i) {
    const std::uint64_t s = lo + static_cast<std::uint64_t>(i) * kSegment;
    sieve_segment(s, std::min(hi, s + kSegment - 1), base, parts[static_cast<std::size_t>(i)]);
  }
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

long Window::first_integer() const {
  Integer v = lo.closed ? ceil_of(lo.value) : Integer(floor_of(lo.value) + 1);
  return v.get_si();
}

long Window::last_integer() const {
  Integer v = hi.closed ? floor_of(hi.value) : Integer(ceil_of(hi.value) - 1);
  return v.get_si();
}

bool Window::contains(const Rational& x) const {
  const bool above = lo.closed ? x >= lo.value : x > lo.value;
  const bool below = hi.closed ? x <= hi.value : x < hi.value;
  return above && below;
}

std::string Window::to_string() const {
  std::ostringstream os;
  os << (lo.closed ? '[' : '(') << lo.value.get_str() << ", " << hi.value.get_str() << (hi.closed ? ']' : ')');
  return os.str();
}

std::vector<std::uint64_t> primes_in(const Window& window, std::optional<Residue> residue) {
  if (window.lo.value > window.hi.value) throw std::invalid_argument("window lower bound exceeds upper bound");
  if (residue && residue->modulus == 0) throw std::invalid_argument("residue modulus must be >= 1");
  const long first = std::max(2L, window.first_integer());
  const long last = window.last_integer();
  std::vector<std::uint64_t> out;
  if (last < first) return out;
  for (std::uint64_t p : segmented_primes(static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(last))) {
    if (residue && p % residue->modulus != residue->r % residue->modulus) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace lgal
