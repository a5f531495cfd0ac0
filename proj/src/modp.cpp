#include "lgal/modp.hpp"

#include "lgal/primes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lgal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= 0xFFFFFFFFULL) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime.
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

void require_same_field(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different prime fields");
}

ModPoly pth_root(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(r));
}

ModPoly exact_quotient(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::x_power(std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = 1 % p;
  return ModPoly(p, std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inverse(c_.back(), p_);
  std::vector<std::uint64_t> r(c_);
  for (auto& c : r) c = mul(c, inv, p_);
  return ModPoly(p_, std::move(r));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + y) % a.p_;
  }
  return ModPoly(a.p_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + a.p_ - y) % a.p_;
  }
  return ModPoly(a.p_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mul(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return ModPoly(a.p_, std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ModPoly& f) {
  if (f.is_zero()) return os << "0 (mod " << f.p_ << ")";
  bool first = true;
  for (int j = f.degree(); j >= 0; --j) {
    const auto c = f.c_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (!first) os << " + ";
    if (c != 1 || j == 0) os << c;
    if (j >= 1) os << "x";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os << " (mod " << f.p_ << ")";
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly(p), a};
  std::vector<std::uint64_t> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<std::uint64_t> q(r.size() - db, 0);
  const std::uint64_t inv = inverse(bc.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t coef = mul(r[k + db], inv, p);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] = (r[k + i] + p - mul(coef, bc[i], p)) % p;
  }
  r.resize(db);
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly gcd(ModPoly a, ModPoly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly derivative(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  if (f.degree() < 1) return ModPoly(p);
  std::vector<std::uint64_t> r(static_cast<std::size_t>(f.degree()));
  for (std::size_t j = 1; j < f.coeffs().size(); ++j) r[j - 1] = mul(j % p, f.coeffs()[j], p);
  return ModPoly(p, std::move(r));
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  const std::uint64_t p = m.modulus();
  ModPoly result = divmod(ModPoly(p, {1}), m).second;
  ModPoly b = divmod(base, m).second;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

ModPoly reduce_mod(const IntPolynomial& f, std::uint64_t p) {
  std::vector<std::uint64_t> r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  return ModPoly(p, std::move(r));
}

bool is_squarefree(const ModPoly& f) {
  if (f.degree() < 1) return false;
  return gcd(f, derivative(f)).degree() == 0;
}

CycleType::CycleType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
}

int CycleType::total() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

bool CycleType::is_even() const {
  int s = 0;
  for (int d : degrees_) s += d - 1;
  return s % 2 == 0;
}

CycleType distinct_degree_factor(const ModPoly& input) {
  if (input.degree() < 1) throw std::domain_error("distinct-degree factorization of a constant");
  if (!is_squarefree(input)) throw std::domain_error("distinct-degree factorization needs a squarefree input");
  const std::uint64_t p = input.modulus();
  const Integer pz = static_cast<unsigned long>(p);
  const ModPoly x = ModPoly::x_power(p, 1);

  ModPoly f = input.monic();
  ModPoly h = divmod(x, f).second;
  std::vector<int> degrees;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(h, pz, f);  // h = x^(p^d) mod f
    ModPoly g = gcd(f, h - x);
    if (!g.is_one()) {
      for (int k = 0; k < g.degree() / d; ++k) degrees.push_back(d);
      f = exact_quotient(f, g);
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) degrees.push_back(f.degree());
  return CycleType(std::move(degrees));
}

bool is_irreducible(const ModPoly& input) {
  if (input.degree() < 1) return false;
  const std::uint64_t p = input.modulus();
  const Integer pz = static_cast<unsigned long>(p);
  const ModPoly x = ModPoly::x_power(p, 1);
  const ModPoly f = input.monic();
  ModPoly h = divmod(x, f).second;
  // Any factor of degree <= deg/2 divides some x^(p^d) - x.
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, pz, f);
    if (!gcd(f, h - x).is_one()) return false;
  }
  return true;
}

std::vector<std::pair<ModPoly, int>> squarefree_factorization(const ModPoly& input) {
  const std::uint64_t p = input.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  if (input.degree() < 1) return out;
  const ModPoly f = input.monic();
  const ModPoly fp = derivative(f);
  auto lift = [&](const ModPoly& c) {
    for (auto& [g, m] : squarefree_factorization(pth_root(c))) out.emplace_back(std::move(g), m * static_cast<int>(p));
  };
  if (fp.is_zero()) {
    lift(f);
    return out;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = exact_quotient(f, c);
  for (int i = 1; !w.is_one(); ++i) {
    ModPoly y = gcd(w, c);
    ModPoly factor = exact_quotient(w, y);
    if (!factor.is_one()) out.emplace_back(std::move(factor), i);
    w = std::move(y);
    c = exact_quotient(c, w);
  }
  if (!c.is_one()) lift(c);
  return out;
}

CycleType factor_degrees(const ModPoly& f) {
  if (f.degree() < 1) throw std::domain_error("factor degrees of a constant");
  std::vector<int> degrees;
  for (const auto& [g, m] : squarefree_factorization(f)) {
    const CycleType part = distinct_degree_factor(g);
    for (int d : part.degrees())
      for (int k = 0; k < m; ++k) degrees.push_back(d);
  }
  return CycleType(std::move(degrees));
}

std::vector<FrobeniusSample> frobenius_sample_serial(const IntPolynomial& f, std::size_t count,
                                                     std::uint64_t max_prime) {
  std::vector<FrobeniusSample> out;
  for (auto p = static_cast<std::uint64_t>(std::max(2, f.degree() + 1)); p <= max_prime && out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    const ModPoly fp = reduce_mod(f, p);
    if (fp.degree() != f.degree() || !is_squarefree(fp)) continue;
    out.push_back({p, distinct_degree_factor(fp)});
  }
  return out;
}

std::vector<FrobeniusSample> frobenius_sample(const IntPolynomial& f, std::size_t count, std::uint64_t max_prime) {
  std::vector<FrobeniusSample> out;
  auto next = static_cast<std::uint64_t>(std::max(2, f.degree() + 1));
  while (out.size() < count && next <= max_prime) {
    // Gather a batch of candidate primes, factor them in parallel, keep order.
    std::vector<std::uint64_t> batch;
    const std::size_t want = count - out.size() + 8;  // ramified primes are rare
    for (; batch.size() < want && next <= max_prime; ++next)
      if (is_prime(next)) batch.push_back(next);
    std::vector<std::optional<CycleType>> results(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(batch.size()); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const ModPoly fp = reduce_mod(f, batch[idx]);
      if (fp.degree() == f.degree() && is_squarefree(fp)) results[idx] = distinct_degree_factor(fp);
    }
    for (std::size_t i = 0; i < batch.size() && out.size() < count; ++i)
      if (results[i]) out.push_back({batch[i], std::move(*results[i])});
  }
  return out;
}

std::optional<std::uint64_t> irreducibility_witness(const IntPolynomial& f, std::size_t max_primes) {
  if (f.degree() < 1) return std::nullopt;
  std::size_t tried = 0;
  for (std::uint64_t p = 2; tried < max_primes; ++p) {
    if (!is_prime(p)) continue;
    ++tried;
    const ModPoly fp = reduce_mod(f, p);
    if (fp.degree() != f.degree() || !is_squarefree(fp)) continue;
    if (is_irreducible(fp)) return p;
  }
  return std::nullopt;
}

void write_samples_csv(std::ostream& os, const std::vector<FrobeniusSample>& samples) {
  os << "p,cycle_type,parity\n";
  for (const auto& s : samples) {
    os << s.p << ',';
    const auto& d = s.cycle_type.degrees();
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "|" : "") << d[i];
    os << ',' << (s.cycle_type.is_even() ? "even" : "odd") << '\n';
  }
}

}  // namespace lgal
