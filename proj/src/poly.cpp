#include "lgal/poly.hpp"

#include <algorithm>

namespace lgal {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& f, const Integer& d) {
  std::vector<Integer> r(f.coeffs());
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(r));
}

}  // namespace

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  return RatPolynomial(std::move(r));
}

RatPolynomial scale_compose(const RatPolynomial& f, const Rational& a, const Rational& b) {
  // Horner in the composed variable: acc = acc * (a x + b) + c_j.
  const RatPolynomial lin{b, a};
  RatPolynomial acc;
  for (int j = f.degree(); j >= 0; --j)
    acc = acc * lin + RatPolynomial::constant(f.coeffs()[static_cast<std::size_t>(j)]);
  return acc;
}

RatPolynomial scale_compose(const IntPolynomial& f, const Rational& a, const Rational& b) {
  return scale_compose(to_rational(f), a, b);
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<Integer> r(f.coeffs());
  const auto dg = static_cast<std::size_t>(g.degree());
  const Integer& lc = g.leading();
  int steps = f.degree() - g.degree() + 1;
  int deg = f.degree();
  while (deg >= g.degree() && deg >= 0) {
    const Integer lead = r[static_cast<std::size_t>(deg)];
    const auto shift = static_cast<std::size_t>(deg) - dg;
    for (auto& c : r) c *= lc;
    for (std::size_t i = 0; i <= dg; ++i) r[shift + i] -= lead * g.coeffs()[i];
    --steps;
    --deg;
    while (deg >= 0 && r[static_cast<std::size_t>(deg)] == 0) --deg;
  }
  // Every skipped step still contributes a factor lc to keep the identity exact.
  if (steps > 0) {
    const Integer m = ipow(lc, static_cast<unsigned long>(steps));
    for (auto& c : r) c *= m;
  }
  return IntPolynomial(std::move(r));
}

// Subresultant algorithm (Collins/Brown), content removed up front.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
  if (f.degree() == 0) return ipow(f.leading(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return ipow(g.leading(), static_cast<unsigned long>(f.degree()));

  const Integer ca = content(f);
  const Integer cb = content(g);
  IntPolynomial a = divide_exact(f, ca);
  IntPolynomial b = divide_exact(g, cb);
  const Integer t =
      ipow(ca, static_cast<unsigned long>(g.degree())) * ipow(cb, static_cast<unsigned long>(f.degree()));

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }

  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    Integer divisor = gg * ipow(h, static_cast<unsigned long>(delta));
    b = divide_exact(r, divisor);
    gg = a.leading();
    // h <- h^(1 - delta) g^delta, an exact division when delta > 1.
    if (delta > 0) {
      Integer num = ipow(gg, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() <= 0) break;
  }
  // b is now a nonzero constant.
  const auto da = static_cast<unsigned long>(a.degree());
  Integer num = ipow(b.leading(), da);
  Integer den = ipow(h, da - 1);
  mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * h;
}

Integer discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant of constant polynomial");
  const long n = f.degree();
  Integer res = resultant(f, derivative(f));
  Integer d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if (((n * (n - 1)) / 2) % 2 != 0) d = -d;
  return d;
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace lgal
