#pragma once

// Dense univariate polynomials over Z and Q backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial, index j holds the coefficient of x^j.
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores nothing and reports degree -1.
template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t power) {
    std::vector<T> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
  }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<T>& coeffs() const { return coeffs_; }

  /// Coefficient of x^j; zero beyond the degree.
  [[nodiscard]] T coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : T(0); }

  [[nodiscard]] const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <typename U>
  [[nodiscard]] U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> r(a.coeffs_);
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int j = p.degree(); j >= 0; --j) {
      const T& c = p.coeffs_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      T mag = c < 0 ? T(-c) : c;
      if (mag != 1 || j == 0) os << mag;
      if (j >= 1) os << "x";
      if (j >= 2) os << "^" << j;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <typename T>
Polynomial<T> derivative(const Polynomial<T>& f) {
  if (f.degree() < 1) return {};
  std::vector<T> r(static_cast<std::size_t>(f.degree()));
  for (std::size_t j = 1; j < f.coeffs().size(); ++j) r[j - 1] = T(static_cast<unsigned long>(j)) * f.coeffs()[j];
  return Polynomial<T>(std::move(r));
}

RatPolynomial to_rational(const IntPolynomial& f);

/// f(a*x + b), expanded exactly.
RatPolynomial scale_compose(const RatPolynomial& f, const Rational& a, const Rational& b);
RatPolynomial scale_compose(const IntPolynomial& f, const Rational& a, const Rational& b);

/// Resultant with the convention Res(f, g) = lc(f)^deg(g) * prod_{f(r)=0} g(r),
/// so Res(x - 2, x - 3) = -1. Computed by the subresultant PRS, exact over Z.
/// Throws std::domain_error if either argument is zero.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws on constant input.
Integer discriminant(const IntPolynomial& f);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + r.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// gcd of the coefficients, nonnegative.
Integer content(const IntPolynomial& f);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace lgal
