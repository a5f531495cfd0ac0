#include "lgal/padic.hpp"

#include "lgal/primes.hpp"

#include <stdexcept>
#include <string>

namespace lgal {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("valuation base " + std::to_string(p) + " is not prime");
}

long remove_factor(std::uint64_t p, const Integer& x) {
  Integer rest;
  Integer base = static_cast<unsigned long>(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below segment ac.
Integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return Integer(b.x - a.x) * (c.y - a.y) - Integer(b.y - a.y) * (c.x - a.x);
}

}  // namespace

Valuation valuation(std::uint64_t p, const Integer& x) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(remove_factor(p, x));
}

Valuation valuation(std::uint64_t p, const Rational& x) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(remove_factor(p, x.get_num()) - remove_factor(p, x.get_den()));
}

NewtonPolygon::NewtonPolygon(std::uint64_t p, std::vector<LatticePoint> vertices)
    : p_(p), vertices_(std::move(vertices)) {}

std::vector<NewtonEdge> NewtonPolygon::edges() const {
  std::vector<NewtonEdge> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const long dx = vertices_[i].x - vertices_[i - 1].x;
    Rational slope(vertices_[i].y - vertices_[i - 1].y, dx);
    slope.canonicalize();
    out.push_back({slope, dx});
  }
  return out;
}

long NewtonPolygon::width() const {
  if (vertices_.empty()) return 0;
  return vertices_.back().x - vertices_.front().x;
}

NewtonPolygon newton_polygon(std::uint64_t p, const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("Newton polygon of zero polynomial");
  require_prime(p);
  std::vector<LatticePoint> hull;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (f.coeffs()[j] == 0) continue;
    const LatticePoint pt{static_cast<long>(j), remove_factor(p, f.coeffs()[j])};
    // Monotone chain, lower hull; collinear middle points are dropped.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  return NewtonPolygon(p, std::move(hull));
}

}  // namespace lgal
