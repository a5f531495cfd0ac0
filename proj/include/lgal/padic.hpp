#pragma once

// p-adic valuations and Newton polygons.

#include "lgal/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace lgal {

/// nu_p(x); nu_p(0) is a distinct infinity, never a sentinel integer.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long e) { return Valuation(e); }

  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::bad_optional_access when infinite.
  [[nodiscard]] long value() const { return value_.value(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }
  friend bool operator==(const Valuation& a, long e) { return !a.is_infinite() && a.value() == e; }
  friend bool operator>=(const Valuation& a, long e) { return a.is_infinite() || a.value() >= e; }

 private:
  Valuation() = default;
  explicit Valuation(long e) : value_(e) {}
  std::optional<long> value_;
};

/// Throws std::invalid_argument when p is not prime.
Valuation valuation(std::uint64_t p, const Integer& x);
/// nu_p(num) - nu_p(den) of the reduced fraction.
Valuation valuation(std::uint64_t p, const Rational& x);

struct LatticePoint {
  long x;
  long y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonEdge {
  Rational slope;
  long length;  // horizontal
  friend bool operator==(const NewtonEdge&, const NewtonEdge&) = default;
};

/// Lower convex hull of {(j, nu_p(a_j)) : a_j != 0}.
class NewtonPolygon {
 public:
  NewtonPolygon(std::uint64_t p, std::vector<LatticePoint> vertices);

  [[nodiscard]] std::uint64_t prime() const { return p_; }
  [[nodiscard]] const std::vector<LatticePoint>& vertices() const { return vertices_; }
  [[nodiscard]] std::vector<NewtonEdge> edges() const;
  /// Sum of horizontal edge lengths.
  [[nodiscard]] long width() const;

 private:
  std::uint64_t p_;
  std::vector<LatticePoint> vertices_;
};

/// Throws std::domain_error on the zero polynomial.
NewtonPolygon newton_polygon(std::uint64_t p, const IntPolynomial& f);

}  // namespace lgal
