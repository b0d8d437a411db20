#pragma once

#include <span>
#include <vector>

#include "incidence/algebra/rational.hpp"

namespace incidence {

/// A point of R^d with exact rational coordinates.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  std::span<const Rational> view() const { return coords; }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

}  // namespace incidence
