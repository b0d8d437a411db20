#pragma once

#include <cstddef>

#include "incidence/geometry/curve.hpp"

namespace incidence {

/// Composition of `p` with the curve's parametrization, cleared of the
/// denominator: w(t)^deg(p) * p(num(t) / w(t)). Since w > 0 this has the
/// same real roots and signs as p o gamma; for polynomial curves it is
/// exactly p o gamma. Degree <= deg(p) * deg(gamma).
UvPolynomial restrict_to_curve(const MvPolynomial& p, const Curve& curve);
UvPolynomial restrict_to_parametrization(const MvPolynomial& p, const Parametrization& param);

/// Incidence predicate. Uses the implicit system when present, otherwise
/// solves gamma(t) = p exactly (gcd of the coordinate equations must have a
/// real root) and checks the point at infinity.
bool point_on_curve(const Point& p, const Curve& curve);
bool point_on_parametrization(const Point& p, const Parametrization& param);

/// Number of distinct real common points. At least one of the curves must
/// carry an implicit system and the other a parametrization. Throws
/// CommonComponent when the curves overlap.
std::size_t curve_pair_intersections(const Curve& a, const Curve& b);

/// True iff the curve lies in Z(g).
bool curve_in_variety(const Curve& curve, const MvPolynomial& g);

}  // namespace incidence
