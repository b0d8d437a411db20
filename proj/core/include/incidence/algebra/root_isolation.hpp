#pragma once

#include <vector>

#include "incidence/algebra/uv_polynomial.hpp"

namespace incidence {

/// A rational interval holding exactly one real root. `lo == hi` marks a
/// rational root found exactly; otherwise the root lies in the open
/// interval (lo, hi) and the square-free part changes sign across it.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
  bool multiplicity_free = true;        // input had no repeated roots
  UvPolynomial square_free;             // polynomial the intervals refer to

  std::size_t count() const { return intervals.size(); }
};

/// Upper bound on the number of roots of `p` in the open interval (lo, hi),
/// by Descartes' rule of signs after the Moebius map onto (0, inf).
/// Exact when the bound is 0 or 1.
int descartes_bound(const UvPolynomial& p, const Rational& lo, const Rational& hi);

/// Strict bound: every real root has absolute value < cauchy_bound(p).
Rational cauchy_bound(const UvPolynomial& p);

/// Isolates the distinct real roots by Descartes bisection on the
/// square-free part. Throws ZeroPolynomial for the zero polynomial: the
/// caller must treat the curve as lying inside the zero set.
RootIsolation isolate_real_roots(const UvPolynomial& q);

/// Halves an isolating interval once (or pins an exact root).
RootInterval refine_once(const UvPolynomial& square_free, const RootInterval& interval);

/// Refines until width <= max_width.
RootInterval refine(const UvPolynomial& square_free, RootInterval interval,
                    const Rational& max_width);

bool has_real_root(const UvPolynomial& q);

}  // namespace incidence
