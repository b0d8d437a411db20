#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "incidence/algebra/mv_polynomial.hpp"

namespace incidence {

std::size_t binomial(std::size_t n, std::size_t k);

/// C(D + d, d) - 1: number of monomials of degree 1..D in d variables.
std::size_t lifted_dimension(std::size_t d, unsigned degree);

/// Least D with lifted_dimension(d, D) >= subsets (and D >= 1).
unsigned min_lift_degree(std::size_t d, std::size_t subsets);

/// Exponents of all monomials of degree 1..D, ordered by degree and then
/// lexicographically descending (x1^2, x1 x2, x2^2, ...).
std::vector<Exponent> veronese_exponents(std::size_t d, unsigned degree);

std::vector<Rational> veronese_lift(std::span<const Rational> x, unsigned degree);

}  // namespace incidence
