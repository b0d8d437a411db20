#pragma once

#include <string>
#include <string_view>

#include "incidence/algebra/mv_polynomial.hpp"
#include "incidence/algebra/uv_polynomial.hpp"

namespace incidence {

// Text format: terms joined by " + ", each term `c * x1^a1 x2^a2 ...`
// with the coefficient as `p/q` (or `p` when integral). Variables with a
// zero exponent are omitted; a constant term is just `c`; the zero
// polynomial is `0`. The parser also accepts `x1` for `x1^1`, repeated
// variables, a missing coefficient (`x1^2` means `1 * x1^2`), and binary
// minus (`x1 - 2 x2`).

std::string format_polynomial(const MvPolynomial& p);
MvPolynomial parse_polynomial(std::string_view text, std::size_t dimension);

/// Univariate polynomials use the variable `x1`.
std::string format_polynomial(const UvPolynomial& p);
UvPolynomial parse_univariate(std::string_view text);

UvPolynomial to_univariate(const MvPolynomial& p);
MvPolynomial to_multivariate(const UvPolynomial& p);

}  // namespace incidence
