#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace incidence {

/// Exact rational scalar. GMP keeps the fraction canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `p/q`, `p`, or a plain decimal such as `0.05`.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace incidence
