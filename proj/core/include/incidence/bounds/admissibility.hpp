#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "incidence/algebra/rational.hpp"
#include "incidence/bounds/evaluators.hpp"

namespace incidence {

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<QViolation> violations;  // every (j, l) with the inequality false
};

/// q_j >= (q_{l-1} / q_l)^(l(l-2)) q_{l-1} for all 2 <= j < l <= d, with
/// q_d = n. Evaluated as q_j q_l^(l(l-2)) >= q_{l-1}^(l(l-2)+1) in exact
/// integers. Throws InputError when some q_j (2 <= j <= d-1) is missing.
AdmissibilityReport check_q_conditions(int d, const std::map<int, std::uint64_t>& q,
                                       std::uint64_t n);

/// q_{d-1}^a q_j^b <= n^c q_j^e with
///   a = (d-1)(j-1)(k-1) / ((d-2)(jk-j+1)),  b = (d-j-1)(k-1) / ((d-2)(jk-j+1)),
///   c = d(j-1)(k-1) / ((d-1)(jk-j+1)),      e = (d-j)(k-1) / ((d-1)(jk-j+1)),
/// decided exactly after clearing the exponent denominators.
/// Requires d >= 4 and 2 <= j <= d-1.
bool verify_exponent_inequality(int d, int k, int j, std::uint64_t q_dm1, std::uint64_t q_j,
                                std::uint64_t n);

inline constexpr double kHolderTolerance = 1e-12;

/// sum n_i^alpha <= (sum n_i)^alpha * u^(1-alpha), u = counts.size(),
/// within relative tolerance kHolderTolerance.
bool holder_check(std::span<const double> counts, const Rational& alpha);

/// Hoelder exponents applied to the per-cell curve counts at dimension d:
/// (dk-d)/(dk-d+1) and d(j-1)(k-1)/((d-1)(jk-j+1)) for 2 <= j <= d-1.
/// For d = 3 these are (3k-3)/(3k-2) and (3k-3)/(4k-2).
std::vector<Rational> counter_holder_exponents(int d, int k);

/// a^p as an exact integer.
BigInt ipow(const BigInt& a, unsigned long p);

}  // namespace incidence
