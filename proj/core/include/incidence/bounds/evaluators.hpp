#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incidence/algebra/rational.hpp"

namespace incidence {

/// One named summand c * m^exp_m * n^exp_n * q_j^exp_q * r^exp_r of a bound
/// (c = 1; constants are not part of the skeleton).
struct BoundTerm {
  std::string name;
  Rational exp_m{0};
  Rational exp_n{0};
  Rational exp_q{0};
  int q_index = 0;  // j of q_j, 0 when the term has no q factor
  Rational exp_r{0};
  bool linear = false;          // the trailing m or n terms
  std::string symbolic_factor;  // reported, never evaluated
  double value = 0;
};

struct QViolation {
  int j = 0;
  int l = 0;
};

struct BoundResult {
  std::string evaluator;
  std::vector<BoundTerm> terms;
  double total = 0;
  std::string dominant_term;
  bool admissible = true;
  std::vector<QViolation> violations;
  std::vector<std::string> warnings;

  const BoundTerm& term(std::string_view name) const;
};

struct BoundSpec {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  int d = 3;
  int k = 2;
  Rational eps{0};
  std::map<int, std::uint64_t> q;  // j -> q_j for 2 <= j <= d-1
  int surface_degree_threshold = 2;
};

enum class Evaluator { pach_sharir, main3d, maind, gk3d, ss4d, socg14, kst, rich };

std::string_view to_string(Evaluator e);
/// Accepts the names printed by to_string; throws InputError otherwise.
Evaluator parse_evaluator(std::string_view name);

BoundResult eval_pach_sharir(std::uint64_t m, std::uint64_t n, int k);
BoundResult eval_main3d(std::uint64_t m, std::uint64_t n, int k, std::uint64_t q2,
                        const Rational& eps);
BoundResult eval_maind(const BoundSpec& spec);
BoundResult eval_gk3d(std::uint64_t m, std::uint64_t n, std::uint64_t q2);
/// Point-line bound in R^4. Numeric total uses the form without the
/// 2^(c sqrt(log m)) factor; that factor is attached symbolically to the
/// leading and m terms unless m <= n^(6/7) or m >= n^(5/3).
BoundResult eval_ss4d(std::uint64_t m, std::uint64_t n, std::uint64_t q2, std::uint64_t q3);
BoundResult eval_socg14(std::uint64_t m, std::uint64_t n, std::uint64_t q, std::uint64_t s,
                        const Rational& eps);
BoundResult eval_kst(std::uint64_t m, std::uint64_t n, int k);
/// Rich-point count in R^3; the r exponents are negative.
BoundResult eval_rich(std::uint64_t n, int k, std::uint64_t q2, std::uint64_t r,
                      const Rational& eps);

/// Dispatches on `e` with the BoundSpec fields (q_2 for q, q_3 for ss4d,
/// q_2 as the 2-plane cap s for socg14, m as the richness r for rich).
BoundResult evaluate(Evaluator e, const BoundSpec& spec);

/// Value of one term at (m, n, q, r).
double term_value(const BoundTerm& term, double m, double n, double q, double r = 1);

}  // namespace incidence
