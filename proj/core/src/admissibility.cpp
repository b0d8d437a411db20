#include "incidence/bounds/admissibility.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "incidence/errors.hpp"

namespace incidence {

BigInt ipow(const BigInt& a, unsigned long p) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), a.get_mpz_t(), p);
  return out;
}

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

Rational frac(long num, long den) {
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

}  // namespace

AdmissibilityReport check_q_conditions(int d, const std::map<int, std::uint64_t>& q,
                                       std::uint64_t n) {
  if (d < 3) throw InputError("q conditions need d >= 3");
  std::map<int, BigInt> qs;
  for (int j = 2; j <= d - 1; ++j) {
    const auto it = q.find(j);
    if (it == q.end()) throw InputError("missing q_" + std::to_string(j));
    qs[j] = big(it->second);
  }
  qs[d] = big(n);
  AdmissibilityReport out;
  for (int l = 3; l <= d; ++l) {
    const auto e = static_cast<unsigned long>(l * (l - 2));
    const BigInt rhs = ipow(qs[l - 1], e + 1);
    const BigInt ql = ipow(qs[l], e);
    for (int j = 2; j < l; ++j) {
      if (qs[j] * ql < rhs) {
        out.admissible = false;
        out.violations.push_back({j, l});
      }
    }
  }
  return out;
}

bool verify_exponent_inequality(int d, int k, int j, std::uint64_t q_dm1, std::uint64_t q_j,
                                std::uint64_t n) {
  if (d < 4) throw InputError("exponent inequality needs d >= 4");
  if (j < 2 || j > d - 1) throw InputError("j must lie in [2, d-1]");
  if (k < 2) throw InputError("k must be at least 2");
  const long jk = static_cast<long>(j) * k - j + 1;
  const Rational a = frac(static_cast<long>(d - 1) * (j - 1) * (k - 1), (d - 2) * jk);
  const Rational b = frac(static_cast<long>(d - j - 1) * (k - 1), (d - 2) * jk);
  const Rational c = frac(static_cast<long>(d) * (j - 1) * (k - 1), (d - 1) * jk);
  const Rational e = frac(static_cast<long>(d - j) * (k - 1), (d - 1) * jk);
  BigInt lcm = 1;
  for (const Rational* x : {&a, &b, &c, &e}) {
    BigInt den = x->get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  auto scaled = [&](const Rational& x) {
    const BigInt v = x.get_num() * (lcm / x.get_den());
    return v.get_ui();
  };
  const BigInt lhs = ipow(big(q_dm1), scaled(a)) * ipow(big(q_j), scaled(b));
  const BigInt rhs = ipow(big(n), scaled(c)) * ipow(big(q_j), scaled(e));
  return lhs <= rhs;
}

bool holder_check(std::span<const double> counts, const Rational& alpha) {
  if (sgn(alpha) <= 0 || alpha >= 1) throw InputError("Hoelder exponent must lie in (0, 1)");
  if (counts.empty()) return true;
  const double a = alpha.get_d();
  double lhs = 0, sum = 0;
  for (double v : counts) {
    if (v < 0) throw InputError("Hoelder counts must be nonnegative");
    lhs += std::pow(v, a);
    sum += v;
  }
  const double rhs = std::pow(sum, a) * std::pow(static_cast<double>(counts.size()), 1 - a);
  return lhs <= rhs * (1 + kHolderTolerance);
}

std::vector<Rational> counter_holder_exponents(int d, int k) {
  if (d < 2 || k < 2) throw InputError("Hoelder exponents need d >= 2 and k >= 2");
  std::vector<Rational> out{frac(static_cast<long>(d) * k - d, static_cast<long>(d) * k - d + 1)};
  for (long j = 2; j <= d - 1; ++j)
    out.push_back(frac(d * (j - 1) * (k - 1), (d - 1) * (j * k - j + 1)));
  return out;
}

}  // namespace incidence
