#pragma once

// Independent reference computations used by the tests. None of these call
// into the code paths they check.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "incidence/algebra/rational.hpp"
#include "incidence/algebra/uv_polynomial.hpp"
#include "incidence/geometry/point.hpp"

namespace oracle {

/// Sign changes of q over a uniform grid of spacing `width` on [lo, hi],
/// evaluated in double precision. Exact zeros on grid points count once.
inline int count_roots_by_scanning(const incidence::UvPolynomial& q, double lo, double hi,
                                   double width) {
  std::vector<double> c;
  for (const auto& v : q.coefficients()) c.push_back(v.get_d());
  auto eval = [&](double x) {
    double acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  int roots = 0;
  int last = 0;
  const auto steps = static_cast<std::int64_t>(std::llround((hi - lo) / width));
  for (std::int64_t i = 0; i <= steps; ++i) {
    const double v = eval(lo + static_cast<double>(i) * width);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) {
      ++roots;
      last = 0;
      continue;
    }
    if (last != 0 && s != last) ++roots;
    last = s;
  }
  return roots;
}

/// Small exact fraction on 64-bit integers, kept reduced.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  bool matches(const incidence::Rational& r) const {
    return r == incidence::Rational(incidence::BigInt(static_cast<long>(num)),
                                    incidence::BigInt(static_cast<long>(den)));
  }
};

/// Number of Elekes lines y = a x + b (a in 1..N, b in 1..N^2) through (x, y).
inline int elekes_point_degree(int n, std::int64_t x, std::int64_t y) {
  int count = 0;
  for (std::int64_t a = 1; a <= n; ++a) {
    const std::int64_t b = y - a * x;
    if (b >= 1 && b <= static_cast<std::int64_t>(n) * n) ++count;
  }
  return count;
}

inline incidence::Rational rat(long num, long den = 1) {
  incidence::Rational r{incidence::BigInt(num), incidence::BigInt(den)};
  r.canonicalize();
  return r;
}

inline incidence::Point point(std::initializer_list<long> coords) {
  incidence::Point p;
  for (long c : coords) p.coords.push_back(rat(c));
  return p;
}

/// Uniform random points with integer coordinates in [-bound, bound].
inline std::vector<incidence::Point> random_points(std::uint64_t seed, std::size_t m, std::size_t d,
                                                   long bound) {
  std::mt19937_64 rng(seed);
  std::vector<incidence::Point> out;
  for (std::size_t i = 0; i < m; ++i) {
    incidence::Point p;
    for (std::size_t c = 0; c < d; ++c)
      p.coords.push_back(rat(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace oracle
