#include "incidence/partition/bisect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "incidence/algebra/veronese.hpp"
#include "incidence/detail/random.hpp"
#include "incidence/errors.hpp"

namespace incidence {

namespace {

using DVec = std::vector<double>;
using QVec = std::vector<Rational>;

// Affine change of coordinates x -> (x - center) / scale with dyadic
// center and power-of-two scale, so lifted coordinates stay O(1) in
// floating point while the exact values keep small denominators.
struct Normalizer {
  QVec center;
  QVec scale;

  Normalizer(std::span<const Point> points, std::span<const std::vector<std::size_t>> subsets,
             std::size_t d)
      : center(d), scale(d) {
    for (std::size_t i = 0; i < d; ++i) {
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& subset : subsets)
        for (auto id : subset) {
          const double x = points[id][i].get_d();
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
      const double half = std::max((hi - lo) / 2, 1e-300);
      int exponent = 0;
      std::frexp(half, &exponent);  // half < 2^exponent
      Rational s = 1;
      if (exponent >= 0) s = Rational(BigInt(1) << exponent);
      else s = Rational(BigInt(1), BigInt(1) << (-exponent));
      if (hi == lo) s = 1;
      const double mid = (lo + hi) / 2;
      // center on the grid of multiples of scale / 16
      const Rational step = s / 16;
      Rational c = Rational(static_cast<long>(std::llround(mid / step.get_d()))) * step;
      if (!std::isfinite(mid) || std::fabs(mid / step.get_d()) > 1e15) c = Rational(mid);
      center[i] = c;
      scale[i] = s;
    }
  }

  QVec apply(const Point& p) const {
    QVec out(p.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (p[i] - center[i]) / scale[i];
    return out;
  }

  /// Polynomial in the original coordinates equal to sum_a w_a y^a with
  /// y = (x - center) / scale.
  MvPolynomial to_polynomial(const QVec& weights, const std::vector<Exponent>& exponents) const {
    const std::size_t d = center.size();
    std::vector<std::vector<MvPolynomial>> powers(d);
    for (std::size_t i = 0; i < d; ++i) {
      powers[i].push_back(MvPolynomial::constant(d, 1));
      powers[i].push_back((MvPolynomial::variable(d, i) - MvPolynomial::constant(d, center[i])) *
                          Rational(1 / scale[i]));
    }
    MvPolynomial g = MvPolynomial::constant(d, weights[0]);
    for (std::size_t a = 0; a < exponents.size(); ++a) {
      if (weights[a + 1] == 0) continue;
      MvPolynomial term = MvPolynomial::constant(d, weights[a + 1]);
      for (std::size_t i = 0; i < d; ++i) {
        const auto e = exponents[a][i];
        if (e == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
        term = term * pw[e];
      }
      g += term;
    }
    return g;
  }
};

// Solves M y = b in place by Gaussian elimination with partial pivoting;
// near-singular pivots are regularized.
DVec solve_dense(std::vector<DVec> m, DVec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    if (std::fabs(m[col][col]) < 1e-14) m[col][col] = 1e-14;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  DVec y(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * y[c];
    y[i] = acc / m[i][i];
  }
  return y;
}

// Exact least-norm correction: returns w - A^T y where (A A^T) y = A w.
// Dependent rows are dropped (the system is always consistent).
QVec project_exact(const QVec& w, const std::vector<QVec>& rows) {
  const std::size_t s = rows.size();
  const std::size_t n = w.size();
  std::vector<QVec> m(s, QVec(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += rows[i][k] * rows[j][k];
      m[i][j] = acc;
    }
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += rows[i][k] * w[k];
    m[i][s] = acc;
  }
  std::vector<std::size_t> pivot_col(s, s);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < s && rank < s; ++col) {
    std::size_t piv = rank;
    while (piv < s && m[piv][col] == 0) ++piv;
    if (piv == s) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c <= s; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  QVec y(s, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) y[pivot_col[r]] = m[r][s] / m[r][pivot_col[r]];
  QVec out = w;
  for (std::size_t i = 0; i < s; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] -= y[i] * rows[i][k];
  }
  return out;
}

Rational to_dyadic(double x) {
  // 2^-40 resolution keeps exact arithmetic cheap
  const double scaled = std::nearbyint(std::ldexp(x, 40));
  return Rational(BigInt(scaled), BigInt(1) << 40);
}

struct LiftedSet {
  std::vector<QVec> exact;   // [1, lift(p)]
  std::vector<DVec> approx;
};

}  // namespace

std::size_t side_limit(std::size_t size, const Rational& delta) {
  const Rational bound = (Rational(1, 2) + delta) * static_cast<long>(size);
  return static_cast<std::size_t>(BigInt(bound.get_num() / bound.get_den()).get_ui());
}

BisectResult bisect_step(std::span<const Point> points,
                         std::span<const std::vector<std::size_t>> subsets, std::size_t dimension,
                         const BisectOptions& options) {
  return bisect_step_with_degree(points, subsets, dimension,
                                 min_lift_degree(dimension, subsets.size()), options);
}

BisectResult bisect_step_with_degree(std::span<const Point> points,
                                     std::span<const std::vector<std::size_t>> subsets,
                                     std::size_t dimension, unsigned lift_degree,
                                     const BisectOptions& options) {
  if (subsets.empty()) throw InputError("bisect_step needs at least one subset");
  for (const auto& subset : subsets) {
    if (subset.empty()) throw InputError("bisect_step subsets must be nonempty");
    for (auto id : subset)
      if (id >= points.size() || points[id].dimension() != dimension)
        throw InputError("bisect_step: bad point id or dimension");
  }
  const std::size_t lifted = lifted_dimension(dimension, lift_degree);
  if (lifted < subsets.size())
    throw InputError("lift degree too small for the number of subsets");

  const auto exponents = veronese_exponents(dimension, lift_degree);
  const Normalizer norm(points, subsets, dimension);
  const std::size_t width = lifted + 1;

  std::vector<LiftedSet> sets(subsets.size());
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (auto id : subsets[j]) {
      const QVec y = norm.apply(points[id]);
      QVec row{Rational(1)};
      auto lift = veronese_lift(y, lift_degree);
      row.insert(row.end(), lift.begin(), lift.end());
      DVec approx(width);
      for (std::size_t k = 0; k < width; ++k) approx[k] = row[k].get_d();
      sets[j].exact.push_back(std::move(row));
      sets[j].approx.push_back(std::move(approx));
    }
  }
  std::vector<std::size_t> limits;
  for (const auto& subset : subsets) limits.push_back(side_limit(subset.size(), options.delta));

  detail::Rng rng(options.seed ^ (0x9E3779B97F4A7C15ull * (subsets.size() + 1)));
  DVec weight(width, 1.0);
  weight[0] = 1e-2;  // moving the offset is cheap, rotating is not

  auto dot = [](const DVec& a, const DVec& b) {
    double acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
  };

  for (int attempt = 1; attempt <= options.attempts; ++attempt) {
    DVec w(width);
    for (std::size_t k = 1; k < width; ++k) w[k] = detail::uniform_symmetric(rng);

    for (int iter = 0; iter < options.iterations; ++iter) {
      // median constraints under the current hyperplane
      std::vector<DVec> rows_d;
      std::vector<QVec> rows_q;
      for (const auto& set : sets) {
        const std::size_t n = set.approx.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = dot(w, set.approx[i]);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        if (n % 2 == 1) {
          const auto q = order[(n - 1) / 2];
          rows_d.push_back(set.approx[q]);
          rows_q.push_back(set.exact[q]);
        } else {
          const auto a = order[n / 2 - 1];
          const auto b = order[n / 2];
          DVec rd(width);
          QVec rq(width);
          for (std::size_t k = 0; k < width; ++k) {
            rd[k] = (set.approx[a][k] + set.approx[b][k]) / 2;
            rq[k] = (set.exact[a][k] + set.exact[b][k]) / 2;
          }
          rows_d.push_back(std::move(rd));
          rows_q.push_back(std::move(rq));
        }
      }

      // weighted least-norm move onto {w : rows . w = 0}
      const std::size_t s = rows_d.size();
      std::vector<DVec> gram(s, DVec(s));
      DVec rhs(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          double acc = 0;
          for (std::size_t k = 0; k < width; ++k) acc += rows_d[i][k] * rows_d[j][k] / weight[k];
          gram[i][j] = acc;
        }
        rhs[i] = dot(rows_d[i], w);
      }
      const DVec y = solve_dense(gram, rhs);
      for (std::size_t k = 0; k < width; ++k) {
        double acc = 0;
        for (std::size_t i = 0; i < s; ++i) acc += y[i] * rows_d[i][k];
        w[k] -= acc / weight[k];
      }
      double norm2 = 0;
      for (std::size_t k = 1; k < width; ++k) norm2 += w[k] * w[k];
      if (!(norm2 > 1e-24) || !std::isfinite(norm2)) break;
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& x : w) x *= inv;

      // cheap floating screen before the exact check
      bool plausible = true;
      for (std::size_t j = 0; j < sets.size() && plausible; ++j) {
        std::size_t pos = 0, neg = 0;
        for (const auto& p : sets[j].approx) {
          const double v = dot(w, p);
          if (v > 1e-12) ++pos;
          else if (v < -1e-12) ++neg;
        }
        plausible = pos <= limits[j] && neg <= limits[j];
      }
      if (!plausible) continue;

      QVec wq(width);
      for (std::size_t k = 0; k < width; ++k) wq[k] = to_dyadic(w[k]);
      wq = project_exact(wq, rows_q);
      if (std::all_of(wq.begin() + 1, wq.end(), [](const Rational& c) { return c == 0; })) continue;

      BisectResult result;
      bool balanced = true;
      for (std::size_t j = 0; j < sets.size() && balanced; ++j) {
        SideCounts counts;
        for (const auto& p : sets[j].exact) {
          Rational v = 0;
          for (std::size_t k = 0; k < width; ++k)
            if (wq[k] != 0 && p[k] != 0) v += wq[k] * p[k];
          const int sg = sgn(v);
          if (sg > 0) ++counts.positive;
          else if (sg < 0) ++counts.negative;
          else ++counts.zero;
        }
        balanced = counts.positive <= limits[j] && counts.negative <= limits[j];
        result.counts.push_back(counts);
      }
      if (!balanced) continue;
      result.polynomial = norm.to_polynomial(wq, exponents);
      result.lift_degree = lift_degree;
      result.attempts_used = attempt;
      return result;
    }
  }
  throw PartitionFailure("bisection did not certify delta-balance for " +
                         std::to_string(subsets.size()) + " subsets within " +
                         std::to_string(options.attempts) + " attempts");
}

}  // namespace incidence
