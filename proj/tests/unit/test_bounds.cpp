#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "incidence/bounds/admissibility.hpp"
#include "incidence/bounds/evaluators.hpp"
#include "incidence/bounds/fit.hpp"
#include "incidence/errors.hpp"
#include "oracles.hpp"

using namespace incidence;
using oracle::Frac;
using oracle::rat;

namespace {

// Exponents of the general bound computed with 64-bit fractions.
Frac lead_m(int d, int k) { return {k, d * k - d + 1}; }
Frac lead_n(int d, int k) { return {d * k - d, d * k - d + 1}; }
Frac j_m(int k, int j) { return {k, j * k - j + 1}; }
Frac j_n(int d, int k, int j) {
  return {static_cast<std::int64_t>(d) * (j - 1) * (k - 1), static_cast<std::int64_t>(d - 1) * (j * k - j + 1)};
}
Frac j_q(int d, int k, int j) {
  return {static_cast<std::int64_t>(d - j) * (k - 1), static_cast<std::int64_t>(d - 1) * (j * k - j + 1)};
}

// Eq-(2)-style check by floating logs, used only far from the boundary.
bool q_ok_by_logs(int d, const std::map<int, std::uint64_t>& q, std::uint64_t n) {
  auto at = [&](int j) { return std::log(static_cast<double>(j == d ? n : q.at(j))); };
  for (int l = 3; l <= d; ++l)
    for (int j = 2; j < l; ++j) {
      const double e = l * (l - 2);
      if (at(j) < e * (at(l - 1) - at(l)) + at(l - 1) - 1e-9) return false;
    }
  return true;
}

}  // namespace

TEST(PachSharir, Exponents) {
  auto r2 = eval_pach_sharir(100, 100, 2);
  EXPECT_EQ(r2.term("leading").exp_m, rat(2, 3));
  EXPECT_EQ(r2.term("leading").exp_n, rat(2, 3));
  auto r3 = eval_pach_sharir(100, 100, 3);
  EXPECT_EQ(r3.term("leading").exp_m, rat(3, 5));
  EXPECT_EQ(r3.term("leading").exp_n, rat(4, 5));
  auto zero = eval_pach_sharir(0, 7, 2);
  EXPECT_DOUBLE_EQ(zero.total, 7.0);
  EXPECT_EQ(r2.terms.size(), 3u);
}

TEST(Main3d, Anchors) {
  auto k2 = eval_main3d(10, 10, 2, 5, 0);
  EXPECT_EQ(k2.term("leading").exp_m, rat(1, 2));
  EXPECT_EQ(k2.term("leading").exp_n, rat(3, 4));
  EXPECT_EQ(k2.term("j=2").exp_m, rat(2, 3));
  EXPECT_EQ(k2.term("j=2").exp_n, rat(1, 2));
  EXPECT_EQ(k2.term("j=2").exp_q, rat(1, 6));
  auto k3 = eval_main3d(10, 10, 3, 5, 0);
  EXPECT_EQ(k3.term("leading").exp_m, rat(3, 7));
  EXPECT_EQ(k3.term("leading").exp_n, rat(6, 7));
  EXPECT_EQ(k3.term("j=2").exp_m, rat(3, 5));
  EXPECT_EQ(k3.term("j=2").exp_n, rat(3, 5));
  EXPECT_EQ(k3.term("j=2").exp_q, rat(1, 5));
  auto ones = eval_main3d(1, 1, 2, 1, 0);
  for (const auto& t : ones.terms) EXPECT_DOUBLE_EQ(t.value, 1.0) << t.name;
  auto eps = eval_main3d(10, 10, 2, 5, rat(1, 100));
  EXPECT_EQ(eps.term("leading").exp_m, rat(51, 100));
  EXPECT_FALSE(eval_main3d(10, 10, 2, 11, 0).warnings.empty());
}

TEST(MainD, FourDimensionalAnchorAndOracleExponents) {
  BoundSpec s{100, 100, 4, 2, 0, {{2, 10}, {3, 20}}, 2};
  auto r = eval_maind(s);
  EXPECT_EQ(r.term("leading").exp_m, rat(2, 5));
  EXPECT_EQ(r.term("leading").exp_n, rat(4, 5));
  EXPECT_EQ(r.term("j=3").exp_m, rat(1, 2));
  EXPECT_EQ(r.term("j=3").exp_n, rat(2, 3));
  EXPECT_EQ(r.term("j=3").exp_q, rat(1, 12));
  EXPECT_EQ(r.term("j=2").exp_m, rat(2, 3));
  EXPECT_EQ(r.term("j=2").exp_n, rat(4, 9));
  EXPECT_EQ(r.term("j=2").exp_q, rat(2, 9));
  for (int d = 3; d <= 7; ++d)
    for (int k = 2; k <= 5; ++k) {
      BoundSpec g{50, 60, d, k, 0, {}, 2};
      for (int j = 2; j < d; ++j) g.q[j] = 60;
      auto res = eval_maind(g);
      EXPECT_TRUE(lead_m(d, k).matches(res.term("leading").exp_m));
      EXPECT_TRUE(lead_n(d, k).matches(res.term("leading").exp_n));
      for (int j = 2; j < d; ++j) {
        const auto& t = res.term("j=" + std::to_string(j));
        EXPECT_TRUE(j_m(k, j).matches(t.exp_m));
        EXPECT_TRUE(j_n(d, k, j).matches(t.exp_n));
        EXPECT_TRUE(j_q(d, k, j).matches(t.exp_q));
        // With q_j = n the q- and n-exponents sum to (k-1)(dj-j)/((d-1)(jk-j+1)).
        const Frac sum{static_cast<std::int64_t>(k - 1) * (d * j - j),
                       static_cast<std::int64_t>(d - 1) * (j * k - j + 1)};
        EXPECT_TRUE((j_n(d, k, j) + j_q(d, k, j)) == sum);
        EXPECT_TRUE(sum.matches(Rational(t.exp_n + t.exp_q)));
      }
    }
}

TEST(MainD, ThreeDimensionsMatchesMain3d) {
  for (int k = 2; k <= 6; ++k) {
    BoundSpec s{300, 200, 3, k, rat(1, 50), {{2, 30}}, 2};
    auto a = eval_maind(s);
    auto b = eval_main3d(300, 200, k, 30, rat(1, 50));
    for (const char* name : {"leading", "j=2", "m", "n"}) {
      EXPECT_EQ(a.term(name).exp_m, b.term(name).exp_m);
      EXPECT_EQ(a.term(name).exp_n, b.term(name).exp_n);
      EXPECT_EQ(a.term(name).exp_q, b.term(name).exp_q);
      EXPECT_DOUBLE_EQ(a.term(name).value, b.term(name).value);
    }
  }
}

TEST(MainD, PlanarCaseIsPachSharir) {
  for (int k = 2; k <= 5; ++k) {
    BoundSpec s{40, 40, 2, k, 0, {}, 2};
    auto a = eval_maind(s);
    auto b = eval_pach_sharir(40, 40, k);
    EXPECT_EQ(a.term("leading").exp_m, b.term("leading").exp_m);
    EXPECT_EQ(a.term("leading").exp_n, b.term("leading").exp_n);
    EXPECT_EQ(a.terms.size(), 3u);
  }
}

TEST(MainD, InadmissibleInputIsFlaggedButEvaluated) {
  BoundSpec s{100, 100, 4, 2, 0, {{2, 50}, {3, 10}}, 2};
  auto r = eval_maind(s);
  EXPECT_FALSE(r.admissible);
  EXPECT_FALSE(r.violations.empty());
  EXPECT_GT(r.total, 0);
}

TEST(OtherEvaluators, ExponentSets) {
  auto gk = eval_gk3d(10, 10, 3);
  EXPECT_EQ(gk.term("leading").exp_m, rat(1, 2));
  EXPECT_EQ(gk.term("leading").exp_n, rat(3, 4));
  EXPECT_EQ(gk.term("j=2").exp_m, rat(2, 3));
  EXPECT_EQ(gk.term("j=2").exp_n, rat(1, 3));
  EXPECT_EQ(gk.term("j=2").exp_q, rat(1, 3));
  auto kst = eval_kst(10, 16, 2);
  EXPECT_EQ(kst.term("leading").exp_m, rat(1));
  EXPECT_EQ(kst.term("leading").exp_n, rat(1, 2));
  EXPECT_DOUBLE_EQ(kst.total, 10 * 4 + 16);
  auto rich = eval_rich(100, 2, 10, 4, 0);
  EXPECT_EQ(rich.term("leading").exp_n, rat(3, 2));
  EXPECT_EQ(rich.term("leading").exp_r, rat(-2));
  EXPECT_EQ(rich.term("j=2").exp_r, rat(-3));
  auto ss = eval_ss4d(100, 1000, 10, 20);
  EXPECT_EQ(ss.term("leading").exp_m, rat(2, 5));
  EXPECT_EQ(ss.term("leading").exp_n, rat(4, 5));
  auto socg = eval_socg14(100, 100, 20, 10, 0);
  EXPECT_EQ(socg.term("j=2").exp_m, rat(2, 3));
  EXPECT_EQ(socg.term("j=2").exp_n, rat(4, 9));
  EXPECT_EQ(socg.term("j=2").exp_q, rat(2, 9));
}

TEST(Ss4d, SymbolicFactorOnlyInMiddleRange) {
  // n = 1000: n^(6/7) ~ 372, n^(5/3) = 100000.
  EXPECT_FALSE(eval_ss4d(1000, 1000, 10, 20).term("leading").symbolic_factor.empty());
  EXPECT_TRUE(eval_ss4d(100, 1000, 10, 20).term("leading").symbolic_factor.empty());
  EXPECT_TRUE(eval_ss4d(100000, 1000, 10, 20).term("leading").symbolic_factor.empty());
}

TEST(Evaluators, MonotoneInEachArgument) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = rng() % 1000 + 1, n = rng() % 1000 + 2;
    const std::uint64_t q2 = rng() % n + 1;
    for (Evaluator e : {Evaluator::pach_sharir, Evaluator::main3d, Evaluator::gk3d, Evaluator::kst,
                        Evaluator::maind}) {
      BoundSpec s{m, n, 3, 2, rat(1, 100), {{2, q2}}, 2};
      const double base = evaluate(e, s).total;
      BoundSpec sm = s, sn = s, sq = s;
      sm.m += 1;
      sn.n += 1;
      if (sq.q[2] < n) sq.q[2] += 1;
      EXPECT_GE(evaluate(e, sm).total, base);
      EXPECT_GE(evaluate(e, sn).total, base);
      EXPECT_GE(evaluate(e, sq).total, base);
    }
  }
}

TEST(QConditions, ThreeDimensionsIsQ2AtMostN) {
  for (std::uint64_t q2 = 1; q2 <= 40; ++q2) {
    const auto rep = check_q_conditions(3, {{2, q2}}, 20);
    EXPECT_EQ(rep.admissible, q2 <= 20) << q2;
  }
}

TEST(QConditions, FourDimensionsClosedForm) {
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::uint64_t q2 = 1; q2 <= 12; ++q2)
      for (std::uint64_t q3 = 1; q3 <= 12; ++q3) {
        const bool expected =
            q2 <= q3 && q3 <= n &&
            BigInt(q3) * q3 * q3 * q3 * q3 * q3 * q3 * q3 * q3 <= ipow(BigInt(n), 8) * q2;
        EXPECT_EQ(check_q_conditions(4, {{2, q2}, {3, q3}}, n).admissible, expected)
            << q2 << " " << q3 << " " << n;
      }
}

TEST(QConditions, EqualValuesAndScaling) {
  for (int d = 3; d <= 6; ++d) {
    std::map<int, std::uint64_t> q;
    for (int j = 2; j < d; ++j) q[j] = 9;
    EXPECT_TRUE(check_q_conditions(d, q, 9).admissible);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    std::map<int, std::uint64_t> q{{2, rng() % 20 + 1}, {3, rng() % 20 + 1}};
    const std::uint64_t n = rng() % 20 + 1;
    const bool base = check_q_conditions(4, q, n).admissible;
    for (std::uint64_t c : {2u, 3u, 7u}) {
      std::map<int, std::uint64_t> qs{{2, q[2] * c}, {3, q[3] * c}};
      EXPECT_EQ(check_q_conditions(4, qs, n * c).admissible, base);
    }
  }
  EXPECT_THROW(check_q_conditions(4, {{2, 3}}, 5), InputError);
}

TEST(QConditions, AgreesWithLogarithmsAwayFromBoundary) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const int d = 3 + static_cast<int>(rng() % 3);
    std::map<int, std::uint64_t> q;
    for (int j = 2; j < d; ++j) q[j] = rng() % 1000 + 1;
    const std::uint64_t n = rng() % 1000 + 1;
    EXPECT_EQ(check_q_conditions(d, q, n).admissible, q_ok_by_logs(d, q, n));
  }
}

TEST(ExponentInequality, EqualParametersAndViolation) {
  EXPECT_TRUE(verify_exponent_inequality(4, 2, 2, 100, 100, 100));
  EXPECT_FALSE(verify_exponent_inequality(4, 2, 2, 1000000, 1, 1000000));
  std::mt19937_64 rng(12);
  int admissible = 0;
  while (admissible < 300) {
    const std::uint64_t n = rng() % 5000 + 1, q3 = rng() % n + 1, q2 = rng() % q3 + 1;
    if (!check_q_conditions(4, {{2, q2}, {3, q3}}, n).admissible) continue;
    ++admissible;
    EXPECT_TRUE(verify_exponent_inequality(4, 2, 2, q3, q2, n)) << q2 << " " << q3 << " " << n;
  }
}

TEST(Holder, Examples) {
  const std::vector<double> uniform{4, 4, 4, 4};
  const std::vector<double> spike{16, 0, 0, 0};
  EXPECT_TRUE(holder_check(uniform, rat(1, 2)));
  EXPECT_TRUE(holder_check(spike, rat(1, 2)));
  double lhs = 0;
  for (double v : uniform) lhs += std::sqrt(v);
  EXPECT_DOUBLE_EQ(lhs, std::sqrt(16.0) * std::sqrt(4.0));
}

TEST(Holder, RandomVectorsAtCounterExponents) {
  std::mt19937_64 rng(6);
  for (int d = 2; d <= 5; ++d)
    for (int k = 2; k <= 4; ++k)
      for (const Rational& a : counter_holder_exponents(d, k))
        for (int i = 0; i < 50; ++i) {
          std::vector<double> v(rng() % 30 + 1);
          for (auto& x : v) x = static_cast<double>(rng() % 1000);
          EXPECT_TRUE(holder_check(v, a));
        }
  const auto e3 = counter_holder_exponents(3, 2);
  ASSERT_EQ(e3.size(), 2u);
  EXPECT_EQ(e3[0], rat(3, 4));
  EXPECT_EQ(e3[1], rat(1, 2));
}

TEST(Fit, ExactSyntheticFitHasZeroResiduals) {
  std::vector<FitSample> samples;
  for (std::uint64_t m : {8u, 27u, 64u, 125u}) {
    BoundSpec s{m, m, 2, 2, 0, {}, 2};
    const double skeleton = std::pow(static_cast<double>(m), 4.0 / 3.0);
    samples.push_back({s, 3.0 * skeleton});
  }
  const auto fit = fit_constants(samples, Evaluator::pach_sharir);
  EXPECT_NEAR(fit.alpha1, 3.0, 1e-9);
  for (double r : fit.residuals) EXPECT_NEAR(r, 0.0, 1e-6);
  ASSERT_TRUE(fit.loglog_slope.has_value());
  EXPECT_NEAR(*fit.loglog_slope, 1.0, 1e-9);
}

TEST(Fit, ElekesFamily) {
  std::vector<FitSample> samples;
  for (std::uint64_t n = 3; n <= 8; ++n) {
    BoundSpec s{2 * n * n * n, n * n * n, 2, 2, 0, {}, 2};
    samples.push_back({s, static_cast<double>(n * n * n * n)});
  }
  const auto fit = fit_constants(samples, Evaluator::pach_sharir);
  EXPECT_NEAR(fit.alpha1, std::pow(2.0, -2.0 / 3.0), 1e-6);
  ASSERT_TRUE(fit.loglog_slope.has_value());
  EXPECT_NEAR(*fit.loglog_slope, 1.0, 1e-6);
  for (double r : fit.residuals) EXPECT_GE(r, -1e-6);
}

TEST(Fit, SingleSampleAndDegenerate) {
  BoundSpec s{8, 8, 2, 2, 0, {}, 2};
  const std::vector<FitSample> one{{s, 8.0}};
  const auto fit = fit_constants(one, Evaluator::pach_sharir);
  // Skeleton 8^(2/3) 8^(2/3) = 16.
  EXPECT_NEAR(fit.alpha1, 0.5, 1e-12);
  EXPECT_FALSE(fit.loglog_slope.has_value());
  const std::vector<FitSample> zeros{{s, 0.0}, {s, 0.0}};
  EXPECT_THROW(fit_constants(zeros, Evaluator::pach_sharir), FitUndefined);
}
