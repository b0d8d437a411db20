#include <gtest/gtest.h>

#include <random>

#include "incidence/algebra/mv_polynomial.hpp"
#include "incidence/algebra/poly_text.hpp"
#include "incidence/algebra/rational.hpp"
#include "incidence/algebra/root_isolation.hpp"
#include "incidence/algebra/uv_polynomial.hpp"
#include "incidence/algebra/veronese.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/curve.hpp"
#include "incidence/geometry/predicates.hpp"
#include "oracles.hpp"

using namespace incidence;
using oracle::rat;

namespace {

MvPolynomial poly(const char* text, std::size_t d) { return parse_polynomial(text, d); }

UvPolynomial upoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(rat(v));
  return UvPolynomial(std::move(c));
}

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), rat(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), rat(-3, 4));
  EXPECT_EQ(parse_rational("17"), rat(17));
  EXPECT_EQ(parse_rational("0.05"), rat(1, 20));
  EXPECT_EQ(to_string(rat(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(rat(8, 4)), "2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r = parse_rational("-10/4");
  EXPECT_EQ(r.get_num(), -5);
  EXPECT_EQ(r.get_den(), 2);
}

TEST(Rational, ArithmeticIsExactOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto draw = [&] {
      const long num = static_cast<long>(rng() % 2000001) - 1000000;
      const long den = static_cast<long>(rng() % 999999) + 1;
      return rat(num, den);
    };
    const Rational a = draw();
    Rational b = draw();
    EXPECT_EQ(Rational((a + b) - b), a);
    if (sgn(b) == 0) b = 1;
    EXPECT_EQ(Rational((a * b) / b), a);
  }
}

TEST(MvPolynomial, EvaluatesExactly) {
  const auto circle = poly("x1^2 + x2^2 - 1", 2);
  EXPECT_EQ(circle.evaluate(oracle::point({1, 0}).view()), 0);
  EXPECT_EQ(circle.evaluate(oracle::point({0, 0}).view()), -1);
  const auto xyz = poly("x1 x2 x3", 3);
  EXPECT_EQ(xyz.evaluate(oracle::point({2, 3, 5}).view()), 30);
}

TEST(MvPolynomial, DimensionMismatchIsAnInputError) {
  const auto circle = poly("x1^2 + x2^2 - 1", 2);
  EXPECT_THROW(circle.evaluate(oracle::point({1, 2, 3}).view()), InputError);
}

TEST(MvPolynomial, StoresNoZeroCoefficientsAndTracksDegree) {
  const auto p = poly("x1^2 + x2", 2);
  const auto q = poly("x1^2 - x1", 2);
  const auto diff = p - q;
  for (const auto& [e, c] : diff.terms()) EXPECT_NE(sgn(c), 0);
  EXPECT_EQ(diff.degree(), 1);
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolyText, RoundTripsBitExactly) {
  const char* samples[] = {"3/7 * x1^2 x2^1 + -1/2 * x3^4 + 5", "x1 - x2", "0", "-x1^3 x2^2 + 2/3"};
  for (const char* text : samples) {
    const auto p = poly(text, 3);
    const auto printed = format_polynomial(p);
    EXPECT_EQ(parse_polynomial(printed, 3), p) << printed;
    EXPECT_EQ(format_polynomial(parse_polynomial(printed, 3)), printed);
  }
}

TEST(PolyText, RejectsMalformedInput) {
  EXPECT_THROW(parse_polynomial("x4", 3), InputError);
  EXPECT_THROW(parse_polynomial("x1 +", 2), InputError);
  EXPECT_THROW(parse_polynomial("y^2", 2), InputError);
}

TEST(RestrictToCurve, SubstitutesPolynomialParametrizations) {
  const Curve axis = Curve::line(0, {rat(0), rat(0)}, {rat(1), rat(0)});
  EXPECT_EQ(restrict_to_curve(poly("x1^2 + x2^2 - 1", 2), axis), upoly({-1, 0, 1}));
  const Curve diagonal = Curve::line(1, {rat(0), rat(0)}, {rat(1), rat(1)});
  EXPECT_TRUE(restrict_to_curve(poly("x1 - x2", 2), diagonal).is_zero());
  const auto r = restrict_to_curve(poly("x1 x2 - 1", 2), diagonal);
  EXPECT_EQ(r, upoly({-1, 0, 1}));
  EXPECT_LE(r.degree(), 2 * diagonal.degree());
}

TEST(RestrictToCurve, MatchesPointwiseCompositionOnRandomPairs) {
  // Independent check: evaluate p at gamma(t) directly and compare with the
  // expanded restriction (times w(t)^deg p) at more sample points than the
  // degree.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    MvPolynomial p(2);
    const int deg = 1 + static_cast<int>(rng() % 3);
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b)
        p.add_term({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                   rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
    if (p.is_zero()) continue;
    const Curve c = trial % 2 == 0
                        ? Curve::circle(0, rat(static_cast<long>(rng() % 5)), rat(1), rat(2))
                        : Curve::graph(0, {upoly({static_cast<long>(rng() % 5) - 2, 1, 1})});
    const auto r = restrict_to_curve(p, c);
    EXPECT_LE(r.degree(), p.degree() * c.degree());
    const auto& param = c.parametrization();
    for (long t = -6; t <= 6; ++t) {
      const Rational w = param.denominator.evaluate(rat(t));
      Rational scale = 1;
      for (int i = 0; i < p.degree(); ++i) scale *= w;
      EXPECT_EQ(r.evaluate(rat(t)), Rational(scale * p.evaluate(param.at(rat(t)).view())));
    }
  }
}

TEST(RestrictToCurve, ImplicitOnlyCurveIsUnsupported) {
  const Curve c = Curve::implicit(0, 2, {poly("x1^2 + x2^2 - 1", 2)}, 2);
  EXPECT_THROW(restrict_to_curve(poly("x1", 2), c), UnsupportedRepresentation);
}

TEST(RootIsolation, KnownExamples) {
  const auto two = isolate_real_roots(upoly({-2, 0, 1}));
  ASSERT_EQ(two.count(), 2u);
  EXPECT_LE(two.intervals[0].hi, two.intervals[1].lo);
  EXPECT_LT(two.intervals[0].lo, 0);
  EXPECT_LE(two.intervals[0].hi, 0);
  EXPECT_GE(two.intervals[1].lo, 0);
  EXPECT_GT(two.intervals[1].hi, 0);
  EXPECT_EQ(isolate_real_roots(upoly({1, 0, 1})).count(), 0u);
  // (t - 1)^2 (t + 3) = t^3 + t^2 - 5t + 3
  const auto repeated = isolate_real_roots(upoly({3, -5, 1, 1}));
  EXPECT_EQ(repeated.count(), 2u);
  EXPECT_FALSE(repeated.multiplicity_free);
}

TEST(RootIsolation, ZeroPolynomialSignalsContainment) {
  EXPECT_THROW(isolate_real_roots(UvPolynomial{}), ZeroPolynomial);
}

TEST(RootIsolation, IntervalsAreSortedDisjointAndBracketSignChanges) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c;
    const int deg = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < deg; ++i) c.push_back(rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4)));
    c.push_back(rat(1));
    const UvPolynomial q(c);
    const auto iso = isolate_real_roots(q);
    for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
      const auto& iv = iso.intervals[i];
      // Neighbours may share an endpoint, which is then not a root.
      if (i + 1 < iso.intervals.size()) {
        EXPECT_LE(iv.hi, iso.intervals[i + 1].lo);
        if (iv.hi == iso.intervals[i + 1].lo) {
          EXPECT_NE(q.sign_at(iv.hi), 0);
        }
      }
      if (iv.exact()) {
        EXPECT_EQ(q.sign_at(iv.lo), 0);
      } else {
        const int a = iso.square_free.sign_at(iv.lo);
        const int b = iso.square_free.sign_at(iv.hi);
        EXPECT_NE(a, 0);
        EXPECT_NE(b, 0);
        EXPECT_NE(a, b);
      }
    }
  }
}

TEST(RootIsolation, CountMatchesFineGridScan) {
  // Monic with coefficients in [-3, 3]: every root lies in (-4, 4).
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> c;
    const int deg = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < deg; ++i) c.push_back(rat(static_cast<long>(rng() % 7) - 3));
    c.push_back(rat(1));
    const UvPolynomial q(c);
    const auto iso = isolate_real_roots(q);
    if (!iso.multiplicity_free) continue;
    EXPECT_EQ(static_cast<int>(iso.count()),
              oracle::count_roots_by_scanning(q, -5, 5, std::ldexp(1.0, -20)))
        << format_polynomial(q);
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(RootIsolation, RationalRootsOnBisectionPointsAreIsolated) {
  // Roots at 0, 1/2 and -3/4 land on dyadic midpoints of the search.
  UvPolynomial q = UvPolynomial::identity();
  q = q * (UvPolynomial::identity() - UvPolynomial::constant(rat(1, 2)));
  q = q * (UvPolynomial::identity() + UvPolynomial::constant(rat(3, 4)));
  q = q * upoly({-2, 0, 1});
  const auto iso = isolate_real_roots(q);
  EXPECT_EQ(iso.count(), 5u);
  for (const auto& iv : iso.intervals) {
    const auto r = refine(iso.square_free, iv, rat(1, 1 << 20));
    EXPECT_TRUE(r.exact() || r.width() <= rat(1, 1 << 20));
  }
}

TEST(RootIsolation, RefinementReachesRequestedWidth) {
  const auto iso = isolate_real_roots(upoly({-2, 0, 1}));
  const auto r = refine(iso.square_free, iso.intervals[1], rat(1, 1000000));
  EXPECT_LE(r.width(), rat(1, 1000000));
  EXPECT_LT(r.lo * r.lo, 2);
  EXPECT_GT(r.hi * r.hi, 2);
}

TEST(Gcd, HandlesCommonFactorsAndCoprimePairs) {
  const auto a = upoly({-1, 0, 1});   // (t - 1)(t + 1)
  const auto b = upoly({-2, 1, 1});   // (t - 1)(t + 2)
  EXPECT_EQ(gcd(a, b), upoly({-1, 1}));
  EXPECT_EQ(gcd(a, upoly({3, 1})), UvPolynomial::constant(1));
  EXPECT_EQ(square_free_part(upoly({3, -5, 1, 1})), upoly({-3, 2, 1}));
}

TEST(Veronese, LiftsToAllMonomialsUpToDegree) {
  const auto lifted = veronese_lift(oracle::point({2, 3}).view(), 2);
  const std::vector<Rational> expected{rat(2), rat(3), rat(4), rat(6), rat(9)};
  EXPECT_EQ(lifted, expected);
  const auto identity = veronese_lift(oracle::point({1, 2, 3}).view(), 1);
  EXPECT_EQ(identity, (std::vector<Rational>{rat(1), rat(2), rat(3)}));
  EXPECT_EQ(lifted_dimension(2, 3), 9u);
}

TEST(Veronese, LiftedDimensionFormula) {
  for (std::size_t d = 1; d <= 6; ++d)
    for (unsigned D = 1; D <= 8; ++D) {
      // C(D + d, d) - 1 by the multiplicative formula.
      std::uint64_t c = 1;
      for (std::size_t i = 1; i <= d; ++i) c = c * (D + i) / i;
      EXPECT_EQ(lifted_dimension(d, D), c - 1);
      EXPECT_EQ(veronese_exponents(d, D).size(), c - 1);
    }
}

TEST(Veronese, MinimalLiftDegree) {
  EXPECT_EQ(min_lift_degree(2, 1), 1u);
  EXPECT_EQ(min_lift_degree(2, 2), 1u);
  EXPECT_EQ(min_lift_degree(2, 8), 3u);
  EXPECT_EQ(min_lift_degree(2, 9), 3u);
  EXPECT_EQ(min_lift_degree(2, 10), 4u);
}
