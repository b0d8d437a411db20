#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "incidence/algebra/poly_text.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/curve.hpp"
#include "incidence/geometry/curve_io.hpp"
#include "incidence/geometry/predicates.hpp"
#include "incidence/geometry/projection.hpp"
#include "oracles.hpp"

using namespace incidence;
using oracle::point;
using oracle::rat;

namespace {

Curve unit_circle(int id, long cx = 0, long cy = 0) { return Curve::circle(id, rat(cx), rat(cy), rat(1)); }

Curve line2(int id, long px, long py, long vx, long vy) {
  return Curve::line(id, {rat(px), rat(py)}, {rat(vx), rat(vy)});
}

UvPolynomial upoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(rat(v));
  return UvPolynomial(std::move(c));
}

// Brute incidence count written against the predicate only.
std::size_t pairs_on(const std::vector<Point>& pts, const std::vector<Curve>& curves) {
  std::size_t total = 0;
  for (const auto& p : pts)
    for (const auto& c : curves) total += point_on_curve(p, c) ? 1 : 0;
  return total;
}

}  // namespace

TEST(PointOnCurve, UnitCircleAndLineExamples) {
  EXPECT_TRUE(point_on_curve(point({1, 0}), unit_circle(0)));
  EXPECT_FALSE(point_on_curve(point({2, 0}), unit_circle(0)));
  // y = 2x + 1
  EXPECT_TRUE(point_on_curve(point({3, 7}), line2(0, 0, 1, 1, 2)));
  EXPECT_FALSE(point_on_curve(point({3, 8}), line2(0, 0, 1, 1, 2)));
}

TEST(PointOnCurve, RationalCirclePointAndPointAtInfinity) {
  const Curve c = unit_circle(0);
  EXPECT_TRUE(point_on_curve(Point{rat(3, 5), rat(4, 5)}, c));
  EXPECT_TRUE(point_on_curve(point({-1, 0}), c));
  ASSERT_TRUE(c.has_parametrization());
  EXPECT_TRUE(point_on_parametrization(point({-1, 0}), c.parametrization()));
  EXPECT_TRUE(point_on_parametrization(point({1, 0}), c.parametrization()));
  EXPECT_FALSE(point_on_parametrization(point({0, 0}), c.parametrization()));
}

TEST(PointOnCurve, ParametricCurveWithIrrationalParameterIsRejected) {
  // (t^2, t^2): the point (2, 2) needs t = sqrt 2, which is still a real parameter.
  Parametrization p{{upoly({0, 0, 1}), upoly({0, 0, 1})}};
  const Curve c = Curve::parametric(0, p);
  EXPECT_TRUE(point_on_curve(point({2, 2}), c));
  EXPECT_FALSE(point_on_curve(point({-2, -2}), c));
  EXPECT_FALSE(point_on_curve(point({2, 3}), c));
}

TEST(PointOnCurve, DimensionMismatchIsNotAnIncidence) {
  EXPECT_FALSE(point_on_curve(point({1, 0, 0}), unit_circle(0)));
}

TEST(PointOnCurve, RepresentationsAgreeOnRandomPoints) {
  // Curves carrying both an implicit system and a parametrization.
  std::vector<Curve> curves{unit_circle(0), Curve::circle(1, rat(1, 2), rat(-1), rat(5, 2)),
                            line2(2, 1, 1, 2, -3),
                            Curve::line(3, {rat(0), rat(1), rat(2)}, {rat(1), rat(1), rat(0)}),
                            Curve::circle3d(4, {rat(0), rat(0), rat(0)}, rat(5),
                                            {rat(1), rat(0), rat(0)}, {rat(0), rat(0), rat(1)})};
  std::mt19937_64 rng(5);
  for (const auto& c : curves) {
    ASSERT_TRUE(c.has_parametrization());
    ASSERT_FALSE(c.implicit_system().empty());
    // Points on the curve from rational parameters plus nearby perturbations.
    for (int i = 0; i < 40; ++i) {
      const Rational t = rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
      Point on = c.parametrization().at(t);
      Point off = on;
      off.coords[0] += rat(1, static_cast<long>(rng() % 5) + 2);
      for (const Point& p : {on, off}) {
        bool implicit = true;
        for (const auto& g : c.implicit_system()) implicit = implicit && sgn(g.evaluate(p.view())) == 0;
        EXPECT_EQ(implicit, point_on_parametrization(p, c.parametrization()))
            << "curve " << c.id() << " t=" << to_string(t);
      }
      EXPECT_TRUE(point_on_curve(on, c));
    }
  }
}

TEST(CurvePairIntersections, Examples) {
  EXPECT_EQ(curve_pair_intersections(unit_circle(0), unit_circle(1, 1, 0)), 2u);
  EXPECT_EQ(curve_pair_intersections(line2(0, 0, 0, 1, 0), line2(1, 0, 1, 1, 0)), 0u);
  EXPECT_EQ(curve_pair_intersections(line2(0, 0, 0, 1, 0), line2(1, 0, 1, 1, 1)), 1u);
  // Tangent circles meet once.
  EXPECT_EQ(curve_pair_intersections(unit_circle(0), unit_circle(1, 2, 0)), 1u);
  // Disjoint circles.
  EXPECT_EQ(curve_pair_intersections(unit_circle(0), unit_circle(1, 5, 0)), 0u);
  // The shared point at infinity of the rational parametrization counts.
  EXPECT_EQ(curve_pair_intersections(unit_circle(0), line2(1, -1, -5, 0, 1)), 1u);
}

TEST(CurvePairIntersections, UnitCircleCountMatchesResultantSignChanges) {
  // Subtracting the equations gives x = 1/2; substitution leaves 4y^2 - 3.
  EXPECT_EQ(oracle::count_roots_by_scanning(upoly({-3, 0, 4}), -2.0, 2.0, 1.0 / 1024), 2);
  EXPECT_EQ(curve_pair_intersections(unit_circle(0), unit_circle(1, 1, 0)),
            static_cast<std::size_t>(oracle::count_roots_by_scanning(upoly({-3, 0, 4}), -2.0, 2.0,
                                                                     1.0 / 1024)));
}

TEST(CurvePairIntersections, OverlapSignalsCommonComponent) {
  EXPECT_THROW(curve_pair_intersections(unit_circle(0), unit_circle(1)), CommonComponent);
  EXPECT_THROW(curve_pair_intersections(line2(0, 0, 0, 1, 1), line2(1, 2, 2, -3, -3)),
               CommonComponent);
}

TEST(CurvePairIntersections, SymmetricAndAtMostOneForLines) {
  std::mt19937_64 rng(17);
  std::vector<Curve> lines;
  for (int i = 0; i < 25; ++i) {
    long vx = static_cast<long>(rng() % 7) - 3;
    long vy = static_cast<long>(rng() % 7) - 3;
    if (vx == 0 && vy == 0) vx = 1;
    lines.push_back(line2(i, static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5,
                          vx, vy));
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::size_t ab = 0;
      std::size_t ba = 0;
      bool overlap_ab = false;
      bool overlap_ba = false;
      try {
        ab = curve_pair_intersections(lines[i], lines[j]);
      } catch (const CommonComponent&) {
        overlap_ab = true;
      }
      try {
        ba = curve_pair_intersections(lines[j], lines[i]);
      } catch (const CommonComponent&) {
        overlap_ba = true;
      }
      EXPECT_EQ(overlap_ab, overlap_ba);
      EXPECT_EQ(ab, ba);
      EXPECT_LE(ab, 1u);
    }
  std::vector<Curve> circles;
  for (int i = 0; i < 10; ++i)
    circles.push_back(Curve::circle(i, rat(static_cast<long>(rng() % 5)), rat(static_cast<long>(rng() % 5)),
                                    rat(static_cast<long>(rng() % 3) + 1)));
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (circles[i].spec().index() == circles[j].spec().index() &&
          format_curve(circles[i].with_id(0)) == format_curve(circles[j].with_id(0)))
        continue;
      const auto ab = curve_pair_intersections(circles[i], circles[j]);
      EXPECT_EQ(ab, curve_pair_intersections(circles[j], circles[i]));
      EXPECT_LE(ab, 2u);
    }
}

TEST(CurveInVariety, Examples) {
  Parametrization diag{{upoly({0, 1}), upoly({0, 1})}};
  Parametrization parabola{{upoly({0, 1}), upoly({0, 0, 1})}};
  Parametrization axis{{upoly({0, 1}), upoly({0})}};
  EXPECT_TRUE(curve_in_variety(Curve::parametric(0, diag), parse_polynomial("x1 - x2", 2)));
  EXPECT_TRUE(curve_in_variety(Curve::parametric(0, parabola), parse_polynomial("x2 - x1^2", 2)));
  EXPECT_FALSE(curve_in_variety(Curve::parametric(0, axis), parse_polynomial("x1^2 + x2^2 - 1", 2)));
  // A circle of radius 5 in the plane z = 0 lies on the sphere of radius 5.
  const Curve c = Curve::circle3d(0, {rat(0), rat(0), rat(0)}, rat(5), {rat(1), rat(0), rat(0)},
                                  {rat(0), rat(1), rat(0)});
  EXPECT_TRUE(curve_in_variety(c, parse_polynomial("x1^2 + x2^2 + x3^2 - 25", 3)));
  EXPECT_TRUE(curve_in_variety(c, parse_polynomial("x3", 3)));
  EXPECT_FALSE(curve_in_variety(c, parse_polynomial("x1", 3)));
}

TEST(Projection, DistinctPointsStayDistinct) {
  std::vector<Point> pts{point({0, 0, 0}), point({1, 2, 3})};
  const ProjectionMap map = make_projection(pts, {}, 3);
  EXPECT_TRUE(map.certificate().ok());
  EXPECT_NE(map.apply(pts[0]), map.apply(pts[1]));
  EXPECT_EQ(map.matrix().size(), 2u);
  EXPECT_EQ(map.matrix()[0].size(), 3u);
}

TEST(Projection, DirectionAlongSegmentFailsCertificate) {
  std::vector<Point> pts{point({0, 0, 0}), point({1, 2, 3})};
  const ProjectionMap bad({rat(1), rat(2), rat(3)}, 0);
  EXPECT_EQ(bad.apply(pts[0]), bad.apply(pts[1]));
  EXPECT_FALSE(certify_projection(bad, pts, {}).injective_on_points);
  // The randomized search retries past such directions.
  const ProjectionMap good = make_projection(pts, {}, 0);
  EXPECT_TRUE(good.certificate().ok());
  EXPECT_GE(good.attempts(), 1);
}

TEST(Projection, PreservesFiveIncidences) {
  // Three lines in the plane z = 0 and points on them: I = 5.
  std::vector<Curve> curves{Curve::line(0, {rat(0), rat(0), rat(0)}, {rat(1), rat(0), rat(0)}),
                            Curve::line(1, {rat(0), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}),
                            Curve::line(2, {rat(0), rat(1), rat(0)}, {rat(1), rat(1), rat(0)})};
  std::vector<Point> pts{point({0, 0, 0}), point({2, 0, 0}), point({0, 3, 0}), point({5, 6, 0}),
                         point({7, 7, 1})};
  ASSERT_EQ(pairs_on(pts, curves), 5u);
  const ProjectionMap map = make_projection(pts, curves, 42);
  std::vector<Point> ppts;
  std::vector<Curve> pcurves;
  for (const auto& p : pts) ppts.push_back(map.apply(p));
  for (const auto& c : curves) pcurves.push_back(map.apply(c));
  EXPECT_EQ(pairs_on(ppts, pcurves), 5u);
  EXPECT_EQ(map.certificate().original_incidences, 5u);
  EXPECT_EQ(map.certificate().projected_incidences, 5u);
}

TEST(Projection, PreservesIncidencesOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Curve> curves;
    for (int i = 0; i < 6; ++i) {
      std::vector<Rational> base, dir;
      for (int c = 0; c < 3; ++c) {
        base.push_back(rat(static_cast<long>(rng() % 7) - 3));
        dir.push_back(rat(static_cast<long>(rng() % 5) - 2));
      }
      if (sgn(dir[0]) == 0 && sgn(dir[1]) == 0 && sgn(dir[2]) == 0) dir[0] = 1;
      curves.push_back(Curve::line(i, base, dir));
    }
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i) {
      const auto& c = curves[rng() % curves.size()];
      Point p = c.parametrization().at(rat(static_cast<long>(rng() % 9) - 4));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const std::size_t before = pairs_on(pts, curves);
    const ProjectionMap map = make_projection(pts, curves, static_cast<std::uint64_t>(trial));
    std::vector<Point> ppts;
    std::vector<Curve> pcurves;
    for (const auto& p : pts) ppts.push_back(map.apply(p));
    for (const auto& c : curves) pcurves.push_back(map.apply(c));
    EXPECT_EQ(pairs_on(ppts, pcurves), before) << "trial " << trial;
  }
}

TEST(Projection, NeedsAtLeastThreeDimensions) {
  std::vector<Point> pts{point({0, 0}), point({1, 1})};
  EXPECT_THROW(make_projection(pts, {}, 0), InputError);
}

TEST(CurveIo, RoundTripsEveryKind) {
  Parametrization param{{upoly({0, 1}), upoly({1, 0, 1}), upoly({0, 0, 0, 2})}};
  std::vector<Curve> curves{
      line2(0, 1, 2, 3, -4), Curve::circle(1, rat(1, 2), rat(0), rat(3)),
      Curve::circle3d(2, {rat(1), rat(2), rat(3)}, rat(2), {rat(1), rat(0), rat(0)},
                      {rat(0), rat(0), rat(1)}),
      Curve::graph(3, {upoly({1, 2}), upoly({0, 0, -1})}), Curve::parametric(4, param)};
  std::stringstream buffer;
  write_curves(buffer, curves);
  const auto back = read_curves(buffer);
  ASSERT_EQ(back.size(), curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    EXPECT_EQ(format_curve(back[i]), format_curve(curves[i]));
    EXPECT_EQ(back[i].id(), static_cast<int>(i));
    EXPECT_EQ(back[i].degree(), curves[i].degree());
  }
}

TEST(CurveIo, PointsRoundTripAndRejectsGarbage) {
  std::vector<Point> pts{Point{rat(1, 3), rat(-2)}, point({0, 5})};
  std::stringstream buffer;
  write_points(buffer, pts);
  EXPECT_EQ(read_points(buffer), pts);
  std::stringstream bad("1 2\n3\n");
  EXPECT_THROW(read_points(bad), InputError);
  EXPECT_THROW(parse_curve("kind=blob dim=2 1 2", 0), InputError);
  EXPECT_THROW(parse_curve("kind=circle dim=2 0 0 -1", 0), InputError);
  EXPECT_THROW(parse_curve("kind=line dim=2 0 0 0 0", 0), InputError);
}
