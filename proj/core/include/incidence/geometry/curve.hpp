#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "incidence/algebra/mv_polynomial.hpp"
#include "incidence/algebra/uv_polynomial.hpp"
#include "incidence/geometry/point.hpp"

namespace incidence {

enum class CurveKind { line, circle, circle3d, graph, param, implicit };

std::string_view to_string(CurveKind kind);

/// t -> (numerators[0](t), ..., numerators[d-1](t)) / denominator(t).
/// The denominator is positive on the whole real line (1 for polynomial
/// curves). When every numerator has degree <= deg(denominator) and the
/// denominator is not constant, the curve also contains the limit point
/// at t = +-inf (for example (-1, 0) on the rational unit circle).
struct Parametrization {
  std::vector<UvPolynomial> numerators;
  UvPolynomial denominator = UvPolynomial::constant(1);

  std::size_t dimension() const { return numerators.size(); }
  /// max(deg numerators, deg denominator)
  int degree() const;
  bool polynomial() const { return denominator.is_constant(); }
  Point at(const Rational& t) const;
  std::optional<Point> at_infinity() const;
};

struct LineSpec {
  std::vector<Rational> point;
  std::vector<Rational> direction;
};

struct CircleSpec {
  Rational cx, cy, radius;
};

/// Circle in R^3 with center, radius, and orthonormal in-plane basis (u, v).
struct Circle3dSpec {
  std::array<Rational, 3> center;
  Rational radius;
  std::array<Rational, 3> u, v;
};

/// t -> (t, g_2(t), ..., g_d(t)).
struct GraphSpec {
  std::vector<UvPolynomial> coordinates;
};

struct ImplicitSpec {
  std::vector<MvPolynomial> equations;
  int degree = 1;
};

using CurveSpec = std::variant<LineSpec, CircleSpec, Circle3dSpec, GraphSpec, Parametrization,
                               ImplicitSpec>;

class Curve {
 public:
  /// Validates the record and derives the parametrization and implicit
  /// system. Throws InputError on malformed parameters.
  static Curve make(int id, std::size_t dimension, CurveSpec spec);

  static Curve line(int id, std::vector<Rational> point, std::vector<Rational> direction);
  static Curve circle(int id, const Rational& cx, const Rational& cy, const Rational& radius);
  static Curve circle3d(int id, std::array<Rational, 3> center, const Rational& radius,
                        std::array<Rational, 3> u, std::array<Rational, 3> v);
  static Curve graph(int id, std::vector<UvPolynomial> coordinates);
  static Curve parametric(int id, Parametrization param);
  static Curve implicit(int id, std::size_t dimension, std::vector<MvPolynomial> equations,
                        int degree);

  int id() const { return id_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return dimension_; }
  CurveKind kind() const;
  const CurveSpec& spec() const { return spec_; }

  bool has_parametrization() const { return param_.has_value(); }
  const Parametrization& parametrization() const;
  const std::vector<MvPolynomial>& implicit_system() const { return implicit_; }

  Curve with_id(int id) const;

 private:
  Curve() = default;

  int id_ = 0;
  int degree_ = 1;
  std::size_t dimension_ = 0;
  CurveSpec spec_;
  std::optional<Parametrization> param_;
  std::vector<MvPolynomial> implicit_;
};

/// A set of curves with declared degrees of freedom k and multiplicity s.
struct CurveFamily {
  std::vector<Curve> curves;
  int k = 2;
  int s = 1;
  std::size_t dimension = 2;
  std::string name;
};

}  // namespace incidence
