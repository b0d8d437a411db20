#include "incidence/geometry/curve.hpp"

#include <algorithm>

#include "incidence/algebra/root_isolation.hpp"
#include "incidence/errors.hpp"

namespace incidence {

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::line: return "line";
    case CurveKind::circle: return "circle";
    case CurveKind::circle3d: return "circle3d";
    case CurveKind::graph: return "graph";
    case CurveKind::param: return "param";
    case CurveKind::implicit: return "implicit";
  }
  return "unknown";
}

int Parametrization::degree() const {
  int deg = std::max(denominator.degree(), 0);
  for (const auto& n : numerators) deg = std::max(deg, n.degree());
  return deg;
}

Point Parametrization::at(const Rational& t) const {
  const Rational w = denominator.evaluate(t);
  std::vector<Rational> coords;
  coords.reserve(numerators.size());
  for (const auto& n : numerators) coords.push_back(n.evaluate(t) / w);
  return Point(std::move(coords));
}

std::optional<Point> Parametrization::at_infinity() const {
  const int dw = denominator.degree();
  if (dw <= 0) return std::nullopt;
  std::vector<Rational> coords;
  for (const auto& n : numerators) {
    if (n.degree() > dw) return std::nullopt;
    coords.push_back(n.coefficient(static_cast<std::size_t>(dw)) / denominator.leading());
  }
  return Point(std::move(coords));
}

namespace {

MvPolynomial coordinate_minus(std::size_t dim, std::size_t i, const Rational& c) {
  return MvPolynomial::variable(dim, i) - MvPolynomial::constant(dim, c);
}

Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

UvPolynomial one_plus_t2() { return UvPolynomial{1, 0, 1}; }

struct Builder {
  std::size_t dim;
  std::optional<Parametrization>& param;
  std::vector<MvPolynomial>& implicit;
  int& degree;

  void operator()(const LineSpec& s) {
    if (s.point.size() != dim || s.direction.size() != dim)
      throw InputError("line record needs " + std::to_string(dim) + " point and direction coords");
    auto pivot = std::find_if(s.direction.begin(), s.direction.end(),
                              [](const Rational& v) { return v != 0; });
    if (pivot == s.direction.end()) throw InputError("line direction must be nonzero");
    const auto c = static_cast<std::size_t>(pivot - s.direction.begin());
    Parametrization p;
    for (std::size_t i = 0; i < dim; ++i) p.numerators.push_back(UvPolynomial{s.point[i], s.direction[i]});
    param = std::move(p);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == c) continue;
      implicit.push_back(coordinate_minus(dim, i, s.point[i]) * s.direction[c] -
                         coordinate_minus(dim, c, s.point[c]) * s.direction[i]);
    }
    degree = 1;
  }

  void operator()(const CircleSpec& s) {
    if (dim != 2) throw InputError("planar circle requires dim=2");
    if (s.radius <= 0) throw InputError("circle radius must be positive");
    Parametrization p;
    p.denominator = one_plus_t2();
    // (cx + r (1 - t^2)/(1 + t^2), cy + r 2t/(1 + t^2))
    p.numerators.push_back(UvPolynomial{s.cx + s.radius, 0, s.cx - s.radius});
    p.numerators.push_back(UvPolynomial{s.cy, 2 * s.radius, s.cy});
    param = std::move(p);
    const auto dx = coordinate_minus(2, 0, s.cx);
    const auto dy = coordinate_minus(2, 1, s.cy);
    implicit.push_back(dx * dx + dy * dy - MvPolynomial::constant(2, s.radius * s.radius));
    degree = 2;
  }

  void operator()(const Circle3dSpec& s) {
    if (dim != 3) throw InputError("circle3d requires dim=3");
    if (s.radius <= 0) throw InputError("circle radius must be positive");
    if (dot(s.u, s.u) != 1 || dot(s.v, s.v) != 1 || dot(s.u, s.v) != 0)
      throw InputError("circle3d basis (u, v) must be orthonormal");
    Parametrization p;
    p.denominator = one_plus_t2();
    for (std::size_t i = 0; i < 3; ++i) {
      const Rational& c = s.center[i];
      const Rational ru = s.radius * s.u[i];
      const Rational rv = s.radius * s.v[i];
      p.numerators.push_back(UvPolynomial{c + ru, 2 * rv, c - ru});
    }
    param = std::move(p);
    const std::array<Rational, 3> normal{s.u[1] * s.v[2] - s.u[2] * s.v[1],
                                         s.u[2] * s.v[0] - s.u[0] * s.v[2],
                                         s.u[0] * s.v[1] - s.u[1] * s.v[0]};
    MvPolynomial plane(3);
    MvPolynomial sphere = MvPolynomial::constant(3, -s.radius * s.radius);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto di = coordinate_minus(3, i, s.center[i]);
      plane += di * normal[i];
      sphere += di * di;
    }
    implicit.push_back(std::move(plane));
    implicit.push_back(std::move(sphere));
    degree = 2;
  }

  void operator()(const GraphSpec& s) {
    if (dim < 2 || s.coordinates.size() != dim - 1)
      throw InputError("graph record needs " + std::to_string(dim - 1) + " coordinate polynomials");
    Parametrization p;
    p.numerators.push_back(UvPolynomial::identity());
    degree = 1;
    for (std::size_t i = 0; i < s.coordinates.size(); ++i) {
      const auto& g = s.coordinates[i];
      p.numerators.push_back(g);
      degree = std::max(degree, g.degree());
      // x_{i+1} - g(x_0)
      MvPolynomial eq = MvPolynomial::variable(dim, i + 1);
      const auto& c = g.coefficients();
      for (std::size_t a = 0; a < c.size(); ++a) {
        Exponent e(dim, 0);
        e[0] = static_cast<std::uint32_t>(a);
        eq.add_term(e, -c[a]);
      }
      implicit.push_back(std::move(eq));
    }
    param = std::move(p);
  }

  void operator()(const Parametrization& s) {
    if (s.numerators.size() != dim)
      throw InputError("param record needs " + std::to_string(dim) + " coordinate polynomials");
    if (s.denominator.is_zero()) throw InputError("param denominator is zero");
    if (s.denominator.sign_at(0) <= 0 || isolate_real_roots(s.denominator).count() > 0)
      throw InputError("param denominator must be positive on the real line");
    const UvPolynomial dw = s.denominator.derivative();
    const bool moves = std::any_of(s.numerators.begin(), s.numerators.end(), [&](const UvPolynomial& n) {
      return !(n.derivative() * s.denominator - n * dw).is_zero();
    });
    if (!moves) throw InputError("parametrization is constant (not a curve)");
    param = s;
    degree = std::max(1, s.degree());
  }

  void operator()(const ImplicitSpec& s) {
    if (s.equations.empty()) throw InputError("implicit curve needs at least one equation");
    for (const auto& eq : s.equations)
      if (eq.dimension() != dim) throw InputError("implicit equation dimension mismatch");
    if (s.degree < 1) throw InputError("curve degree must be >= 1");
    implicit = s.equations;
    degree = s.degree;
  }
};

}  // namespace

Curve Curve::make(int id, std::size_t dimension, CurveSpec spec) {
  if (dimension < 2) throw InputError("curves live in dimension >= 2");
  Curve c;
  c.id_ = id;
  c.dimension_ = dimension;
  std::visit(Builder{dimension, c.param_, c.implicit_, c.degree_}, spec);
  c.spec_ = std::move(spec);
  return c;
}

Curve Curve::line(int id, std::vector<Rational> point, std::vector<Rational> direction) {
  const auto dim = point.size();
  return make(id, dim, LineSpec{std::move(point), std::move(direction)});
}

Curve Curve::circle(int id, const Rational& cx, const Rational& cy, const Rational& radius) {
  return make(id, 2, CircleSpec{cx, cy, radius});
}

Curve Curve::circle3d(int id, std::array<Rational, 3> center, const Rational& radius,
                      std::array<Rational, 3> u, std::array<Rational, 3> v) {
  return make(id, 3, Circle3dSpec{center, radius, u, v});
}

Curve Curve::graph(int id, std::vector<UvPolynomial> coordinates) {
  const auto dim = coordinates.size() + 1;
  return make(id, dim, GraphSpec{std::move(coordinates)});
}

Curve Curve::parametric(int id, Parametrization param) {
  const auto dim = param.dimension();
  return make(id, dim, std::move(param));
}

Curve Curve::implicit(int id, std::size_t dimension, std::vector<MvPolynomial> equations,
                      int degree) {
  return make(id, dimension, ImplicitSpec{std::move(equations), degree});
}

CurveKind Curve::kind() const {
  return static_cast<CurveKind>(spec_.index());
}

const Parametrization& Curve::parametrization() const {
  if (!param_)
    throw UnsupportedRepresentation("curve " + std::to_string(id_) + " has no parametrization");
  return *param_;
}

Curve Curve::with_id(int id) const {
  Curve c = *this;
  c.id_ = id;
  return c;
}

}  // namespace incidence
