#include "incidence/constructions/generators.hpp"

#include <set>
#include <sstream>

#include "incidence/detail/random.hpp"
#include "incidence/errors.hpp"

namespace incidence {

namespace {

constexpr GeneratorKind kAllKinds[] = {
    GeneratorKind::elekes2d,        GeneratorKind::grid_lines_3d, GeneratorKind::grid_circles_2d,
    GeneratorKind::circles_3d,      GeneratorKind::random_lines,  GeneratorKind::random_graph_curves};

Rational q(std::int64_t v) { return Rational(BigInt(std::to_string(v))); }

Point pt(std::initializer_list<std::int64_t> coords) {
  Point p;
  for (auto c : coords) p.coords.push_back(q(c));
  return p;
}

void elekes(GeneratedInstance& out, std::int64_t n, bool lift) {
  // The planar grid sits in z = 0 (coordinates (x, y, 0)); the lifted copy
  // uses the y = 0 plane (coordinates (x, 0, z)).
  auto place = [lift](std::int64_t x, std::int64_t y, bool copy) {
    if (!lift) return pt({x, y});
    return copy ? pt({x, 0, y}) : pt({x, y, 0});
  };
  const int copies = lift ? 2 : 1;
  for (int copy = 0; copy < copies; ++copy)
    for (std::int64_t x = 1; x <= n; ++x)
      for (std::int64_t y = 1; y <= 2 * n * n; ++y) out.points.push_back(place(x, y, copy == 1));
  int id = 0;
  for (int copy = 0; copy < copies; ++copy)
    for (std::int64_t a = 1; a <= n; ++a)
      for (std::int64_t b = 1; b <= n * n; ++b) {
        const Point base = place(0, b, copy == 1);
        const Point dir = place(1, a, copy == 1);
        out.family.curves.push_back(Curve::line(id++, base.coords, dir.coords));
      }
  out.family.k = 2;
  out.family.s = 1;
  out.family.dimension = lift ? 3 : 2;
}

void grid_circles(GeneratedInstance& out, std::int64_t n, detail::Rng& rng) {
  static constexpr std::int64_t radii[] = {1, 2, 5};
  for (std::int64_t x = -5; x <= n + 5; ++x)
    for (std::int64_t y = -5; y <= n + 5; ++y) out.points.push_back(pt({x, y}));
  int id = 0;
  for (std::int64_t x = 1; x <= n; ++x)
    for (std::int64_t y = 1; y <= n; ++y) {
      const auto r = radii[detail::uniform_int(rng, 0, 2)];
      out.family.curves.push_back(Curve::circle(id++, q(x), q(y), q(r)));
    }
  out.family.k = 3;
  out.family.s = 2;
  out.family.dimension = 2;
}

void circles3d(GeneratedInstance& out, std::int64_t n, detail::Rng& rng) {
  for (std::int64_t x = 0; x <= n + 1; ++x)
    for (std::int64_t y = 0; y <= n + 1; ++y)
      for (std::int64_t z = 0; z <= n + 1; ++z) out.points.push_back(pt({x, y, z}));
  const std::array<Rational, 3> e[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  int id = 0;
  for (std::int64_t x = 1; x <= n; ++x)
    for (std::int64_t y = 1; y <= n; ++y)
      for (std::int64_t z = 1; z <= n; ++z) {
        // Plane spanned by two distinct axes: xy, xz or yz.
        const auto o = detail::uniform_int(rng, 0, 2);
        const auto& u = o == 2 ? e[1] : e[0];
        const auto& v = o == 0 ? e[1] : e[2];
        out.family.curves.push_back(
            Curve::circle3d(id++, {q(x), q(y), q(z)}, Rational(1), u, v));
      }
  out.family.k = 3;
  out.family.s = 2;
  out.family.dimension = 3;
}

std::vector<Rational> random_vector(detail::Rng& rng, std::size_t d, std::int64_t bound) {
  std::vector<Rational> v(d);
  for (auto& c : v) c = q(detail::uniform_int(rng, -bound, bound));
  return v;
}

// Adds N free points and N points on randomly chosen curves at integer
// parameters; duplicates are redrawn.
void scatter_points(GeneratedInstance& out, std::int64_t n, std::size_t d, detail::Rng& rng) {
  std::set<Point> seen;
  const auto& curves = out.family.curves;
  for (std::int64_t placed = 0; placed < n;) {
    const auto& c = curves[static_cast<std::size_t>(
        detail::uniform_int(rng, 0, static_cast<std::int64_t>(curves.size()) - 1))];
    Point p = c.parametrization().at(q(detail::uniform_int(rng, -5, 5)));
    if (seen.insert(p).second) {
      out.points.push_back(std::move(p));
      ++placed;
    }
  }
  for (std::int64_t placed = 0; placed < n;) {
    Point p{random_vector(rng, d, 10)};
    if (seen.insert(p).second) {
      out.points.push_back(std::move(p));
      ++placed;
    }
  }
}

void random_lines(GeneratedInstance& out, std::int64_t n, std::size_t d, detail::Rng& rng) {
  // A line is kept only when no earlier line passes through both of its
  // defining points.
  int id = 0;
  while (static_cast<std::int64_t>(out.family.curves.size()) < n) {
    auto base = random_vector(rng, d, 10);
    auto dir = random_vector(rng, d, 5);
    bool zero = true;
    for (const auto& c : dir) zero = zero && sgn(c) == 0;
    if (zero) continue;
    Curve line = Curve::line(id, base, dir);
    const Point p0{base};
    Point p1{base};
    for (std::size_t i = 0; i < d; ++i) p1.coords[i] += dir[i];
    bool dup = false;
    for (const auto& other : out.family.curves) {
      bool on0 = true, on1 = true;
      for (const auto& eq : other.implicit_system()) {
        on0 = on0 && sgn(eq.evaluate(p0.view())) == 0;
        on1 = on1 && sgn(eq.evaluate(p1.view())) == 0;
      }
      if (on0 && on1) dup = true;
    }
    if (dup) continue;
    out.family.curves.push_back(std::move(line));
    ++id;
  }
  scatter_points(out, n, d, rng);
  out.family.k = 2;
  out.family.s = 1;
  out.family.dimension = d;
}

void random_graphs(GeneratedInstance& out, std::int64_t n, std::size_t d, detail::Rng& rng) {
  std::set<std::vector<Rational>> seen;
  int id = 0;
  while (static_cast<std::int64_t>(out.family.curves.size()) < n) {
    std::vector<UvPolynomial> coords;
    std::vector<Rational> key;
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<Rational> c(3);
      for (auto& v : c) {
        v = Rational(BigInt(std::to_string(detail::uniform_int(rng, -3, 3))),
                     BigInt(std::to_string(detail::uniform_int(rng, 1, 2))));
        v.canonicalize();
        key.push_back(v);
      }
      coords.push_back(UvPolynomial(std::move(c)));
    }
    if (!seen.insert(key).second) continue;
    out.family.curves.push_back(Curve::graph(id++, std::move(coords)));
  }
  scatter_points(out, n, d, rng);
  out.family.k = 3;
  out.family.s = 2;
  out.family.dimension = d;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::elekes2d: return "elekes2d";
    case GeneratorKind::grid_lines_3d: return "grid_lines_3d";
    case GeneratorKind::grid_circles_2d: return "grid_circles_2d";
    case GeneratorKind::circles_3d: return "circles_3d";
    case GeneratorKind::random_lines: return "random_lines";
    case GeneratorKind::random_graph_curves: return "random_graph_curves";
  }
  return "";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (to_string(k) == name) return k;
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

std::string GeneratedInstance::manifest() const {
  std::ostringstream out;
  out << to_string(spec.kind) << ' ' << spec.size << ' ' << spec.seed << ' ' << points.size()
      << ' ' << family.curves.size();
  return out.str();
}

GeneratedInstance generate(const GeneratorSpec& spec) {
  if (spec.size < 1) throw InputError("generator size N must be at least 1");
  GeneratedInstance out;
  out.spec = spec;
  out.family.name = std::string(to_string(spec.kind));
  const std::int64_t n = spec.size;
  detail::Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::elekes2d: elekes(out, n, false); break;
    case GeneratorKind::grid_lines_3d: elekes(out, n, true); break;
    case GeneratorKind::grid_circles_2d: grid_circles(out, n, rng); break;
    case GeneratorKind::circles_3d: circles3d(out, n, rng); break;
    case GeneratorKind::random_lines: {
      const std::size_t d = spec.dimension == 0 ? 2 : spec.dimension;
      if (d < 2) throw InputError("random lines need d >= 2");
      random_lines(out, n, d, rng);
      break;
    }
    case GeneratorKind::random_graph_curves: {
      const std::size_t d = spec.dimension == 0 ? 3 : spec.dimension;
      if (d < 2) throw InputError("graph curves need d >= 2");
      random_graphs(out, n, d, rng);
      break;
    }
  }
  out.spec.dimension = out.family.dimension;
  return out;
}

}  // namespace incidence
