#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "incidence/geometry/curve.hpp"

namespace incidence {

enum class GeneratorKind {
  elekes2d,             // {1..N} x {1..2N^2}, lines y = ax + b, a in 1..N, b in 1..N^2
  grid_lines_3d,        // the planar grid in z = 0 plus a copy in y = 0
  grid_circles_2d,      // circles centered on {1..N}^2, radii drawn from {1, 2, 5}
  circles_3d,           // unit circles centered on {1..N}^3 in axis-parallel planes
  random_lines,         // N lines, N points on them, N free points, in R^d
  random_graph_curves,  // N curves t -> (t, g_2(t), .., g_d(t)), deg g <= 2
};

std::string_view to_string(GeneratorKind kind);
/// Throws InputError for unknown names.
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::elekes2d;
  int size = 1;            // N
  std::uint64_t seed = 0;
  std::size_t dimension = 0;  // random kinds only; 0 picks the default (2 for lines, 3 for graphs)
};

struct GeneratedInstance {
  GeneratorSpec spec;
  std::vector<Point> points;
  CurveFamily family;

  /// `kind N seed m n`
  std::string manifest() const;
};

/// Deterministic in (kind, N, seed, dimension). Throws InputError on N < 1.
GeneratedInstance generate(const GeneratorSpec& spec);

}  // namespace incidence
