#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "incidence/geometry/curve.hpp"

namespace incidence {

enum class CountMethod { oracle, partitioned };

std::string_view to_string(CountMethod method);

using IncidencePair = std::pair<std::size_t, std::size_t>;  // (point id, curve id)

/// Bookkeeping of one partitioning step of the recursive counter.
struct LevelTrace {
  int depth = 0;
  std::size_t dimension = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned r = 0;
  int product_degree = 0;
  std::size_t m0 = 0;          // points on Z(f)
  std::size_t n0 = 0;          // curves inside Z(f)
  std::size_t n_prime = 0;     // curves crossing Z(f) properly
  std::size_t sum_mi = 0;      // points inside cells
  std::size_t sum_ni = 0;      // curve-cell visits
  std::size_t cells_used = 0;
  std::size_t max_cell = 0;
  double cell_bound = 0;       // m (1/2 + delta)^t
  std::size_t crossing_incidences = 0;  // I(P_0, C')
  std::size_t crossing_budget = 0;      // sum over C' of deg(gamma) deg(f)
  std::size_t zero_set_incidences = 0;  // I(P_0, C_0)
  std::size_t max_curve_cells = 0;
  bool bezout_ok = true;       // every curve met <= deg(gamma) deg(f) + 1 cells
  bool holder_ok = true;
  bool projected = false;
  bool projection_fallback = false;
};

struct IncidenceReport {
  std::uint64_t count = 0;
  std::optional<std::vector<IncidencePair>> pairs;  // sorted; absent above the pair limit
  CountMethod method = CountMethod::oracle;
  std::vector<LevelTrace> levels;
  bool partition_fallback = false;  // a partition failed and the oracle took over
};

struct CountOptions {
  unsigned r = 8;
  int depth_cap = 2;
  Rational delta{1, 20};
  std::uint64_t seed = 0;
  int k = 2;                        // degrees of freedom, selects the Hoelder exponents
  unsigned threads = 1;
  std::size_t pair_limit = 1'000'000;
  std::size_t brute_threshold = 4096;  // m * n at or below this goes to the oracle
  bool collect_pairs = true;
};

/// Ground truth: tests every (point, curve) pair with point_on_curve.
IncidenceReport count_brute(std::span<const Point> points, std::span<const Curve> curves,
                            const CountOptions& options = {});

/// Divide and conquer over an r-partitioning polynomial: recurse into the
/// cells, test points of Z(f) against crossing curves directly, and count
/// points of Z(f) against curves inside Z(f) after a certified generic
/// projection (d >= 3) or by brute force (d = 2). Falls back to the oracle
/// at the depth cap and on small instances. Exact: equals count_brute.
IncidenceReport count_partitioned(std::span<const Point> points, std::span<const Curve> curves,
                                  const CountOptions& options);

struct RichPointSet {
  unsigned threshold = 1;
  std::vector<std::pair<std::size_t, std::size_t>> points;  // (point id, incident curves)
};

RichPointSet rich_points(std::span<const Point> points, std::span<const Curve> curves,
                         unsigned threshold, unsigned threads = 1);

}  // namespace incidence
