#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "incidence/geometry/curve.hpp"
#include "incidence/partition/bisect.hpp"

namespace incidence {

/// Sign vector over the factors g_1..g_t, one '+' or '-' per factor.
using SignVector = std::string;

struct CellRecord {
  SignVector sign_vector;
  std::vector<std::size_t> point_ids;
  std::vector<std::size_t> curve_ids;  // filled by the incidence counter
};

struct PartitionOptions {
  Rational delta{1, 20};
  std::uint64_t seed = 0;
  int attempts = 64;
};

/// r-partitioning polynomial f = g_1 * ... * g_t together with the sign-vector
/// cells of the input points. Cells are sign classes, not connected
/// components of R^d \ Z(f); empty cells are not stored.
class Partition {
 public:
  std::size_t dimension = 0;
  std::size_t point_count = 0;
  unsigned r = 2;
  unsigned rounds = 1;
  Rational delta{1, 20};
  std::uint64_t seed = 0;
  std::vector<MvPolynomial> factors;
  std::vector<unsigned> lift_degrees;
  std::map<SignVector, CellRecord> cells;
  std::vector<std::size_t> zero_bucket;

  int product_degree() const;
  MvPolynomial product() const;
  std::size_t max_cell_size() const;
  std::size_t cell_point_total() const;
  /// m * (1/2 + delta)^t
  Rational cell_size_bound() const;
  /// Sign vector of `p`, or empty when some factor vanishes at p.
  SignVector locate(const Point& p) const;
};

unsigned round_up_power_of_two(unsigned r);
unsigned rounds_for(unsigned r);

/// sum_{i=1..t} min_lift_degree(d, 2^(i-1))
unsigned degree_budget(std::size_t d, unsigned rounds);

/// Builds the partition by t = log2(r) rounds of bisect_step over the
/// current sign classes. Points on any factor's zero set go to the zero
/// bucket and take no further part. r is rounded up to a power of two.
Partition build_partition(std::span<const Point> points, unsigned r,
                          const PartitionOptions& options = {});

struct CurveCells {
  std::set<SignVector> cells;
  bool in_zero_set = false;     // f o gamma vanishes identically
  std::size_t crossings = 0;    // distinct real parameters where f o gamma = 0
  std::size_t segments = 0;
};

/// Sign-vector cells met by a parametrized curve: isolate the real roots of
/// the restricted factors, split the parameter line at them, and read one
/// sign vector per open segment.
CurveCells curve_cells(const Partition& partition, const Curve& curve);

/// P_0 / C_0 / C' bookkeeping for one partition level.
struct ZeroSetSplit {
  std::vector<std::size_t> zero_points;      // P_0
  std::vector<std::size_t> contained_curves; // C_0
  std::vector<std::size_t> crossing_curves;  // C'
};

/// Deterministic JSON dump: factors in polynomial text format, delta,
/// per-cell sign vectors and point ids, zero-bucket ids.
std::string partition_to_json(const Partition& partition);

}  // namespace incidence
