#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "incidence/algebra/mv_polynomial.hpp"
#include "incidence/geometry/point.hpp"

namespace incidence {

struct BisectOptions {
  Rational delta{1, 20};
  int attempts = 64;          // randomized restarts
  int iterations = 40;        // median-tracking steps per restart
  std::uint64_t seed = 0;
};

/// Sign tally of one subset against a bisecting polynomial.
struct SideCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

struct BisectResult {
  MvPolynomial polynomial;
  unsigned lift_degree = 1;
  int attempts_used = 0;
  std::vector<SideCounts> counts;  // one per subset, exactly verified
};

/// Largest count allowed on either open side of a subset of `size`:
/// floor((1/2 + delta) * size).
std::size_t side_limit(std::size_t size, const Rational& delta);

/// Polynomial ham-sandwich step. Finds g of degree D = min_lift_degree(d, s)
/// such that every subset has at most floor((1/2 + delta) |S|) points with
/// g > 0 and at most as many with g < 0. The search runs in the Veronese
/// lift (affine hyperplanes there are degree-D polynomials); each candidate
/// is forced exactly through the current median points and verified with
/// exact signs. Throws PartitionFailure when the attempt budget runs out.
///
/// `subsets` holds index lists into `points`.
BisectResult bisect_step(std::span<const Point> points,
                         std::span<const std::vector<std::size_t>> subsets, std::size_t dimension,
                         const BisectOptions& options);

/// Override of the lift degree (used when a caller retries with D + 1).
BisectResult bisect_step_with_degree(std::span<const Point> points,
                                     std::span<const std::vector<std::size_t>> subsets,
                                     std::size_t dimension, unsigned lift_degree,
                                     const BisectOptions& options);

}  // namespace incidence
