#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "incidence/geometry/curve.hpp"

namespace incidence {

struct DofWitness {
  enum class Kind { too_many_curves, too_many_intersections, common_component };
  Kind kind;
  std::vector<std::size_t> point_ids;
  std::vector<std::size_t> curve_ids;
  std::size_t observed = 0;
};

std::string_view to_string(DofWitness::Kind kind);

enum class KstOutcome { free, contains, indeterminate };

std::string_view to_string(KstOutcome outcome);

struct KstResult {
  KstOutcome outcome = KstOutcome::indeterminate;
  std::vector<std::size_t> point_ids;  // witness K_{k,s+1} when contained
  std::vector<std::size_t> curve_ids;
  std::size_t subsets_checked = 0;
};

/// A candidate variety for containment audits.
struct Surface {
  MvPolynomial equation;
  int dimension = 2;  // dimension j of the zero set
  std::string label;
};

struct SurfaceCount {
  std::string label;
  int dimension = 2;
  std::size_t contained = 0;
};

struct AuditReport {
  std::string family;
  int k = 2;
  int s = 1;
  bool passed = true;
  bool exhaustive = true;
  std::size_t subsets_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<DofWitness> witnesses;
  std::vector<SurfaceCount> containment;
  std::map<int, std::size_t> q_hat;  // j -> max curves on one supplied j-variety
};

/// Checks both defining properties of "k degrees of freedom with
/// multiplicity s": (ii) exhaustively over curve pairs, (i) over k-subsets
/// of `sample` that share at least one curve (the only subsets that can
/// violate it), exhaustively when there are at most `sample_budget` of
/// them and on seeded random draws otherwise.
AuditReport audit_dof(const CurveFamily& family, std::span<const Point> sample,
                      std::size_t sample_budget, std::uint64_t seed = 0);

/// True (free) iff no k points and s + 1 curves are mutually incident.
KstResult kst_check(std::span<const Point> points, std::span<const Curve> curves, int k, int s,
                    std::size_t budget = 1'000'000);

AuditReport audit_containment(std::span<const Curve> curves, std::span<const Surface> surfaces);

/// Hyperplanes through d sampled points (degenerate tuples skipped).
std::vector<Surface> hyperplanes_through_samples(std::span<const Point> points,
                                                 std::size_t max_surfaces, std::uint64_t seed);

/// Spheres in R^3 through 4 sampled points (coplanar tuples skipped).
std::vector<Surface> spheres_through_samples(std::span<const Point> points,
                                             std::size_t max_surfaces, std::uint64_t seed);

}  // namespace incidence
