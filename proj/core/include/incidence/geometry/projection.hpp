#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "incidence/geometry/curve.hpp"

namespace incidence {

struct GenericityCertificate {
  bool injective_on_points = false;
  bool curve_images_distinct = false;
  bool incidences_preserved = false;
  std::size_t original_incidences = 0;
  std::size_t projected_incidences = 0;

  bool ok() const { return injective_on_points && curve_images_distinct && incidences_preserved; }
};

/// Linear projection R^d -> R^(d-1) along `direction`: subtract the
/// multiple of the direction that zeroes coordinate `dropped`, then drop
/// that coordinate.
class ProjectionMap {
 public:
  ProjectionMap(std::vector<Rational> direction, std::uint64_t seed);

  std::size_t source_dimension() const { return direction_.size(); }
  const std::vector<Rational>& direction() const { return direction_; }
  /// (d-1) x d, row-major.
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  std::uint64_t seed() const { return seed_; }
  int attempts() const { return attempts_; }
  const GenericityCertificate& certificate() const { return certificate_; }

  Point apply(const Point& p) const;
  /// The image curve carries only a parametrization.
  Curve apply(const Curve& c) const;

  void set_certificate(GenericityCertificate certificate, int attempts) {
    certificate_ = certificate;
    attempts_ = attempts;
  }

 private:
  std::vector<Rational> direction_;
  std::vector<std::vector<Rational>> matrix_;
  std::uint64_t seed_;
  int attempts_ = 0;
  GenericityCertificate certificate_;
};

GenericityCertificate certify_projection(const ProjectionMap& map, std::span<const Point> points,
                                         std::span<const Curve> curves);

inline constexpr int kProjectionRetries = 16;

/// Random rational direction with an explicit genericity certificate.
/// Throws GenericityFailure after kProjectionRetries uncertified attempts.
ProjectionMap make_projection(std::span<const Point> points, std::span<const Curve> curves,
                              std::uint64_t seed);

}  // namespace incidence
