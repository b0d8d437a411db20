#include "incidence/geometry/projection.hpp"

#include <set>

#include "incidence/detail/random.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/predicates.hpp"

namespace incidence {

namespace {

std::size_t pivot_index(const std::vector<Rational>& direction) {
  for (std::size_t i = 0; i < direction.size(); ++i)
    if (direction[i] != 0) return i;
  throw InputError("projection direction must be nonzero");
}

}  // namespace

ProjectionMap::ProjectionMap(std::vector<Rational> direction, std::uint64_t seed)
    : direction_(std::move(direction)), seed_(seed) {
  const std::size_t d = direction_.size();
  if (d < 2) throw InputError("projection needs source dimension >= 2");
  const std::size_t c = pivot_index(direction_);
  for (std::size_t i = 0; i < d; ++i) {
    if (i == c) continue;
    std::vector<Rational> row(d, Rational(0));
    row[i] = 1;
    row[c] = -direction_[i] / direction_[c];
    matrix_.push_back(std::move(row));
  }
}

Point ProjectionMap::apply(const Point& p) const {
  if (p.dimension() != source_dimension()) throw InputError("point dimension mismatch in projection");
  std::vector<Rational> out;
  out.reserve(matrix_.size());
  for (const auto& row : matrix_) {
    Rational acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) acc += row[j] * p[j];
    out.push_back(std::move(acc));
  }
  return Point(std::move(out));
}

Curve ProjectionMap::apply(const Curve& c) const {
  const auto& param = c.parametrization();
  Parametrization image;
  image.denominator = param.denominator;
  for (const auto& row : matrix_) {
    UvPolynomial acc;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) acc += param.numerators[j] * row[j];
    image.numerators.push_back(std::move(acc));
  }
  return Curve::parametric(c.id(), std::move(image));
}

GenericityCertificate certify_projection(const ProjectionMap& map, std::span<const Point> points,
                                         std::span<const Curve> curves) {
  GenericityCertificate cert;
  std::vector<Point> images;
  images.reserve(points.size());
  for (const auto& p : points) images.push_back(map.apply(p));
  cert.injective_on_points = std::set<Point>(images.begin(), images.end()).size() == images.size();

  std::vector<Curve> curve_images;
  curve_images.reserve(curves.size());
  try {
    for (const auto& c : curves) curve_images.push_back(map.apply(c));
  } catch (const InputError&) {
    // a curve collapsed to a point
    return cert;
  }

  cert.curve_images_distinct = true;
  for (std::size_t i = 0; i < curve_images.size() && cert.curve_images_distinct; ++i) {
    const auto& pi = curve_images[i].parametrization();
    for (std::size_t j = i + 1; j < curve_images.size(); ++j) {
      // two distinct irreducible curves share at most deg_i * deg_j points
      const int samples = curve_images[i].degree() * curve_images[j].degree() + 2;
      bool all_on = true;
      for (int t = 0; t < samples && all_on; ++t)
        all_on = point_on_curve(pi.at(Rational(t)), curve_images[j]);
      if (all_on) {
        cert.curve_images_distinct = false;
        break;
      }
    }
  }

  cert.incidences_preserved = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < curves.size(); ++j) {
      const bool before = point_on_curve(points[i], curves[j]);
      const bool after = point_on_curve(images[i], curve_images[j]);
      cert.original_incidences += before;
      cert.projected_incidences += after;
      if (before != after) cert.incidences_preserved = false;
    }
  }
  return cert;
}

ProjectionMap make_projection(std::span<const Point> points, std::span<const Curve> curves,
                              std::uint64_t seed) {
  std::size_t d = 0;
  if (!points.empty()) d = points.front().dimension();
  else if (!curves.empty()) d = curves.front().dimension();
  if (d < 3) throw InputError("make_projection requires ambient dimension >= 3");

  detail::Rng rng(seed);
  for (int attempt = 1; attempt <= kProjectionRetries; ++attempt) {
    std::vector<Rational> direction(d);
    bool nonzero = false;
    for (auto& v : direction) {
      v = Rational(detail::uniform_int(rng, -9, 9), detail::uniform_int(rng, 1, 7));
      v.canonicalize();
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) continue;
    ProjectionMap map(std::move(direction), seed);
    auto cert = certify_projection(map, points, curves);
    if (cert.ok()) {
      map.set_certificate(cert, attempt);
      return map;
    }
  }
  throw GenericityFailure("no certified generic projection after " +
                          std::to_string(kProjectionRetries) + " attempts");
}

}  // namespace incidence
