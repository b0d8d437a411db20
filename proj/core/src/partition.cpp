#include "incidence/partition/partition.hpp"

#include <algorithm>

#include "incidence/algebra/poly_text.hpp"
#include "incidence/algebra/root_isolation.hpp"
#include "incidence/algebra/veronese.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/predicates.hpp"
#include "json.hpp"

namespace incidence {

int Partition::product_degree() const {
  int total = 0;
  for (const auto& g : factors) total += std::max(g.degree(), 0);
  return total;
}

MvPolynomial Partition::product() const {
  MvPolynomial f = MvPolynomial::constant(dimension, 1);
  for (const auto& g : factors) f = f * g;
  return f;
}

std::size_t Partition::max_cell_size() const {
  std::size_t best = 0;
  for (const auto& [sv, cell] : cells) best = std::max(best, cell.point_ids.size());
  return best;
}

std::size_t Partition::cell_point_total() const {
  std::size_t total = 0;
  for (const auto& [sv, cell] : cells) total += cell.point_ids.size();
  return total;
}

Rational Partition::cell_size_bound() const {
  Rational bound = static_cast<long>(point_count);
  const Rational ratio = Rational(1, 2) + delta;
  for (unsigned i = 0; i < factors.size(); ++i) bound *= ratio;
  return bound;
}

SignVector Partition::locate(const Point& p) const {
  SignVector sv;
  sv.reserve(factors.size());
  for (const auto& g : factors) {
    const int s = sgn(g.evaluate(p.view()));
    if (s == 0) return {};
    sv.push_back(s > 0 ? '+' : '-');
  }
  return sv;
}

unsigned round_up_power_of_two(unsigned r) {
  unsigned p = 2;
  while (p < r) p <<= 1u;
  return p;
}

unsigned rounds_for(unsigned r) {
  unsigned t = 0;
  for (unsigned p = round_up_power_of_two(r); p > 1; p >>= 1u) ++t;
  return t;
}

unsigned degree_budget(std::size_t d, unsigned rounds) {
  unsigned total = 0;
  for (unsigned i = 1; i <= rounds; ++i) total += min_lift_degree(d, std::size_t{1} << (i - 1));
  return total;
}

Partition build_partition(std::span<const Point> points, unsigned r,
                          const PartitionOptions& options) {
  if (points.empty()) throw InputError("build_partition needs at least one point");
  Partition part;
  part.dimension = points.front().dimension();
  part.point_count = points.size();
  part.r = round_up_power_of_two(std::max(r, 2u));
  part.delta = options.delta;
  part.seed = options.seed;
  for (const auto& p : points)
    if (p.dimension() != part.dimension) throw InputError("points of mixed dimension");

  const unsigned t = rounds_for(part.r);
  std::map<SignVector, std::vector<std::size_t>> classes;
  classes[""].resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) classes[""][i] = i;

  for (unsigned round = 0; round < t; ++round) {
    std::vector<std::vector<std::size_t>> subsets;
    for (auto& [sv, ids] : classes)
      if (!ids.empty()) subsets.push_back(ids);
    if (subsets.empty()) break;

    BisectOptions bopts;
    bopts.delta = options.delta;
    bopts.attempts = options.attempts;
    bopts.seed = options.seed * 1000003ull + round;
    BisectResult step = bisect_step(points, subsets, part.dimension, bopts);

    std::map<SignVector, std::vector<std::size_t>> next;
    for (auto& [sv, ids] : classes) {
      for (auto id : ids) {
        const int s = sgn(step.polynomial.evaluate(points[id].view()));
        if (s == 0) {
          part.zero_bucket.push_back(id);
        } else {
          next[sv + (s > 0 ? '+' : '-')].push_back(id);
        }
      }
    }
    classes = std::move(next);
    part.factors.push_back(std::move(step.polynomial));
    part.lift_degrees.push_back(step.lift_degree);
  }
  part.rounds = static_cast<unsigned>(part.factors.size());

  for (auto& [sv, ids] : classes) {
    if (ids.empty()) continue;
    CellRecord cell;
    cell.sign_vector = sv;
    cell.point_ids = std::move(ids);
    part.cells.emplace(sv, std::move(cell));
  }
  std::sort(part.zero_bucket.begin(), part.zero_bucket.end());

  // certificates: these follow from the per-round balance, so a violation
  // means an implementation bug
  if (part.cell_point_total() + part.zero_bucket.size() != part.point_count)
    throw InvariantBreach("partition lost or duplicated points");
  if (Rational(static_cast<long>(part.max_cell_size())) > part.cell_size_bound())
    throw InvariantBreach("partition cell exceeds m (1/2 + delta)^t");
  if (part.cells.size() > (std::size_t{1} << part.rounds))
    throw InvariantBreach("partition has more than 2^t cells");
  if (static_cast<unsigned>(part.product_degree()) > degree_budget(part.dimension, part.rounds))
    throw InvariantBreach("partition degree exceeds the lift budget");
  return part;
}

namespace {

// Rational strictly between two consecutive isolating intervals.
Rational separator(const UvPolynomial& sqfree, RootInterval a, RootInterval b) {
  while (!(a.hi < b.lo)) {
    if (a.hi == b.lo && !a.exact() && !b.exact()) return a.hi;  // shared non-root endpoint
    if (!a.exact()) a = refine_once(sqfree, a);
    if (!b.exact()) b = refine_once(sqfree, b);
  }
  return (a.hi + b.lo) / 2;
}

}  // namespace

CurveCells curve_cells(const Partition& partition, const Curve& curve) {
  const auto& param = curve.parametrization();
  CurveCells out;
  std::vector<UvPolynomial> restricted;
  restricted.reserve(partition.factors.size());
  UvPolynomial product = UvPolynomial::constant(1);
  for (const auto& g : partition.factors) {
    UvPolynomial r = restrict_to_parametrization(g, param);
    if (r.is_zero()) {
      out.in_zero_set = true;
      return out;
    }
    if (r.degree() > 0) product = product * square_free_part(r);
    restricted.push_back(std::move(r));
  }

  std::vector<Rational> samples;
  if (product.degree() <= 0) {
    samples.push_back(0);
  } else {
    const RootIsolation roots = isolate_real_roots(product);
    out.crossings = roots.count();
    const auto& iv = roots.intervals;
    if (iv.empty()) {
      samples.push_back(0);
    } else {
      samples.push_back(iv.front().lo - 1);
      for (std::size_t i = 0; i + 1 < iv.size(); ++i)
        samples.push_back(separator(roots.square_free, iv[i], iv[i + 1]));
      samples.push_back(iv.back().hi + 1);
    }
  }
  out.segments = samples.size();
  for (const auto& t : samples) {
    SignVector sv;
    for (const auto& r : restricted) {
      const int s = r.sign_at(t);
      if (s == 0) throw InvariantBreach("segment sample landed on the zero set");
      sv.push_back(s > 0 ? '+' : '-');
    }
    out.cells.insert(std::move(sv));
  }
  return out;
}

std::string partition_to_json(const Partition& partition) {
  nlohmann::ordered_json j;
  j["dimension"] = partition.dimension;
  j["m"] = partition.point_count;
  j["r"] = partition.r;
  j["rounds"] = partition.rounds;
  j["delta"] = to_string(partition.delta);
  j["seed"] = partition.seed;
  j["product_degree"] = partition.product_degree();
  j["degree_budget"] = degree_budget(partition.dimension, partition.rounds);
  j["max_cell"] = partition.max_cell_size();
  j["cell_bound"] = to_string(partition.cell_size_bound());
  auto factors = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < partition.factors.size(); ++i) {
    nlohmann::ordered_json f;
    f["lift_degree"] = partition.lift_degrees[i];
    f["polynomial"] = format_polynomial(partition.factors[i]);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [sv, cell] : partition.cells) {
    nlohmann::ordered_json c;
    c["sign"] = sv;
    c["points"] = cell.point_ids;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  j["zero_bucket"] = partition.zero_bucket;
  return j.dump(2);
}

}  // namespace incidence
