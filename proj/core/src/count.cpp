#include "incidence/incidence/count.hpp"

#include <algorithm>
#include <cmath>

#include "incidence/bounds/admissibility.hpp"
#include "incidence/detail/parallel.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/predicates.hpp"
#include "incidence/geometry/projection.hpp"
#include "incidence/partition/partition.hpp"

namespace incidence {

std::string_view to_string(CountMethod method) {
  return method == CountMethod::oracle ? "oracle" : "partitioned";
}

namespace {

struct Sub {
  std::vector<const Point*> points;
  std::vector<std::size_t> point_ids;
  std::vector<const Curve*> curves;
  std::vector<std::size_t> curve_ids;

  std::size_t m() const { return points.size(); }
  std::size_t n() const { return curves.size(); }
};

struct Counter {
  const CountOptions& options;
  std::vector<IncidencePair> pairs;
  std::vector<LevelTrace> levels;
  bool partition_fallback = false;

  std::uint64_t brute(const Sub& sub) {
    const std::size_t chunks = detail::chunk_count(sub.m(), options.threads);
    std::vector<std::vector<IncidencePair>> found(chunks);
    detail::parallel_chunks(sub.m(), options.threads,
                            [&](std::size_t c, std::size_t begin, std::size_t end) {
                              auto& out = found[c];
                              for (std::size_t i = begin; i < end; ++i)
                                for (std::size_t j = 0; j < sub.n(); ++j)
                                  if (point_on_curve(*sub.points[i], *sub.curves[j]))
                                    out.emplace_back(sub.point_ids[i], sub.curve_ids[j]);
                            });
    std::uint64_t total = 0;
    for (auto& chunk : found) {
      total += chunk.size();
      if (options.collect_pairs) pairs.insert(pairs.end(), chunk.begin(), chunk.end());
    }
    return total;
  }

  std::uint64_t solve(const Sub& sub, int depth, std::uint64_t seed) {
    if (sub.m() == 0 || sub.n() == 0) return 0;
    if (depth >= options.depth_cap || sub.m() * sub.n() <= options.brute_threshold)
      return brute(sub);
    for (const Curve* c : sub.curves)
      if (!c->has_parametrization())
        throw UnsupportedRepresentation("partitioned counting needs parametrized curves");

    const std::size_t d = sub.points.front()->dimension();
    std::vector<Point> local;
    local.reserve(sub.m());
    for (const Point* p : sub.points) local.push_back(*p);

    Partition partition;
    try {
      partition = build_partition(local, options.r, {options.delta, seed, 64});
    } catch (const PartitionFailure&) {
      partition_fallback = true;
      return brute(sub);
    }

    LevelTrace lvl;
    lvl.depth = depth;
    lvl.dimension = d;
    lvl.m = sub.m();
    lvl.n = sub.n();
    lvl.r = partition.r;
    lvl.product_degree = partition.product_degree();
    lvl.m0 = partition.zero_bucket.size();
    lvl.sum_mi = partition.cell_point_total();
    lvl.max_cell = partition.max_cell_size();
    lvl.cell_bound = partition.cell_size_bound().get_d();

    std::vector<CurveCells> visits(sub.n());
    detail::parallel_chunks(sub.n(), options.threads,
                            [&](std::size_t, std::size_t begin, std::size_t end) {
                              for (std::size_t j = begin; j < end; ++j)
                                visits[j] = curve_cells(partition, *sub.curves[j]);
                            });

    Sub zero_points, contained, crossing;
    for (std::size_t i : partition.zero_bucket) {
      zero_points.points.push_back(sub.points[i]);
      zero_points.point_ids.push_back(sub.point_ids[i]);
    }
    const auto degf = static_cast<std::size_t>(lvl.product_degree);
    for (std::size_t j = 0; j < sub.n(); ++j) {
      Sub& target = visits[j].in_zero_set ? contained : crossing;
      target.curves.push_back(sub.curves[j]);
      target.curve_ids.push_back(sub.curve_ids[j]);
      if (visits[j].in_zero_set) continue;
      const auto deg = static_cast<std::size_t>(sub.curves[j]->degree());
      lvl.crossing_budget += deg * degf;
      lvl.max_curve_cells = std::max(lvl.max_curve_cells, visits[j].cells.size());
      if (visits[j].cells.size() > deg * degf + 1) lvl.bezout_ok = false;
    }
    lvl.n0 = contained.n();
    lvl.n_prime = crossing.n();

    std::uint64_t total = 0;
    std::vector<double> per_cell;
    std::uint64_t child = 0;
    for (const auto& [sv, cell] : partition.cells) {
      Sub part;
      for (std::size_t i : cell.point_ids) {
        part.points.push_back(sub.points[i]);
        part.point_ids.push_back(sub.point_ids[i]);
      }
      for (std::size_t j = 0; j < sub.n(); ++j) {
        if (visits[j].in_zero_set || !visits[j].cells.contains(sv)) continue;
        part.curves.push_back(sub.curves[j]);
        part.curve_ids.push_back(sub.curve_ids[j]);
      }
      ++lvl.cells_used;
      lvl.sum_ni += part.n();
      per_cell.push_back(static_cast<double>(part.n()));
      total += solve(part, depth + 1, seed * 31 + ++child);
    }

    // P_0 against curves crossing Z(f) properly.
    crossing.points = zero_points.points;
    crossing.point_ids = zero_points.point_ids;
    const std::uint64_t crossing_count = brute(crossing);
    lvl.crossing_incidences = crossing_count;
    total += crossing_count;

    // P_0 against curves inside Z(f).
    contained.points = zero_points.points;
    contained.point_ids = zero_points.point_ids;
    std::uint64_t zero_count = 0;
    if (contained.m() > 0 && contained.n() > 0) {
      if (d >= 3) {
        zero_count = projected(contained, depth, seed * 31 + ++child, lvl);
      } else {
        zero_count = brute(contained);
      }
    }
    lvl.zero_set_incidences = zero_count;
    total += zero_count;

    for (const auto& alpha : counter_holder_exponents(static_cast<int>(d), options.k))
      if (!holder_check(per_cell, alpha)) lvl.holder_ok = false;
    levels.push_back(lvl);
    return total;
  }

  std::uint64_t projected(const Sub& sub, int depth, std::uint64_t seed, LevelTrace& lvl) {
    std::vector<Point> pts;
    std::vector<Curve> crv;
    for (const Point* p : sub.points) pts.push_back(*p);
    for (const Curve* c : sub.curves) crv.push_back(*c);
    std::optional<ProjectionMap> map;
    try {
      map.emplace(make_projection(pts, crv, seed));
    } catch (const GenericityFailure&) {
      lvl.projection_fallback = true;
      return brute(sub);
    }
    lvl.projected = true;
    std::vector<Point> images;
    std::vector<Curve> curve_images;
    images.reserve(pts.size());
    curve_images.reserve(crv.size());
    for (const auto& p : pts) images.push_back(map->apply(p));
    for (const auto& c : crv) curve_images.push_back(map->apply(c));
    Sub down;
    down.point_ids = sub.point_ids;
    down.curve_ids = sub.curve_ids;
    for (const auto& p : images) down.points.push_back(&p);
    for (const auto& c : curve_images) down.curves.push_back(&c);
    return solve(down, depth + 1, seed);
  }
};

Sub whole(std::span<const Point> points, std::span<const Curve> curves) {
  Sub sub;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sub.points.push_back(&points[i]);
    sub.point_ids.push_back(i);
  }
  for (std::size_t j = 0; j < curves.size(); ++j) {
    sub.curves.push_back(&curves[j]);
    sub.curve_ids.push_back(j);
  }
  return sub;
}

void check_dimensions(std::span<const Point> points, std::span<const Curve> curves) {
  const std::size_t d = !points.empty() ? points.front().dimension()
                        : !curves.empty() ? curves.front().dimension()
                                          : 0;
  for (const auto& p : points)
    if (p.dimension() != d) throw InputError("points of mixed dimension");
  for (const auto& c : curves)
    if (c.dimension() != d) throw InputError("curve dimension does not match the points");
}

IncidenceReport finish(Counter& counter, std::uint64_t count, CountMethod method) {
  IncidenceReport report;
  report.count = count;
  report.method = method;
  report.partition_fallback = counter.partition_fallback;
  report.levels = std::move(counter.levels);
  std::stable_sort(report.levels.begin(), report.levels.end(),
            [](const LevelTrace& a, const LevelTrace& b) { return a.depth < b.depth; });
  if (counter.options.collect_pairs && counter.pairs.size() <= counter.options.pair_limit) {
    std::sort(counter.pairs.begin(), counter.pairs.end());
    report.pairs = std::move(counter.pairs);
  }
  return report;
}

}  // namespace

IncidenceReport count_brute(std::span<const Point> points, std::span<const Curve> curves,
                            const CountOptions& options) {
  check_dimensions(points, curves);
  Counter counter{options, {}, {}, false};
  const std::uint64_t count = counter.brute(whole(points, curves));
  return finish(counter, count, CountMethod::oracle);
}

IncidenceReport count_partitioned(std::span<const Point> points, std::span<const Curve> curves,
                                  const CountOptions& options) {
  check_dimensions(points, curves);
  if (options.r < 2) throw InputError("r must be at least 2");
  if (options.depth_cap < 0) throw InputError("depth cap must be nonnegative");
  Counter counter{options, {}, {}, false};
  const std::uint64_t count = counter.solve(whole(points, curves), 0, options.seed);
  // Instances that never reached a partition were answered by the oracle.
  return finish(counter, count,
                counter.levels.empty() ? CountMethod::oracle : CountMethod::partitioned);
}

RichPointSet rich_points(std::span<const Point> points, std::span<const Curve> curves,
                         unsigned threshold, unsigned threads) {
  if (threshold < 1) throw InputError("richness threshold must be at least 1");
  check_dimensions(points, curves);
  std::vector<std::size_t> degree(points.size(), 0);
  detail::parallel_chunks(points.size(), threads,
                          [&](std::size_t, std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i)
                              for (const auto& c : curves)
                                if (point_on_curve(points[i], c)) ++degree[i];
                          });
  RichPointSet out;
  out.threshold = threshold;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (degree[i] >= threshold) out.points.emplace_back(i, degree[i]);
  return out;
}

}  // namespace incidence
