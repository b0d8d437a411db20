#include "incidence/incidence/audit.hpp"

#include <algorithm>
#include <set>

#include "incidence/algebra/poly_text.hpp"
#include "incidence/detail/random.hpp"
#include "incidence/errors.hpp"
#include "incidence/geometry/predicates.hpp"

namespace incidence {

std::string_view to_string(DofWitness::Kind kind) {
  switch (kind) {
    case DofWitness::Kind::too_many_curves: return "too_many_curves";
    case DofWitness::Kind::too_many_intersections: return "too_many_intersections";
    case DofWitness::Kind::common_component: return "common_component";
  }
  return "";
}

std::string_view to_string(KstOutcome outcome) {
  switch (outcome) {
    case KstOutcome::free: return "free";
    case KstOutcome::contains: return "contains";
    case KstOutcome::indeterminate: return "indeterminate";
  }
  return "";
}

namespace {

constexpr std::size_t kMaxWitnesses = 16;

struct IncidenceLists {
  std::vector<std::vector<std::size_t>> curves_at;  // per point, sorted
  std::vector<std::vector<std::size_t>> points_on;  // per curve, sorted
};

IncidenceLists incidence_lists(std::span<const Point> points, std::span<const Curve> curves) {
  IncidenceLists out;
  out.curves_at.resize(points.size());
  out.points_on.resize(curves.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < curves.size(); ++j)
      if (point_on_curve(points[i], curves[j])) {
        out.curves_at[i].push_back(j);
        out.points_on[j].push_back(i);
      }
  return out;
}

std::vector<std::size_t> common_curves(const IncidenceLists& lists,
                                       const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> common = lists.curves_at[subset.front()];
  for (std::size_t i = 1; i < subset.size() && !common.empty(); ++i) {
    std::vector<std::size_t> next;
    const auto& other = lists.curves_at[subset[i]];
    std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

/// Calls visit(subset) on every k-subset of `items` in lexicographic order
/// until visit returns false. Returns false when stopped early.
template <typename Visit>
bool for_each_subset(const std::vector<std::size_t>& items, std::size_t k, Visit&& visit) {
  if (k == 0 || k > items.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!visit(subset)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Visits every k-subset of points that lies on at least one common curve
/// (each such subset is reached once per curve through it), or `budget`
/// random ones when there are more than `budget`. Returns true when the
/// enumeration was exhaustive.
template <typename Visit>
bool scan_curve_subsets(const IncidenceLists& lists, std::size_t k, std::size_t budget,
                        std::uint64_t seed, std::size_t& checked, Visit&& visit) {
  double total = 0;
  std::vector<std::size_t> eligible;
  for (std::size_t j = 0; j < lists.points_on.size(); ++j) {
    const double c = choose(lists.points_on[j].size(), k);
    total += c;
    if (c > 0) eligible.push_back(j);
  }
  if (total <= static_cast<double>(budget)) {
    for (std::size_t j : eligible) {
      const bool go_on = for_each_subset(lists.points_on[j], k, [&](const auto& subset) {
        ++checked;
        return visit(subset);
      });
      if (!go_on) break;
    }
    return true;
  }
  detail::Rng rng(seed);
  std::vector<std::size_t> subset;
  for (std::size_t draw = 0; draw < budget; ++draw) {
    const auto& pts = lists.points_on[eligible[static_cast<std::size_t>(
        detail::uniform_int(rng, 0, static_cast<std::int64_t>(eligible.size()) - 1))]];
    std::vector<std::size_t> pool = pts;
    subset.clear();
    for (std::size_t i = 0; i < k; ++i) {
      const auto pick = static_cast<std::size_t>(
          detail::uniform_int(rng, 0, static_cast<std::int64_t>(pool.size() - i) - 1));
      std::swap(pool[i], pool[i + pick]);
      subset.push_back(pool[i]);
    }
    std::sort(subset.begin(), subset.end());
    ++checked;
    if (!visit(subset)) break;
  }
  return false;
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                  bool& ok) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) {
      ok = false;
      return {};
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  ok = true;
  return x;
}

/// Normal of the hyperplane through d points, or empty when they are
/// affinely dependent. Scaled so its first nonzero entry is 1.
std::vector<Rational> hyperplane_normal(const std::vector<const Point*>& pts) {
  const std::size_t d = pts.front()->dimension();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = (*pts[i])[c] - (*pts[0])[c];
    rows.push_back(std::move(row));
  }
  // Row-reduce the (d-1) x d system; a rank-(d-1) matrix leaves one free column.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t cc = 0; cc < d; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  if (rank != d - 1) return {};
  std::size_t free_col = 0;
  while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) ++free_col;
  std::vector<Rational> normal(d, Rational(0));
  normal[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) normal[pivot_cols[r]] = -rows[r][free_col];
  Rational lead = 0;
  for (const auto& v : normal)
    if (sgn(v) != 0) {
      lead = v;
      break;
    }
  for (auto& v : normal) v /= lead;
  return normal;
}

template <typename Make>
std::vector<Surface> surfaces_through_tuples(std::span<const Point> points, std::size_t tuple,
                                             std::size_t max_surfaces, std::uint64_t seed,
                                             Make&& make) {
  std::vector<Surface> out;
  std::set<std::string> seen;
  if (points.size() < tuple || max_surfaces == 0) return out;
  auto consider = [&](const std::vector<std::size_t>& idx) {
    std::vector<const Point*> pts;
    for (std::size_t i : idx) pts.push_back(&points[i]);
    std::optional<Surface> s = make(pts);
    if (!s) return true;
    const std::string key = format_polynomial(s->equation);
    if (seen.insert(key).second) out.push_back(std::move(*s));
    return out.size() < max_surfaces;
  };
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (choose(points.size(), tuple) <= 4.0 * static_cast<double>(max_surfaces)) {
    for_each_subset(all, tuple, consider);
    return out;
  }
  detail::Rng rng(seed);
  for (std::size_t draw = 0; draw < 20 * max_surfaces; ++draw) {
    std::vector<std::size_t> pool = all, idx;
    for (std::size_t i = 0; i < tuple; ++i) {
      const auto pick = static_cast<std::size_t>(
          detail::uniform_int(rng, 0, static_cast<std::int64_t>(pool.size() - i) - 1));
      std::swap(pool[i], pool[i + pick]);
      idx.push_back(pool[i]);
    }
    std::sort(idx.begin(), idx.end());
    if (!consider(idx)) break;
  }
  return out;
}

}  // namespace

AuditReport audit_dof(const CurveFamily& family, std::span<const Point> sample,
                      std::size_t sample_budget, std::uint64_t seed) {
  if (family.k < 2 || family.s < 1) throw InputError("families need k >= 2 and s >= 1");
  AuditReport report;
  report.family = family.name;
  report.k = family.k;
  report.s = family.s;
  const auto s = static_cast<std::size_t>(family.s);
  const auto& curves = family.curves;

  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      ++report.pairs_checked;
      DofWitness w;
      w.curve_ids = {a, b};
      try {
        w.observed = curve_pair_intersections(curves[a], curves[b]);
        if (w.observed <= s) continue;
        w.kind = DofWitness::Kind::too_many_intersections;
      } catch (const CommonComponent&) {
        w.kind = DofWitness::Kind::common_component;
      }
      report.passed = false;
      if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
    }

  const IncidenceLists lists = incidence_lists(sample, curves);
  std::set<std::vector<std::size_t>> reported;
  report.exhaustive = scan_curve_subsets(
      lists, static_cast<std::size_t>(family.k), sample_budget, seed, report.subsets_checked,
      [&](const std::vector<std::size_t>& subset) {
        auto common = common_curves(lists, subset);
        if (common.size() > s && reported.insert(subset).second) {
          report.passed = false;
          if (report.witnesses.size() < kMaxWitnesses)
            report.witnesses.push_back(
                {DofWitness::Kind::too_many_curves, subset, common, common.size()});
        }
        return true;
      });
  return report;
}

KstResult kst_check(std::span<const Point> points, std::span<const Curve> curves, int k, int s,
                    std::size_t budget) {
  if (k < 1 || s < 0) throw InputError("K_{k,s+1} needs k >= 1 and s >= 0");
  const IncidenceLists lists = incidence_lists(points, curves);
  KstResult out;
  const auto limit = static_cast<std::size_t>(s);
  const bool exhaustive = scan_curve_subsets(
      lists, static_cast<std::size_t>(k), budget, 0, out.subsets_checked,
      [&](const std::vector<std::size_t>& subset) {
        auto common = common_curves(lists, subset);
        if (common.size() <= limit) return true;
        out.outcome = KstOutcome::contains;
        out.point_ids = subset;
        common.resize(limit + 1);
        out.curve_ids = std::move(common);
        return false;
      });
  if (out.outcome != KstOutcome::contains)
    out.outcome = exhaustive ? KstOutcome::free : KstOutcome::indeterminate;
  return out;
}

AuditReport audit_containment(std::span<const Curve> curves, std::span<const Surface> surfaces) {
  AuditReport report;
  report.family = "containment";
  for (const auto& surface : surfaces) {
    SurfaceCount sc{surface.label, surface.dimension, 0};
    for (const auto& c : curves)
      if (curve_in_variety(c, surface.equation)) ++sc.contained;
    auto& q = report.q_hat[surface.dimension];
    q = std::max(q, sc.contained);
    report.containment.push_back(std::move(sc));
  }
  return report;
}

std::vector<Surface> hyperplanes_through_samples(std::span<const Point> points,
                                                 std::size_t max_surfaces, std::uint64_t seed) {
  if (points.empty()) return {};
  const std::size_t d = points.front().dimension();
  return surfaces_through_tuples(
      points, d, max_surfaces, seed, [d](const std::vector<const Point*>& pts) {
        std::optional<Surface> out;
        const auto normal = hyperplane_normal(pts);
        if (normal.empty()) return out;
        MvPolynomial eq(d);
        Rational offset = 0;
        for (std::size_t c = 0; c < d; ++c) {
          eq = eq + normal[c] * MvPolynomial::variable(d, c);
          offset += normal[c] * (*pts[0])[c];
        }
        eq = eq - MvPolynomial::constant(d, offset);
        out = Surface{std::move(eq), static_cast<int>(d) - 1, ""};
        out->label = "hyperplane " + format_polynomial(out->equation);
        return out;
      });
}

std::vector<Surface> spheres_through_samples(std::span<const Point> points,
                                             std::size_t max_surfaces, std::uint64_t seed) {
  if (points.empty()) return {};
  if (points.front().dimension() != 3) throw InputError("sphere sampling needs points in R^3");
  return surfaces_through_tuples(
      points, 4, max_surfaces, seed, [](const std::vector<const Point*>& pts) {
        // x^2 + y^2 + z^2 + a x + b y + c z + e = 0 through the four points.
        std::optional<Surface> out;
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (const Point* p : pts) {
          a.push_back({(*p)[0], (*p)[1], (*p)[2], Rational(1)});
          b.push_back(-((*p)[0] * (*p)[0] + (*p)[1] * (*p)[1] + (*p)[2] * (*p)[2]));
        }
        bool ok = false;
        const auto coef = solve_exact(std::move(a), std::move(b), ok);
        if (!ok) return out;
        MvPolynomial eq = MvPolynomial::constant(3, coef[3]);
        for (std::size_t c = 0; c < 3; ++c) {
          const auto x = MvPolynomial::variable(3, c);
          eq = eq + x * x + coef[c] * x;
        }
        out = Surface{std::move(eq), 2, ""};
        out->label = "sphere " + format_polynomial(out->equation);
        return out;
      });
}

}  // namespace incidence
