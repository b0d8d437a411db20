#include "incidence/incidence/report.hpp"

#include <sstream>

#include "json.hpp"

namespace incidence {

namespace {

using Json = nlohmann::ordered_json;

Json level_json(const LevelTrace& l) {
  Json j;
  j["depth"] = l.depth;
  j["dimension"] = l.dimension;
  j["m"] = l.m;
  j["n"] = l.n;
  j["r"] = l.r;
  j["deg_f"] = l.product_degree;
  j["m0"] = l.m0;
  j["n0"] = l.n0;
  j["n_prime"] = l.n_prime;
  j["sum_mi"] = l.sum_mi;
  j["sum_ni"] = l.sum_ni;
  j["cells_used"] = l.cells_used;
  j["max_cell"] = l.max_cell;
  j["cell_bound"] = l.cell_bound;
  j["crossing_incidences"] = l.crossing_incidences;
  j["crossing_budget"] = l.crossing_budget;
  j["zero_set_incidences"] = l.zero_set_incidences;
  j["max_curve_cells"] = l.max_curve_cells;
  j["bezout_ok"] = l.bezout_ok;
  j["holder_ok"] = l.holder_ok;
  j["projected"] = l.projected;
  j["projection_fallback"] = l.projection_fallback;
  return j;
}

Json rich_object(const RichPointSet& rich) {
  Json j;
  j["threshold"] = rich.threshold;
  j["size"] = rich.points.size();
  auto pts = Json::array();
  for (const auto& [id, count] : rich.points) pts.push_back(Json::array({id, count}));
  j["points"] = std::move(pts);
  return j;
}

Json audit_object(const AuditReport& a) {
  Json j;
  j["family"] = a.family;
  j["k"] = a.k;
  j["s"] = a.s;
  j["passed"] = a.passed;
  j["exhaustive"] = a.exhaustive;
  j["pairs_checked"] = a.pairs_checked;
  j["subsets_checked"] = a.subsets_checked;
  auto ws = Json::array();
  for (const auto& w : a.witnesses) {
    Json o;
    o["kind"] = to_string(w.kind);
    o["points"] = w.point_ids;
    o["curves"] = w.curve_ids;
    o["observed"] = w.observed;
    ws.push_back(std::move(o));
  }
  j["witnesses"] = std::move(ws);
  auto cs = Json::array();
  for (const auto& c : a.containment) {
    Json o;
    o["surface"] = c.label;
    o["dimension"] = c.dimension;
    o["contained"] = c.contained;
    cs.push_back(std::move(o));
  }
  j["containment"] = std::move(cs);
  Json q = Json::object();
  for (const auto& [dim, v] : a.q_hat) q["q" + std::to_string(dim)] = v;
  j["q_hat"] = std::move(q);
  return j;
}

}  // namespace

std::string count_summary_json(const CountSummary& s) {
  Json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["d"] = s.d;
  j["count"] = s.partitioned.count;
  j["method"] = to_string(s.partitioned.method);
  j["methods_agree"] = s.methods_agree();
  j["oracle_count"] = s.oracle.count;
  j["partitioned_count"] = s.partitioned.count;
  j["partition_fallback"] = s.partitioned.partition_fallback;
  auto levels = Json::array();
  for (const auto& l : s.partitioned.levels) levels.push_back(level_json(l));
  j["levels"] = std::move(levels);
  auto rich = Json::array();
  for (const auto& r : s.rich) rich.push_back(rich_object(r));
  j["rich"] = std::move(rich);
  auto audits = Json::array();
  for (const auto& a : s.audits) audits.push_back(audit_object(a));
  j["audits"] = std::move(audits);
  if (s.oracle.pairs) {
    auto pairs = Json::array();
    for (const auto& [p, c] : *s.oracle.pairs) pairs.push_back(Json::array({p, c}));
    j["pairs"] = std::move(pairs);
  }
  return j.dump(2) + "\n";
}

std::string pairs_csv(std::span<const IncidencePair> pairs) {
  std::ostringstream out;
  out << "point_id,curve_id\n";
  for (const auto& [p, c] : pairs) out << p << ',' << c << '\n';
  return out.str();
}

std::string audit_json(const AuditReport& report) { return audit_object(report).dump(2) + "\n"; }

std::string audit_bundle_json(const AuditReport& dof, const KstResult& kst,
                              const AuditReport& containment) {
  Json j;
  j["dof"] = audit_object(dof);
  Json k;
  k["outcome"] = to_string(kst.outcome);
  k["subsets_checked"] = kst.subsets_checked;
  k["points"] = kst.point_ids;
  k["curves"] = kst.curve_ids;
  j["kst"] = std::move(k);
  j["containment"] = audit_object(containment);
  return j.dump(2) + "\n";
}

std::string rich_json(const RichPointSet& rich) { return rich_object(rich).dump(2) + "\n"; }

std::string bound_json(const BoundResult& result) {
  Json j;
  j["evaluator"] = result.evaluator;
  j["admissible"] = result.admissible;
  auto violations = Json::array();
  for (const auto& v : result.violations) violations.push_back(Json::array({v.j, v.l}));
  j["violations"] = std::move(violations);
  j["warnings"] = result.warnings;
  j["total"] = result.total;
  j["dominant_term"] = result.dominant_term;
  auto terms = Json::array();
  for (const auto& t : result.terms) {
    Json o;
    o["term"] = t.name;
    o["exp_m"] = to_string(t.exp_m);
    o["exp_n"] = to_string(t.exp_n);
    o["exp_q"] = to_string(t.exp_q);
    o["j"] = t.q_index;
    o["exp_r"] = to_string(t.exp_r);
    o["value"] = t.value;
    o["factor"] = t.symbolic_factor;
    terms.push_back(std::move(o));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

std::string bound_csv(const BoundResult& result) {
  std::ostringstream out;
  out.precision(17);
  out << "term,exp_m,exp_n,exp_q,j,exp_r,value,factor\n";
  for (const auto& t : result.terms)
    out << t.name << ',' << to_string(t.exp_m) << ',' << to_string(t.exp_n) << ','
        << to_string(t.exp_q) << ',' << t.q_index << ',' << to_string(t.exp_r) << ',' << t.value
        << ',' << t.symbolic_factor << '\n';
  return out.str();
}

std::string fit_json(const FittedConstants& fit) {
  Json j;
  j["alpha1"] = fit.alpha1;
  j["alpha2"] = fit.alpha2;
  if (fit.loglog_slope) {
    j["loglog_slope"] = *fit.loglog_slope;
  } else {
    j["loglog_slope"] = nullptr;
  }
  j["slope_defined"] = fit.loglog_slope.has_value();
  j["residuals"] = fit.residuals;
  return j.dump(2) + "\n";
}

}  // namespace incidence
