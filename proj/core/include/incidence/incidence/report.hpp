#pragma once

#include <span>
#include <string>

#include "incidence/bounds/evaluators.hpp"
#include "incidence/bounds/fit.hpp"
#include "incidence/incidence/audit.hpp"
#include "incidence/incidence/count.hpp"

namespace incidence {

/// Summary emitted by the `count` command: both methods, the agreement
/// flag, and the recursion trace.
struct CountSummary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  IncidenceReport oracle;
  IncidenceReport partitioned;
  std::vector<RichPointSet> rich;
  std::vector<AuditReport> audits;

  bool methods_agree() const { return oracle.count == partitioned.count; }
};

/// JSON object {m, n, d, count, method, methods_agree, oracle_count,
/// partitioned_count, levels, rich, audits}. Key order is fixed.
std::string count_summary_json(const CountSummary& summary);

/// One `point_id,curve_id` row per incident pair, with a header line.
std::string pairs_csv(std::span<const IncidencePair> pairs);

std::string audit_json(const AuditReport& report);
/// {dof, kst, containment} as emitted by the `audit` command.
std::string audit_bundle_json(const AuditReport& dof, const KstResult& kst,
                              const AuditReport& containment);
std::string rich_json(const RichPointSet& rich);

/// Exponents are serialized as exact "p/q" strings.
std::string bound_json(const BoundResult& result);
/// term,exp_m,exp_n,exp_q,j,exp_r,value,factor
std::string bound_csv(const BoundResult& result);

std::string fit_json(const FittedConstants& fit);

}  // namespace incidence
