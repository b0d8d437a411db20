#include "incidence/bounds/evaluators.hpp"

#include <cmath>

#include "incidence/bounds/admissibility.hpp"
#include "incidence/errors.hpp"

namespace incidence {

namespace {

Rational frac(long num, long den) {
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

BoundTerm power_term(std::string name, Rational em, Rational en, Rational eq = 0, int q_index = 0) {
  BoundTerm t;
  t.name = std::move(name);
  t.exp_m = std::move(em);
  t.exp_n = std::move(en);
  t.exp_q = std::move(eq);
  t.q_index = q_index;
  return t;
}

BoundTerm linear_term(std::string name, bool is_m) {
  BoundTerm t;
  t.name = std::move(name);
  (is_m ? t.exp_m : t.exp_n) = 1;
  t.linear = true;
  return t;
}

void require_k(int k) {
  if (k < 2) throw InputError("k must be at least 2");
}

void require_eps(const Rational& eps) {
  if (sgn(eps) < 0) throw InputError("eps must be nonnegative");
}

// q values are looked up by index: q_index 0 means no q factor.
void finish(BoundResult& result, double m, double n, const std::map<int, double>& q,
            double r = 1) {
  result.total = 0;
  double best = -1;
  for (auto& t : result.terms) {
    double qv = 1;
    if (t.q_index != 0) qv = q.at(t.q_index);
    t.value = term_value(t, m, n, qv, r);
    result.total += t.value;
    if (t.value > best) {
      best = t.value;
      result.dominant_term = t.name;
    }
  }
}

void attach(BoundResult& result, const AdmissibilityReport& adm) {
  result.admissible = adm.admissible;
  result.violations = adm.violations;
  for (const auto& v : adm.violations)
    result.warnings.push_back("q condition violated for (j, l) = (" + std::to_string(v.j) + ", " +
                              std::to_string(v.l) + ")");
}

double as_double(std::uint64_t v) { return static_cast<double>(v); }

}  // namespace

const BoundTerm& BoundResult::term(std::string_view name) const {
  for (const auto& t : terms)
    if (t.name == name) return t;
  throw InputError("no bound term named " + std::string(name));
}

std::string_view to_string(Evaluator e) {
  switch (e) {
    case Evaluator::pach_sharir: return "pach_sharir";
    case Evaluator::main3d: return "main3d";
    case Evaluator::maind: return "maind";
    case Evaluator::gk3d: return "gk3d";
    case Evaluator::ss4d: return "ss4d";
    case Evaluator::socg14: return "socg14";
    case Evaluator::kst: return "kst";
    case Evaluator::rich: return "rich";
  }
  return "";
}

Evaluator parse_evaluator(std::string_view name) {
  for (Evaluator e : {Evaluator::pach_sharir, Evaluator::main3d, Evaluator::maind, Evaluator::gk3d,
                      Evaluator::ss4d, Evaluator::socg14, Evaluator::kst, Evaluator::rich})
    if (to_string(e) == name) return e;
  throw InputError("unknown evaluator '" + std::string(name) + "'");
}

double term_value(const BoundTerm& t, double m, double n, double q, double r) {
  auto pw = [](double base, const Rational& e) {
    if (sgn(e) == 0) return 1.0;
    return std::pow(base, e.get_d());
  };
  return pw(m, t.exp_m) * pw(n, t.exp_n) * pw(q, t.exp_q) * pw(r, t.exp_r);
}

BoundResult eval_pach_sharir(std::uint64_t m, std::uint64_t n, int k) {
  require_k(k);
  BoundResult res;
  res.evaluator = "pach_sharir";
  res.terms.push_back(power_term("leading", frac(k, 2 * k - 1), frac(2 * k - 2, 2 * k - 1)));
  res.terms.push_back(linear_term("m", true));
  res.terms.push_back(linear_term("n", false));
  finish(res, as_double(m), as_double(n), {});
  return res;
}

BoundResult eval_main3d(std::uint64_t m, std::uint64_t n, int k, std::uint64_t q2,
                        const Rational& eps) {
  require_k(k);
  require_eps(eps);
  BoundResult res;
  res.evaluator = "main3d";
  res.terms.push_back(
      power_term("leading", frac(k, 3 * k - 2) + eps, frac(3 * k - 3, 3 * k - 2)));
  res.terms.push_back(power_term("j=2", frac(k, 2 * k - 1) + eps, frac(3 * k - 3, 4 * k - 2),
                                 frac(k - 1, 4 * k - 2), 2));
  res.terms.push_back(linear_term("m", true));
  res.terms.push_back(linear_term("n", false));
  if (q2 > n) {
    res.admissible = false;
    res.violations.push_back({2, 3});
    res.warnings.push_back("q2 exceeds n");
  }
  finish(res, as_double(m), as_double(n), {{2, as_double(q2)}});
  return res;
}

BoundResult eval_maind(const BoundSpec& spec) {
  const int d = spec.d;
  const long k = spec.k;
  require_k(spec.k);
  require_eps(spec.eps);
  if (d < 2) throw InputError("d must be at least 2");
  BoundResult res;
  res.evaluator = "maind";
  res.terms.push_back(
      power_term("leading", frac(k, d * k - d + 1) + spec.eps, frac(d * k - d, d * k - d + 1)));
  std::map<int, double> qv;
  for (long j = 2; j <= d - 1; ++j) {
    if (!spec.q.contains(static_cast<int>(j)))
      throw InputError("missing q_" + std::to_string(j));
    const long den = (d - 1) * (j * k - j + 1);
    res.terms.push_back(power_term("j=" + std::to_string(j), frac(k, j * k - j + 1) + spec.eps,
                                   frac(d * (j - 1) * (k - 1), den),
                                   frac((d - j) * (k - 1), den), static_cast<int>(j)));
    qv[static_cast<int>(j)] = as_double(spec.q.at(static_cast<int>(j)));
  }
  res.terms.push_back(linear_term("m", true));
  res.terms.push_back(linear_term("n", false));
  if (d >= 3) attach(res, check_q_conditions(d, spec.q, spec.n));
  finish(res, as_double(spec.m), as_double(spec.n), qv);
  return res;
}

BoundResult eval_gk3d(std::uint64_t m, std::uint64_t n, std::uint64_t q2) {
  BoundResult res;
  res.evaluator = "gk3d";
  res.terms.push_back(power_term("leading", frac(1, 2), frac(3, 4)));
  res.terms.push_back(power_term("j=2", frac(2, 3), frac(1, 3), frac(1, 3), 2));
  res.terms.push_back(linear_term("m", true));
  res.terms.push_back(linear_term("n", false));
  if (q2 > n) {
    res.admissible = false;
    res.warnings.push_back("q2 exceeds n");
  }
  finish(res, as_double(m), as_double(n), {{2, as_double(q2)}});
  return res;
}

BoundResult eval_ss4d(std::uint64_t m, std::uint64_t n, std::uint64_t q2, std::uint64_t q3) {
  BoundResult res;
  res.evaluator = "ss4d";
  const BigInt M(std::to_string(m)), N(std::to_string(n));
  const bool sharp = ipow(M, 7) <= ipow(N, 6) || ipow(M, 3) >= ipow(N, 5);
  const std::string factor = sharp ? "" : "2^(c*sqrt(log m))";
  auto leading = power_term("leading", frac(2, 5), frac(4, 5));
  leading.symbolic_factor = factor;
  auto mterm = linear_term("m", true);
  mterm.symbolic_factor = factor;
  res.terms.push_back(leading);
  res.terms.push_back(power_term("j=3", frac(1, 2), frac(1, 2), frac(1, 4), 3));
  res.terms.push_back(power_term("j=2", frac(2, 3), frac(1, 3), frac(1, 3), 2));
  res.terms.push_back(mterm);
  res.terms.push_back(linear_term("n", false));
  if (!sharp)
    res.warnings.push_back("n^(6/7) < m < n^(5/3): leading and m terms carry 2^(c*sqrt(log m))");
  if (q2 > n || q3 > n) {
    res.admissible = false;
    res.warnings.push_back("q2 and q3 must not exceed n");
  }
  finish(res, as_double(m), as_double(n), {{2, as_double(q2)}, {3, as_double(q3)}});
  return res;
}

BoundResult eval_socg14(std::uint64_t m, std::uint64_t n, std::uint64_t q, std::uint64_t s,
                        const Rational& eps) {
  require_eps(eps);
  BoundResult res;
  res.evaluator = "socg14";
  res.terms.push_back(power_term("leading", frac(2, 5) + eps, frac(4, 5)));
  res.terms.push_back(power_term("j=3", frac(1, 2) + eps, frac(2, 3), frac(1, 12), 3));
  res.terms.push_back(power_term("j=2", frac(2, 3) + eps, frac(4, 9), frac(2, 9), 2));
  res.terms.push_back(linear_term("m", true));
  res.terms.push_back(linear_term("n", false));
  if (q > n || s > n) {
    res.admissible = false;
    res.warnings.push_back("q and s must not exceed n");
  }
  finish(res, as_double(m), as_double(n), {{2, as_double(s)}, {3, as_double(q)}});
  return res;
}

BoundResult eval_kst(std::uint64_t m, std::uint64_t n, int k) {
  require_k(k);
  BoundResult res;
  res.evaluator = "kst";
  res.terms.push_back(power_term("leading", 1, 1 - frac(1, k)));
  res.terms.push_back(linear_term("n", false));
  finish(res, as_double(m), as_double(n), {});
  return res;
}

BoundResult eval_rich(std::uint64_t n, int k, std::uint64_t q2, std::uint64_t r,
                      const Rational& eps) {
  require_k(k);
  require_eps(eps);
  if (r < 1) throw InputError("richness r must be at least 1");
  BoundResult res;
  res.evaluator = "rich";
  auto lead = power_term("leading", 0, frac(3, 2) + eps);
  lead.exp_r = -(frac(3 * k - 2, 2 * k - 2) + eps);
  auto second = power_term("j=2", 0, frac(3, 2) + eps, frac(1, 2) + eps, 2);
  second.exp_r = -(frac(2 * k - 1, k - 1) + eps);
  BoundTerm tail;
  tail.name = "n";
  tail.exp_n = 1;
  tail.exp_r = -1;
  tail.linear = true;
  res.terms = {lead, second, tail};
  if (q2 > n) {
    res.admissible = false;
    res.warnings.push_back("q2 exceeds n");
  }
  finish(res, 0, as_double(n), {{2, as_double(q2)}}, as_double(r));
  return res;
}

BoundResult evaluate(Evaluator e, const BoundSpec& spec) {
  auto q = [&](int j) {
    const auto it = spec.q.find(j);
    if (it == spec.q.end()) throw InputError("missing q_" + std::to_string(j));
    return it->second;
  };
  switch (e) {
    case Evaluator::pach_sharir: return eval_pach_sharir(spec.m, spec.n, spec.k);
    case Evaluator::main3d: return eval_main3d(spec.m, spec.n, spec.k, q(2), spec.eps);
    case Evaluator::maind: return eval_maind(spec);
    case Evaluator::gk3d: return eval_gk3d(spec.m, spec.n, q(2));
    case Evaluator::ss4d: return eval_ss4d(spec.m, spec.n, q(2), q(3));
    case Evaluator::socg14: return eval_socg14(spec.m, spec.n, q(3), q(2), spec.eps);
    case Evaluator::kst: return eval_kst(spec.m, spec.n, spec.k);
    case Evaluator::rich: return eval_rich(spec.n, spec.k, q(2), spec.m, spec.eps);
  }
  throw InputError("unknown evaluator");
}

}  // namespace incidence
