#include "incidence/geometry/predicates.hpp"

#include "incidence/algebra/root_isolation.hpp"
#include "incidence/errors.hpp"

namespace incidence {

UvPolynomial restrict_to_parametrization(const MvPolynomial& p, const Parametrization& param) {
  if (p.dimension() != param.dimension())
    throw InputError("polynomial dimension does not match curve dimension");
  if (p.is_zero()) return {};
  const auto total = static_cast<unsigned>(p.degree());
  const std::size_t d = param.dimension();
  const bool homogenize = !param.polynomial();

  std::vector<std::vector<UvPolynomial>> powers(d);
  for (std::size_t i = 0; i < d; ++i) powers[i].push_back(UvPolynomial::constant(1));
  std::vector<UvPolynomial> w_powers{UvPolynomial::constant(1)};
  const Rational w_const = param.denominator.coefficient(0);

  UvPolynomial result;
  for (const auto& [e, c] : p.terms()) {
    UvPolynomial term = UvPolynomial::constant(c);
    for (std::size_t i = 0; i < d; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * param.numerators[i]);
      term = term * pw[e[i]];
    }
    const unsigned missing = total - total_degree(e);
    if (homogenize) {
      while (w_powers.size() <= missing) w_powers.push_back(w_powers.back() * param.denominator);
      term = term * w_powers[missing];
    } else if (w_const != 1) {
      // constant denominator: divide through instead of multiplying
      Rational scale = 1;
      for (unsigned k = 0; k < total - missing; ++k) scale /= w_const;
      term *= scale;
    }
    result += term;
  }
  return result;
}

UvPolynomial restrict_to_curve(const MvPolynomial& p, const Curve& curve) {
  return restrict_to_parametrization(p, curve.parametrization());
}

bool point_on_parametrization(const Point& p, const Parametrization& param) {
  if (p.dimension() != param.dimension()) return false;
  if (auto inf = param.at_infinity(); inf && *inf == p) return true;

  // gamma(t) = p  <=>  num_i(t) - p_i w(t) = 0 for every i
  UvPolynomial common;
  for (std::size_t i = 0; i < param.dimension(); ++i) {
    UvPolynomial h = param.numerators[i] - param.denominator * p[i];
    if (h.is_zero()) continue;
    if (h.degree() == 0) return false;
    if (h.degree() == 1) {
      // single candidate parameter: check it directly
      const Rational t = -h.coefficient(0) / h.coefficient(1);
      for (std::size_t j = 0; j < param.dimension(); ++j)
        if ((param.numerators[j] - param.denominator * p[j]).evaluate(t) != 0) return false;
      return true;
    }
    common = common.is_zero() ? h.monic() : gcd(common, h);
    if (common.degree() == 0) return false;
  }
  if (common.is_zero()) return true;  // every coordinate equation vanishes identically
  return has_real_root(common);
}

bool point_on_curve(const Point& p, const Curve& curve) {
  if (p.dimension() != curve.dimension()) return false;
  const auto& system = curve.implicit_system();
  if (!system.empty()) {
    for (const auto& eq : system)
      if (eq.evaluate(p.view()) != 0) return false;
    return true;
  }
  return point_on_parametrization(p, curve.parametrization());
}

std::size_t curve_pair_intersections(const Curve& a, const Curve& b) {
  if (a.dimension() != b.dimension()) throw InputError("curves live in different dimensions");
  const Curve* parametric = nullptr;
  const Curve* implicit = nullptr;
  if (a.has_parametrization() && !b.implicit_system().empty()) {
    parametric = &a;
    implicit = &b;
  } else if (b.has_parametrization() && !a.implicit_system().empty()) {
    parametric = &b;
    implicit = &a;
  } else {
    throw UnsupportedRepresentation(
        "curve_pair_intersections needs one parametrized and one implicit curve");
  }
  const auto& param = parametric->parametrization();
  UvPolynomial common;
  for (const auto& eq : implicit->implicit_system()) {
    UvPolynomial r = restrict_to_parametrization(eq, param);
    if (r.is_zero()) continue;
    common = common.is_zero() ? r.monic() : gcd(common, r);
  }
  if (common.is_zero())
    throw CommonComponent("curves " + std::to_string(a.id()) + " and " + std::to_string(b.id()) +
                          " share a component");
  std::size_t count = common.degree() == 0 ? 0 : isolate_real_roots(common).count();
  if (auto inf = param.at_infinity(); inf && point_on_curve(*inf, *implicit)) ++count;
  return count;
}

bool curve_in_variety(const Curve& curve, const MvPolynomial& g) {
  return restrict_to_curve(g, curve).is_zero();
}

}  // namespace incidence
