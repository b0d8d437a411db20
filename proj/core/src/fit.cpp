#include "incidence/bounds/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "incidence/errors.hpp"

namespace incidence {

FittedConstants fit_constants(std::span<const FitSample> samples, Evaluator evaluator) {
  if (samples.empty()) throw FitUndefined("no samples to fit");
  std::vector<double> power(samples.size()), linear(samples.size());
  bool any_measured = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    BoundSpec spec = samples[i].spec;
    spec.eps = 0;
    const BoundResult res = evaluate(evaluator, spec);
    for (const auto& t : res.terms) (t.linear ? linear[i] : power[i]) += t.value;
    if (samples[i].measured < 0) throw InputError("measured counts must be nonnegative");
    if (samples[i].measured > 0) any_measured = true;
  }
  if (!any_measured) throw FitUndefined("every sample measured zero incidences");

  FittedConstants out;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (power[i] == 0 && samples[i].measured > 0) {
      if (linear[i] == 0) throw FitUndefined("positive count against a vanishing bound");
      out.alpha2 = std::max(out.alpha2, samples[i].measured / linear[i]);
    }
  bool any_power = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (power[i] == 0) continue;
    any_power = true;
    const double rest = samples[i].measured - out.alpha2 * linear[i];
    out.alpha1 = std::max(out.alpha1, rest / power[i]);
  }
  if (!any_power && out.alpha2 == 0) throw FitUndefined("no sample has a positive skeleton");

  for (std::size_t i = 0; i < samples.size(); ++i)
    out.residuals.push_back(out.alpha1 * power[i] + out.alpha2 * linear[i] - samples[i].measured);

  // Least-squares slope of log(measured) on log(power skeleton).
  std::vector<std::pair<double, double>> xy;
  std::set<double> distinct;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (power[i] > 0 && samples[i].measured > 0) {
      xy.emplace_back(std::log(power[i]), std::log(samples[i].measured));
      distinct.insert(xy.back().first);
    }
  if (distinct.size() >= 2) {
    double mx = 0, my = 0;
    for (auto [x, y] : xy) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(xy.size());
    my /= static_cast<double>(xy.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : xy) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    out.loglog_slope = sxy / sxx;
  }
  return out;
}

}  // namespace incidence
