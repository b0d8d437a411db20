#pragma once

#include <optional>
#include <span>
#include <vector>

#include "incidence/bounds/evaluators.hpp"

namespace incidence {

struct FitSample {
  BoundSpec spec;
  double measured = 0;
};

struct FittedConstants {
  double alpha1 = 0;  // scales the power terms
  double alpha2 = 0;  // scales the linear terms
  std::optional<double> loglog_slope;  // absent when fewer than 2 distinct skeleton values
  std::vector<double> residuals;       // fitted bound minus measured, per sample
};

/// Smallest envelope alpha1 * P + alpha2 * L covering every sample, where P
/// is the sum of the power terms and L of the linear terms of the
/// evaluator at eps = 0. alpha2 is chosen first from samples whose power
/// skeleton vanishes (0 when there are none), then alpha1 is the least
/// value covering the rest. The slope is the least-squares slope of
/// log(measured) against log(P). Throws FitUndefined when every sample
/// measures 0 or no sample has a positive skeleton.
FittedConstants fit_constants(std::span<const FitSample> samples, Evaluator evaluator);

}  // namespace incidence
