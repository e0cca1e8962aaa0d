#pragma once

#include <cstdint>
#include <vector>

#include "ratevol/garch.hpp"
#include "ratevol/market_data.hpp"

namespace ratevol {

// Discretized jump-diffusion with GARCH conditional variance and a logistic
// state-dependent jump probability.
struct JumpDiffParams {
  double alpha0 = 0.0;
  double gamma = 0.0;
  double a0 = 1e-6;  // > 0
  double a1 = 0.0;   // >= 0
  double b = 0.0;    // >= 0
  double c = 0.0;
  double d = 0.0;
  double tau = 0.1;  // > 0

  void validate() const;
  // (1 + exp(-c - d*r))^{-1}
  double jump_probability(double level) const;
};

// Bernoulli jump marginalized analytically: each addend is a two-component
// normal mixture. The variance recursion needs r_{t-2}, so addends run
// t = 3..n (the first two observations are pre-sample).
double jumpdiff_loglik(const RateSeries& series, const JumpDiffParams& params,
                       std::vector<double>* per_obs = nullptr,
                       GarchInit init = GarchInit::SampleVariance);

struct JumpDiffSimResult {
  RateSeries series;
  std::vector<bool> jumps;  // one flag per generated step
  bool truncated = false;
};

JumpDiffSimResult jumpdiff_simulate(const JumpDiffParams& params, double r1,
                                    double r2, std::size_t n,
                                    std::uint64_t seed);

}  // namespace ratevol
