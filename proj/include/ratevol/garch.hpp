#pragma once

#include <cstdint>
#include <vector>

#include "ratevol/market_data.hpp"

namespace ratevol {

struct LevelGarchParams {
  double alpha0 = 0.0;
  double gamma = 0.0;
  double a0 = 1e-5;  // > 0
  double a1 = 0.0;   // >= 0
  double b = 0.0;    // >= 0
  double nu = 5.0;   // > 2

  void validate() const;
  bool covariance_stationary() const { return a1 + b < 1.0; }
};

struct LevelEgarchParams {
  double alpha0 = 0.0;
  double gamma = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double b = 0.0;
  double nu = 5.0;  // > 2

  void validate() const;
  bool stationary() const { return b > -1.0 && b < 1.0; }
};

// h initialization convention for the first usable step.
enum class GarchInit { SampleVariance, Unconditional };

double level_garch_loglik(const RateSeries& series,
                          const LevelGarchParams& params,
                          std::vector<double>* per_obs = nullptr,
                          GarchInit init = GarchInit::SampleVariance);

// Unconditional uses the fixed point a0/(1-b) for log h when |b| < 1.
double level_egarch_loglik(const RateSeries& series,
                           const LevelEgarchParams& params,
                           std::vector<double>* per_obs = nullptr,
                           GarchInit init = GarchInit::SampleVariance);

struct GarchSimResult {
  RateSeries series;
  bool truncated = false;
};

GarchSimResult garch_simulate(const LevelGarchParams& params, double r1,
                              std::size_t n, std::uint64_t seed);
GarchSimResult egarch_simulate(const LevelEgarchParams& params, double r1,
                               std::size_t n, std::uint64_t seed);

}  // namespace ratevol
