#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ratevol/market_data.hpp"

namespace ratevol {

struct DriftSpec {
  double alpha0 = 0.0;
  std::optional<double> alpha1;  // absent => 0

  double alpha1_value() const { return alpha1.value_or(0.0); }
  // -2 < alpha1 < 0, reported but not enforced.
  bool stationary() const;
};

enum class InnovationFamily { Normal, StudentT };

struct CevParams {
  DriftSpec drift;
  double gamma = 0.0;  // >= 0
  double sigma = 1.0;  // > 0
  InnovationFamily family = InnovationFamily::Normal;
  double nu = 5.0;  // > 2, student-t only

  void validate() const;
};

// Joint log-density of the normalized increment sequence; may fill one
// log-density per element.
using InnerLogLik =
    std::function<double(const std::vector<double>&, std::vector<double>*)>;

// Change of variables: inner log-likelihood of the normalized increments
// minus gamma * sum log r_{t-1}.
double level_log_likelihood(const RateSeries& series, const DriftSpec& drift,
                            double gamma, const InnerLogLik& inner,
                            std::vector<double>* per_obs = nullptr);

double cev_log_likelihood(const RateSeries& series, const CevParams& params,
                          std::vector<double>* per_obs = nullptr);

// Draws the next normalized innovation x_t.
using InnerSimulator = std::function<double()>;

// Iterates r_t = r_{t-1} + alpha0 + alpha1 r_{t-1} + r_{t-1}^gamma x_t.
// Steps that would drive the level nonpositive are redrawn up to
// max_retries; on exhaustion the path is truncated (truncated flag set).
struct LevelSimResult {
  RateSeries series;
  bool truncated = false;
};
LevelSimResult level_simulate(const DriftSpec& drift, double gamma,
                              const InnerSimulator& inner, double r1,
                              std::size_t n, std::size_t max_retries = 100);

}  // namespace ratevol
