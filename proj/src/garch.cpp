#include "ratevol/garch.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ratevol/level.hpp"
#include "ratevol/stats.hpp"

namespace ratevol {

void LevelGarchParams::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (!(a0 > 0.0)) throw std::invalid_argument("a0 must be > 0");
  if (a1 < 0.0 || b < 0.0) throw std::invalid_argument("a1, b must be >= 0");
  if (!(nu > 2.0)) throw std::invalid_argument("nu must be > 2");
}

void LevelEgarchParams::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (!(nu > 2.0)) throw std::invalid_argument("nu must be > 2");
}

double level_garch_loglik(const RateSeries& series,
                          const LevelGarchParams& params,
                          std::vector<double>* per_obs, GarchInit init) {
  params.validate();
  DriftSpec drift{params.alpha0, std::nullopt};
  InnerLogLik inner = [&](const std::vector<double>& x,
                          std::vector<double>* po) {
    if (po) po->resize(x.size());
    double h;
    if (init == GarchInit::Unconditional && params.covariance_stationary())
      h = params.a0 / (1.0 - params.a1 - params.b);
    else
      h = sample_variance(x);
    if (!(h > 0.0)) h = params.a0;
    double total = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (t > 0) h = params.a0 + params.a1 * x[t - 1] * x[t - 1] + params.b * h;
      const double ld = student_t_std_log_pdf(x[t], params.nu, h);
      total += ld;
      if (po) (*po)[t] = ld;
    }
    return total;
  };
  return level_log_likelihood(series, drift, params.gamma, inner, per_obs);
}

double level_egarch_loglik(const RateSeries& series,
                           const LevelEgarchParams& params,
                           std::vector<double>* per_obs, GarchInit init) {
  params.validate();
  DriftSpec drift{params.alpha0, std::nullopt};
  InnerLogLik inner = [&](const std::vector<double>& x,
                          std::vector<double>* po) {
    if (po) po->resize(x.size());
    double log_h;
    if (init == GarchInit::Unconditional && params.stationary()) {
      log_h = params.a0 / (1.0 - params.b);
    } else {
      double sv = sample_variance(x);
      if (!(sv > 0.0)) sv = 1e-12;
      log_h = std::log(sv);
    }
    double total = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (t > 0) {
        const double eps = x[t - 1] / std::sqrt(std::exp(log_h));
        log_h = params.a0 + params.a1 * eps + params.a2 * std::abs(eps) +
                params.b * log_h;
      }
      const double ld = student_t_std_log_pdf(x[t], params.nu, std::exp(log_h));
      total += ld;
      if (po) (*po)[t] = ld;
    }
    return total;
  };
  return level_log_likelihood(series, drift, params.gamma, inner, per_obs);
}

namespace {

// Draw from the centralized, unit-variance student-t.
double standardized_t(Rng& rng, double nu) {
  std::student_t_distribution<double> t(nu);
  return t(rng) * std::sqrt((nu - 2.0) / nu);
}

}  // namespace

GarchSimResult garch_simulate(const LevelGarchParams& params, double r1,
                              std::size_t n, std::uint64_t seed) {
  params.validate();
  if (!(r1 > 0.0)) throw std::invalid_argument("initial level must be > 0");
  Rng rng(seed);
  GarchSimResult result;
  result.series.values.push_back(r1);
  double h = params.covariance_stationary()
                 ? params.a0 / (1.0 - params.a1 - params.b)
                 : params.a0;
  double x_prev = 0.0;
  for (std::size_t t = 1; t < n; ++t) {
    const double r = result.series.values.back();
    h = (t == 1) ? h : params.a0 + params.a1 * x_prev * x_prev + params.b * h;
    const double scale = params.gamma == 0.0 ? 1.0 : std::pow(r, params.gamma);
    bool ok = false;
    double x = 0.0, next = 0.0;
    for (int attempt = 0; attempt <= 100; ++attempt) {
      x = std::sqrt(h) * standardized_t(rng, params.nu);
      next = r + params.alpha0 + scale * x;
      if (next > 0.0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      result.truncated = true;
      break;
    }
    x_prev = x;
    result.series.values.push_back(next);
  }
  result.series.dates.resize(result.series.values.size());
  for (std::size_t i = 0; i < result.series.dates.size(); ++i)
    result.series.dates[i] = Date{2000 + static_cast<int>(i / 372),
                                  1 + static_cast<int>((i / 31) % 12),
                                  1 + static_cast<int>(i % 31)};
  return result;
}

GarchSimResult egarch_simulate(const LevelEgarchParams& params, double r1,
                               std::size_t n, std::uint64_t seed) {
  params.validate();
  if (!(r1 > 0.0)) throw std::invalid_argument("initial level must be > 0");
  Rng rng(seed);
  GarchSimResult result;
  result.series.values.push_back(r1);
  double log_h = params.stationary() ? params.a0 / (1.0 - params.b) : params.a0;
  double eps_prev = 0.0;
  for (std::size_t t = 1; t < n; ++t) {
    const double r = result.series.values.back();
    if (t > 1)
      log_h = params.a0 + params.a1 * eps_prev +
              params.a2 * std::abs(eps_prev) + params.b * log_h;
    const double scale = params.gamma == 0.0 ? 1.0 : std::pow(r, params.gamma);
    const double sd = std::sqrt(std::exp(log_h));
    bool ok = false;
    double eps = 0.0, next = 0.0;
    for (int attempt = 0; attempt <= 100; ++attempt) {
      eps = standardized_t(rng, params.nu);
      next = r + params.alpha0 + scale * sd * eps;
      if (next > 0.0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      result.truncated = true;
      break;
    }
    eps_prev = eps;
    result.series.values.push_back(next);
  }
  result.series.dates.resize(result.series.values.size());
  for (std::size_t i = 0; i < result.series.dates.size(); ++i)
    result.series.dates[i] = Date{2000 + static_cast<int>(i / 372),
                                  1 + static_cast<int>((i / 31) % 12),
                                  1 + static_cast<int>(i % 31)};
  return result;
}

}  // namespace ratevol
