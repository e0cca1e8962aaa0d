#include "ratevol/level.hpp"

#include <cmath>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

bool DriftSpec::stationary() const {
  const double a1 = alpha1_value();
  return a1 > -2.0 && a1 < 0.0;
}

void CevParams::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (family == InnovationFamily::StudentT && !(nu > 2.0))
    throw std::invalid_argument("student-t requires nu > 2");
}

double level_log_likelihood(const RateSeries& series, const DriftSpec& drift,
                            double gamma, const InnerLogLik& inner,
                            std::vector<double>* per_obs) {
  series.validate();
  const auto x =
      normalized_increments(series, drift.alpha0, drift.alpha1_value(), gamma);
  double jacobian = 0.0;
  std::vector<double> log_levels;
  log_levels.reserve(x.size());
  for (std::size_t t = 0; t + 1 < series.size(); ++t) {
    const double r = series.values[t];
    if (r <= 0.0 && gamma != 0.0)
      throw std::runtime_error("nonpositive level in Jacobian");
    const double lr = gamma == 0.0 ? 0.0 : std::log(r);
    log_levels.push_back(lr);
    jacobian += lr;
  }
  const double inner_ll = inner(x, per_obs);
  if (per_obs) {
    if (per_obs->size() != x.size())
      throw std::runtime_error("inner evaluator per-observation size mismatch");
    for (std::size_t i = 0; i < per_obs->size(); ++i)
      (*per_obs)[i] -= gamma * log_levels[i];
  }
  return inner_ll - gamma * jacobian;
}

double cev_log_likelihood(const RateSeries& series, const CevParams& params,
                          std::vector<double>* per_obs) {
  params.validate();
  const double variance = params.sigma * params.sigma;
  InnerLogLik inner = [&](const std::vector<double>& x,
                          std::vector<double>* po) {
    double total = 0.0;
    if (po) po->resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double ld = params.family == InnovationFamily::Normal
                            ? normal_log_pdf(x[i], variance)
                            : student_t_std_log_pdf(x[i], params.nu, variance);
      total += ld;
      if (po) (*po)[i] = ld;
    }
    return total;
  };
  return level_log_likelihood(series, params.drift, params.gamma, inner,
                              per_obs);
}

LevelSimResult level_simulate(const DriftSpec& drift, double gamma,
                              const InnerSimulator& inner, double r1,
                              std::size_t n, std::size_t max_retries) {
  if (!(r1 > 0.0)) throw std::invalid_argument("initial level must be > 0");
  LevelSimResult result;
  result.series.values.push_back(r1);
  const double a1 = drift.alpha1_value();
  for (std::size_t t = 1; t < n; ++t) {
    const double r = result.series.values.back();
    const double mu = r + drift.alpha0 + a1 * r;
    const double scale = gamma == 0.0 ? 1.0 : std::pow(r, gamma);
    double next = 0.0;
    bool ok = false;
    for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
      next = mu + scale * inner();
      if (next > 0.0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      result.truncated = true;
      break;
    }
    result.series.values.push_back(next);
  }
  // synthetic daily calendar
  result.series.dates.resize(result.series.values.size());
  int serial = 0;
  for (auto& d : result.series.dates) {
    d.year = 2000 + serial / 372;
    d.month = 1 + (serial / 31) % 12;
    d.day = 1 + serial % 31;
    ++serial;
  }
  return result;
}

}  // namespace ratevol
