#include "ratevol/jump.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

void JumpDiffParams::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (!(a0 > 0.0)) throw std::invalid_argument("a0 must be > 0");
  if (a1 < 0.0 || b < 0.0) throw std::invalid_argument("a1, b must be >= 0");
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
}

double JumpDiffParams::jump_probability(double level) const {
  return 1.0 / (1.0 + std::exp(-c - d * level));
}

double jumpdiff_loglik(const RateSeries& series, const JumpDiffParams& params,
                       std::vector<double>* per_obs, GarchInit init) {
  params.validate();
  series.validate();
  const std::size_t n = series.size();
  if (n < 3) throw std::invalid_argument("need at least 3 observations");
  const auto& r = series.values;
  for (double v : r)
    if (v <= 0.0 && params.gamma != 0.0)
      throw std::runtime_error("nonpositive level");

  // normalized increments at (alpha0, gamma), one per t = 2..n
  std::vector<double> x(n - 1);
  for (std::size_t t = 1; t < n; ++t) {
    const double scale =
        params.gamma == 0.0 ? 1.0 : std::pow(r[t - 1], params.gamma);
    x[t - 1] = (r[t] - r[t - 1] - params.alpha0) / scale;
  }

  double h;
  if (init == GarchInit::Unconditional && params.a1 + params.b < 1.0)
    h = params.a0 / (1.0 - params.a1 - params.b);
  else
    h = sample_variance(x);
  if (!(h > 0.0)) h = params.a0;
  if (per_obs) per_obs->clear();

  double total = 0.0;
  // addends t = 3..n; index t-1 into values
  for (std::size_t t = 2; t < n; ++t) {
    // h_t = a0 + a1 * x_{t-1}^2 + b * h_{t-1}; x_{t-1} uses r_{t-2}
    if (t > 2) h = params.a0 + params.a1 * x[t - 2] * x[t - 2] + params.b * h;
    const double rl = r[t - 1];
    const double lam = params.jump_probability(rl);
    const double scale2 =
        params.gamma == 0.0 ? 1.0 : std::pow(rl, 2.0 * params.gamma);
    const double dev = r[t] - rl - params.alpha0;
    const double v_nojump = scale2 * h;
    const double v_jump = scale2 * (h + params.tau * params.tau);
    const double density = (1.0 - lam) * normal_pdf(dev, v_nojump) +
                           lam * normal_pdf(dev, v_jump);
    if (!(density > 0.0))
      throw std::runtime_error("degenerate mixture density at t=" +
                               std::to_string(t + 1));
    const double ld = std::log(density);
    total += ld;
    if (per_obs) per_obs->push_back(ld);
  }
  return total;
}

JumpDiffSimResult jumpdiff_simulate(const JumpDiffParams& params, double r1,
                                    double r2, std::size_t n,
                                    std::uint64_t seed) {
  params.validate();
  if (!(r1 > 0.0 && r2 > 0.0))
    throw std::invalid_argument("initial levels must be > 0");
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  JumpDiffSimResult result;
  auto& rv = result.series.values;
  rv = {r1, r2};
  result.jumps = {false, false};
  double h = params.a0 / std::max(1.0 - params.a1 - params.b, 1e-3);
  for (std::size_t t = 2; t < n; ++t) {
    const double r_prev = rv[t - 1];
    const double r_prev2 = rv[t - 2];
    const double scale_prev2 =
        params.gamma == 0.0 ? 1.0 : std::pow(r_prev2, params.gamma);
    const double x_prev =
        (rv[t - 1] - rv[t - 2] - params.alpha0) / scale_prev2;
    if (t > 2) h = params.a0 + params.a1 * x_prev * x_prev + params.b * h;
    const double lam = params.jump_probability(r_prev);
    const double scale =
        params.gamma == 0.0 ? 1.0 : std::pow(r_prev, params.gamma);
    const bool jump = unif(rng) < lam;
    bool ok = false;
    double next = 0.0;
    for (int attempt = 0; attempt <= 100; ++attempt) {
      // diffusion and jump draws consumed every step so the stream is
      // aligned across jump/no-jump realizations
      const double diff = std::sqrt(h) * gauss(rng);
      const double z = params.tau * gauss(rng);
      next = r_prev + params.alpha0 + scale * (diff + (jump ? z : 0.0));
      if (next > 0.0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      result.truncated = true;
      break;
    }
    rv.push_back(next);
    result.jumps.push_back(jump);
  }
  result.series.dates.resize(rv.size());
  for (std::size_t i = 0; i < rv.size(); ++i)
    result.series.dates[i] = Date{2000 + static_cast<int>(i / 372),
                                  1 + static_cast<int>((i / 31) % 12),
                                  1 + static_cast<int>(i % 31)};
  return result;
}

}  // namespace ratevol
