#include "ratevol/msm.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

void MsmVolParams::validate() const {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (K > kMaxMsmLevels)
    throw std::invalid_argument("K exceeds state cap (2^K states)");
  if (!(m0 > 1.0 && m0 < 2.0))
    throw std::invalid_argument("m0 must be in (1, 2)");
  if (!(b > 1.0)) throw std::invalid_argument("b must be > 1");
  if (!(lambda_K > 0.0 && lambda_K < 1.0))
    throw std::invalid_argument("lambda_K must be in (0, 1)");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
}

std::vector<double> lambda_ladder(double lambda_K, double b, std::size_t K) {
  std::vector<double> lambdas(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double expo = std::pow(b, static_cast<double>(k) - static_cast<double>(K));
    lambdas[k - 1] = 1.0 - std::pow(1.0 - lambda_K, expo);
  }
  return lambdas;
}

MsmStateSpace build_state_space(const MsmVolParams& params) {
  params.validate();
  MsmStateSpace space;
  space.K = params.K;
  space.m0 = params.m0;
  space.lambdas = lambda_ladder(params.lambda_K, params.b, params.K);
  const double m1 = 2.0 - params.m0;
  const std::size_t d = std::size_t{1} << params.K;
  space.g.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    double g = 1.0;
    for (std::size_t k = 0; k < params.K; ++k)
      g *= ((i >> k) & 1u) ? m1 : params.m0;
    space.g[i] = g;
  }
  return space;
}

void FilterState::validate() const {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw std::invalid_argument("negative filter probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("filter probabilities do not sum to 1");
}

FilterState uniform_filter_state(const MsmStateSpace& space) {
  FilterState s;
  s.p.assign(space.dim(), 1.0 / static_cast<double>(space.dim()));
  return s;
}

std::vector<double> transition_apply(const FilterState& state,
                                     const MsmStateSpace& space) {
  std::vector<double> p = state.p;
  const std::size_t d = space.dim();
  // One sweep per level: mix the two sub-blocks selected by bit k.
  for (std::size_t k = 0; k < space.K; ++k) {
    const double half = 0.5 * space.lambdas[k];
    const double stay = 1.0 - half;
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t i = 0; i < d; ++i) {
      if (i & bit) continue;
      const double p0 = p[i];
      const double p1 = p[i | bit];
      p[i] = stay * p0 + half * p1;
      p[i | bit] = half * p0 + stay * p1;
    }
  }
  return p;
}

FilterStepResult filter_step(const FilterState& p, double x, double sigma,
                             const MsmStateSpace& space) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  std::vector<double> prior = transition_apply(p, space);
  const double sigma2 = sigma * sigma;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma2);
  double contribution = 0.0;
  std::vector<double> post(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const double g = space.g[i];
    const double w = norm / std::sqrt(g) * std::exp(-0.5 * x * x / (sigma2 * g));
    post[i] = prior[i] * w;
    contribution += post[i];
  }
  if (!(contribution > 0.0))
    throw std::runtime_error("degenerate observation: zero filter density");
  for (auto& v : post) v /= contribution;
  return {FilterState{std::move(post)}, contribution};
}

double msm_log_likelihood(const std::vector<double>& x,
                          const MsmVolParams& params) {
  return msm_log_likelihood(x, params, nullptr);
}

double msm_log_likelihood(const std::vector<double>& x,
                          const MsmVolParams& params,
                          std::vector<double>* per_obs) {
  if (x.empty()) throw std::invalid_argument("empty observation sequence");
  const MsmStateSpace space = build_state_space(params);
  const std::size_t d = space.dim();
  const double sigma2 = params.sigma * params.sigma;
  const double lognorm = -0.5 * std::log(2.0 * std::numbers::pi * sigma2);

  // precompute per-state constants
  std::vector<double> inv_var(d), half_log_g(d);
  for (std::size_t i = 0; i < d; ++i) {
    inv_var[i] = 1.0 / (sigma2 * space.g[i]);
    half_log_g[i] = 0.5 * std::log(space.g[i]);
  }

  std::vector<double> p(d, 1.0 / static_cast<double>(d));
  std::vector<double> work(d);
  if (per_obs) per_obs->assign(x.size(), 0.0);

  double total = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    // transition sweep in place
    for (std::size_t k = 0; k < space.K; ++k) {
      const double half = 0.5 * space.lambdas[k];
      const double stay = 1.0 - half;
      const std::size_t bit = std::size_t{1} << k;
      for (std::size_t i = 0; i < d; ++i) {
        if (i & bit) continue;
        const double p0 = p[i];
        const double p1 = p[i | bit];
        p[i] = stay * p0 + half * p1;
        p[i | bit] = half * p0 + stay * p1;
      }
    }
    const double xt2 = x[t] * x[t];
    double contribution = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      // unnormalized density ratio exp(-x^2/(2 sigma^2 g)) / sqrt(g)
      work[i] = p[i] * std::exp(-0.5 * xt2 * inv_var[i] - half_log_g[i]);
      contribution += work[i];
    }
    if (!(contribution > 0.0))
      throw std::runtime_error("degenerate observation at index " +
                               std::to_string(t));
    const double log_density = lognorm + std::log(contribution);
    total += log_density;
    if (per_obs) (*per_obs)[t] = log_density;
    const double inv = 1.0 / contribution;
    for (std::size_t i = 0; i < d; ++i) p[i] = work[i] * inv;
  }
  return total;
}

MsmSimulation msm_simulate(const MsmVolParams& params, std::size_t n,
                           std::uint64_t seed) {
  params.validate();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto lambdas = lambda_ladder(params.lambda_K, params.b, params.K);
  const double m1 = 2.0 - params.m0;

  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> m(params.K);
  for (auto& v : m) v = unif(rng) < 0.5 ? params.m0 : m1;

  MsmSimulation sim;
  sim.x.reserve(n);
  sim.g_path.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0) {
      for (std::size_t k = 0; k < params.K; ++k)
        if (unif(rng) < lambdas[k]) m[k] = unif(rng) < 0.5 ? params.m0 : m1;
    }
    double g = 1.0;
    for (double v : m) g *= v;
    sim.g_path.push_back(g);
    sim.x.push_back(params.sigma * std::sqrt(g) * gauss(rng));
  }
  return sim;
}

}  // namespace ratevol
