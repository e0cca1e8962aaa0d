#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ratevol/msm.hpp"
#include "ratevol/stats.hpp"

using namespace ratevol;

namespace {

// Dense transition matrix built directly from the per-level switching
// semantics: keep with prob 1-lambda_k, redraw (equal chance) otherwise.
std::vector<std::vector<double>> dense_transition(const MsmStateSpace& space) {
  const std::size_t d = space.dim();
  std::vector<std::vector<double>> a(d, std::vector<double>(d, 1.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < space.K; ++k) {
        const bool same = ((i >> k) & 1u) == ((j >> k) & 1u);
        a[i][j] *= same ? 1.0 - 0.5 * space.lambdas[k] : 0.5 * space.lambdas[k];
      }
  return a;
}

// Exhaustive sum over all latent state paths.
double path_enumeration_loglik(const std::vector<double>& x,
                               const MsmVolParams& params) {
  const auto space = build_state_space(params);
  const auto a = dense_transition(space);
  const std::size_t d = space.dim();
  const double s2 = params.sigma * params.sigma;
  const std::size_t T = x.size();

  double total = 0.0;
  std::vector<std::size_t> path(T, 0);
  // iterate over initial state and all T-step paths
  std::vector<std::size_t> idx(T + 1, 0);
  bool done = false;
  while (!done) {
    double prob = 1.0 / static_cast<double>(d);
    for (std::size_t t = 1; t <= T; ++t) prob *= a[idx[t - 1]][idx[t]];
    double dens = 1.0;
    for (std::size_t t = 1; t <= T; ++t)
      dens *= normal_pdf(x[t - 1], s2 * space.g[idx[t]]);
    total += prob * dens;
    // odometer increment
    std::size_t pos = 0;
    while (pos <= T && ++idx[pos] == d) {
      idx[pos] = 0;
      ++pos;
    }
    done = pos > T;
  }
  return std::log(total);
}

}  // namespace

TEST_CASE("state space enumeration, K=1 and K=2") {
  MsmVolParams p{1, 1.5, 2.0, 0.5, 1.0};
  auto s1 = build_state_space(p);
  CHECK(s1.g.size() == 2);
  CHECK(s1.g[0] == doctest::Approx(1.5));
  CHECK(s1.g[1] == doctest::Approx(0.5));

  p.K = 2;
  auto s2 = build_state_space(p);
  REQUIRE(s2.g.size() == 4);
  std::vector<double> sorted = s2.g;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] == doctest::Approx(0.25));
  CHECK(sorted[1] == doctest::Approx(0.75));
  CHECK(sorted[2] == doctest::Approx(0.75));
  CHECK(sorted[3] == doctest::Approx(2.25));
  CHECK(mean(s2.g) == doctest::Approx(1.0));
}

TEST_CASE("lambda ladder is increasing and anchored at K") {
  const auto l = lambda_ladder(0.931, 3.864, 9);
  REQUIRE(l.size() == 9);
  CHECK(l[8] == doctest::Approx(0.931));
  // lambda_1 = 1 - (1 - 0.931)^(3.864^-8)
  const double expected = 1.0 - std::pow(1.0 - 0.931, std::pow(3.864, -8.0));
  CHECK(l[0] == doctest::Approx(expected).epsilon(1e-12));
  for (std::size_t k = 1; k < 9; ++k) {
    CHECK(l[k] > l[k - 1]);
    CHECK(l[k] > 0.0);
    CHECK(l[k] < 1.0);
  }
}

TEST_CASE("state cap rejected") {
  MsmVolParams p{17, 1.5, 2.0, 0.5, 1.0};
  CHECK_THROWS(build_state_space(p));
}

TEST_CASE("uniform vector is stationary under the transition") {
  MsmVolParams p{3, 1.7, 3.0, 0.6, 1.0};
  auto space = build_state_space(p);
  auto u = uniform_filter_state(space);
  auto out = transition_apply(u, space);
  for (double v : out) CHECK(v == doctest::Approx(1.0 / 8).epsilon(1e-14));
}

TEST_CASE("lambda = 1 on every level redraws to uniform") {
  MsmVolParams p{2, 1.5, 2.0, 0.999999999, 1.0};
  auto space = build_state_space(p);
  // force the ladder to exactly 1
  for (auto& l : space.lambdas) l = 1.0;
  FilterState s{{0.7, 0.1, 0.15, 0.05}};
  auto out = transition_apply(s, space);
  for (double v : out) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("Kronecker sweep equals dense matrix product, K <= 6") {
  Rng rng(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t K = 1; K <= 6; ++K) {
    MsmVolParams p{K, 1.3 + 0.05 * static_cast<double>(K), 2.5, 0.7, 1.0};
    auto space = build_state_space(p);
    const std::size_t d = space.dim();
    auto a = dense_transition(space);
    for (int rep = 0; rep < 5; ++rep) {
      FilterState s;
      s.p.resize(d);
      double sum = 0.0;
      for (auto& v : s.p) sum += (v = unif(rng));
      for (auto& v : s.p) v /= sum;
      auto fast = transition_apply(s, space);
      for (std::size_t j = 0; j < d; ++j) {
        double dense = 0.0;
        for (std::size_t i = 0; i < d; ++i) dense += s.p[i] * a[i][j];
        CHECK(std::abs(fast[j] - dense) <= 1e-13);
      }
    }
  }
}

TEST_CASE("transition preserves total probability and nonnegativity") {
  Rng rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MsmVolParams p{5, 1.6, 4.0, 0.6, 0.07};
  auto space = build_state_space(p);
  FilterState s;
  s.p.resize(space.dim());
  double sum = 0.0;
  for (auto& v : s.p) sum += (v = unif(rng));
  for (auto& v : s.p) v /= sum;
  auto out = transition_apply(s, space);
  double total = 0.0;
  for (double v : out) {
    CHECK(v >= 0.0);
    total += v;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("filter step: near-degenerate m0 reduces to plain Gaussian") {
  MsmVolParams p{1, 1.0 + 1e-12, 2.0, 0.5, 0.8};
  auto space = build_state_space(p);
  auto prior = uniform_filter_state(space);
  const double x = 0.37;
  auto step = filter_step(prior, x, p.sigma, space);
  CHECK(step.likelihood_contribution ==
        doctest::Approx(normal_pdf(x, 0.64)).epsilon(1e-9));
  CHECK(step.posterior.p[0] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("x = 0 tilts the filter toward low-variance states") {
  MsmVolParams p{2, 1.8, 3.0, 0.5, 1.0};
  auto space = build_state_space(p);
  auto prior = uniform_filter_state(space);
  auto after_transition = transition_apply(prior, space);
  auto step = filter_step(prior, 0.0, p.sigma, space);
  // p'_i / prior_i proportional to g_i^{-1/2}
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const double ratio = step.posterior.p[i] / after_transition[i];
    const double expected = 1.0 / std::sqrt(space.g[i]);
    CHECK(ratio / step.posterior.p[0] * after_transition[0] ==
          doctest::Approx(expected / (1.0 / std::sqrt(space.g[0]))));
  }
}

TEST_CASE("filter probabilities sum to one after every step") {
  MsmVolParams p{4, 1.6, 3.0, 0.8, 0.5};
  auto space = build_state_space(p);
  auto sim = msm_simulate(p, 200, 11);
  FilterState s = uniform_filter_state(space);
  for (double x : sim.x) {
    auto step = filter_step(s, x, p.sigma, space);
    s = step.posterior;
    double total = 0.0;
    for (double v : s.p) total += v;
    CHECK(std::abs(total - 1.0) <= 1e-10);
  }
}

TEST_CASE("log-likelihood equals exhaustive path enumeration") {
  Rng rng(123);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 6; ++rep) {
    MsmVolParams p;
    p.K = 1 + rep % 3;
    p.m0 = 1.1 + 0.8 * unif(rng);
    p.b = 1.5 + 3.0 * unif(rng);
    p.lambda_K = 0.1 + 0.8 * unif(rng);
    p.sigma = 0.2 + unif(rng);
    std::vector<double> x(3 + rep % 3);
    for (auto& v : x) v = p.sigma * gauss(rng);
    const double fast = msm_log_likelihood(x, p);
    const double brute = path_enumeration_loglik(x, p);
    CHECK(fast == doctest::Approx(brute).epsilon(1e-10));
  }
}

TEST_CASE("m0 -> 1 reduces to the iid Gaussian log-likelihood") {
  MsmVolParams p{3, 1.0 + 1e-11, 2.0, 0.5, 0.7};
  std::vector<double> x{0.1, -0.4, 0.9, 0.0, -1.2};
  double expected = 0.0;
  for (double v : x) expected += normal_log_pdf(v, p.sigma * p.sigma);
  CHECK(msm_log_likelihood(x, p) == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("true parameters beat perturbed ones on average") {
  MsmVolParams truth{3, 1.6, 3.0, 0.5, 0.1};
  MsmVolParams perturbed = truth;
  perturbed.m0 = 1.2;
  perturbed.sigma = 0.15;
  int wins = 0;
  const int reps = 100;
  for (int r = 0; r < reps; ++r) {
    auto sim = msm_simulate(truth, 500, 1000 + r);
    if (msm_log_likelihood(sim.x, truth) >
        msm_log_likelihood(sim.x, perturbed))
      ++wins;
  }
  CHECK(wins > reps / 2);
}

TEST_CASE("simulation: frozen state when lambda is negligible") {
  MsmVolParams p{3, 1.7, 2.0, 1e-13, 0.3};
  auto sim = msm_simulate(p, 1000, 5);
  for (double g : sim.g_path) CHECK(g == doctest::Approx(sim.g_path[0]));
}

TEST_CASE("simulation determinism and ergodic multiplier mean") {
  MsmVolParams p{9, 1.462, 3.864, 0.931, 0.06029};
  auto a = msm_simulate(p, 5000, 77);
  auto b = msm_simulate(p, 5000, 77);
  CHECK(a.x == b.x);

  // E[g] = 1; the slowest level decorrelates over ~1/lambda_1 steps, so
  // average independent replicates instead of one long path
  std::vector<double> g_draws;
  for (int r = 0; r < 4000; ++r)
    g_draws.push_back(msm_simulate(p, 1, 10000 + r).g_path[0]);
  const double m = mean(g_draws);
  const double se = sample_sd(g_draws) / std::sqrt(4000.0);
  CHECK(std::abs(m - 1.0) < 3.0 * se);
}

TEST_CASE("Table-3-style parameters give heavy tails and persistent |x|") {
  MsmVolParams p{9, 1.462, 3.864, 0.931, 0.06029};
  auto sim = msm_simulate(p, 14171, 2024);
  // sample kurtosis well above 3
  const double m = mean(sim.x);
  double s2 = 0.0, s4 = 0.0;
  for (double v : sim.x) {
    const double d = v - m;
    s2 += d * d;
    s4 += d * d * d * d;
  }
  s2 /= sim.x.size();
  s4 /= sim.x.size();
  CHECK(s4 / (s2 * s2) > 5.0);

  std::vector<double> absx(sim.x.size());
  for (std::size_t i = 0; i < sim.x.size(); ++i) absx[i] = std::abs(sim.x[i]);
  const double band = 1.96 / std::sqrt(static_cast<double>(absx.size()));
  const double c0 = autocovariance(absx, 0);
  int above = 0;
  for (std::size_t lag = 1; lag <= 100; ++lag)
    if (autocovariance(absx, lag) / c0 > band) ++above;
  CHECK(above > 80);
}
