#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ratevol {

// Binomial MSM(K) volatility parameters. The low multiplier m1 = 2 - m0 is
// derived, so E[M] = 1 by construction.
struct MsmVolParams {
  std::size_t K = 1;
  double m0 = 1.5;   // in (1, 2)
  double b = 2.0;    // frequency growth factor, > 1
  double lambda_K = 0.5;  // switching probability of the fastest component
  double sigma = 1.0;

  void validate() const;
};

// Hard cap on K: the filter holds a dense vector of 2^K doubles.
inline constexpr std::size_t kMaxMsmLevels = 16;

// Enumeration of the 2^K multiplier states. State index i's binary digits
// select m0 (bit = 0) or m1 (bit = 1) per level; bit k-1 belongs to level k.
struct MsmStateSpace {
  std::size_t K = 0;
  double m0 = 0.0;
  std::vector<double> g;        // products of multipliers, length 2^K
  std::vector<double> lambdas;  // lambda_1..lambda_K, increasing

  std::size_t dim() const { return g.size(); }
};

MsmStateSpace build_state_space(const MsmVolParams& params);

// lambda_k = 1 - (1 - lambda_K)^(b^(k-K)), k = 1..K.
std::vector<double> lambda_ladder(double lambda_K, double b, std::size_t K);

// Probability vector over the 2^K multiplier states.
struct FilterState {
  std::vector<double> p;

  void validate() const;  // nonnegative, sums to 1 within 1e-10
};

FilterState uniform_filter_state(const MsmStateSpace& space);

// p' = p^T A with A = kron of per-level 2x2 matrices having diagonal
// 1 - lambda_k/2 and off-diagonal lambda_k/2. O(K * 2^K), no dense matrix.
std::vector<double> transition_apply(const FilterState& p,
                                     const MsmStateSpace& space);

struct FilterStepResult {
  FilterState posterior;
  double likelihood_contribution;  // density of x given the past
};

FilterStepResult filter_step(const FilterState& p, double x, double sigma,
                             const MsmStateSpace& space);

double msm_log_likelihood(const std::vector<double>& x,
                          const MsmVolParams& params);

// Per-observation variant; fills one log-density per element of x.
double msm_log_likelihood(const std::vector<double>& x,
                          const MsmVolParams& params,
                          std::vector<double>* per_obs);

struct MsmSimulation {
  std::vector<double> x;
  std::vector<double> g_path;  // latent multiplier product per step
};

MsmSimulation msm_simulate(const MsmVolParams& params, std::size_t n,
                           std::uint64_t seed);

}  // namespace ratevol
