#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ratevol/stats.hpp"

namespace ratevol {

// Random multiplier law with its analytic moments (used by the scaling
// oracles). `declared_mean` is the caller-declared E[M].
struct MultiplierSampler {
  std::function<double(Rng&)> sample;
  std::function<double(double)> moment;  // q -> E[M^q]
  double declared_mean = 1.0;
};

// Two-point law on {m0, 2-m0}, equiprobable; E[M] = 1.
MultiplierSampler binomial_multiplier(double m0);
// Lognormal with E[M] = target_mean and log-sd s.
MultiplierSampler lognormal_multiplier(double target_mean, double s);
// Deterministic constant.
MultiplierSampler constant_multiplier(double value);

struct MeasureRealization {
  std::string kind;
  std::size_t depth = 0;
  double T = 1.0;
  std::vector<double> boundaries;  // N + 1 points, 0 = first, T = last
  std::vector<double> masses;      // N cell masses, >= 0

  double total_mass() const;
  // Theta evaluated at the cell boundaries (cumulative mass).
  std::vector<double> cumulative() const;
};

// Analytic scaling exponents: T(q) of the measure and zeta(q) of the
// composed process.
struct ScalingFunction {
  std::function<double(double)> measure_T;
  std::function<double(double)> zeta;
};

// Conservative dyadic cascade: children get mass fractions {p, 1-p} in
// random order; total mass is exactly 1.
MeasureRealization dyadic_bernoulli(double p, std::size_t depth, double T,
                                    std::uint64_t seed);
// T(q) = log2(p^q + (1-p)^q); zeta(q) = 1 - T(q/2).
ScalingFunction dyadic_scaling(double p);

// b-adic multiplicative cascade with E[M] = 1/b. The infinite-depth mass
// corrector is approximated by 1 (unbiased in expectation).
MeasureRealization badic_cascade(std::size_t b, const MultiplierSampler& M,
                                 std::size_t depth, double T,
                                 std::uint64_t seed);
// zeta(q) = -log_b E[M^{q/2}] (equals q/2 - log_b E[(bM)^{q/2}]).
ScalingFunction badic_scaling(std::size_t b, const MultiplierSampler& M);

// Poisson multifractal: level-k cuts from exponential waiting times at rate
// l_k = b^{k-1} * l1; per-branch multipliers with E[M] = 1; cell mass is
// (length / T) * product of multipliers. Requires E[M^2] < b to converge.
MeasureRealization poisson_multifractal(double b, double l1,
                                        const MultiplierSampler& M,
                                        std::size_t levels, double T,
                                        std::uint64_t seed);
// zeta(q) = 1 - T(q/2) with T(q) = 1 - q + log_b E[M^q].
ScalingFunction poisson_scaling(double b, const MultiplierSampler& M);

// X at the cell boundaries: independent Gaussian increments with per-cell
// variance sigma^2 * T * mass.
struct MmarPath {
  std::vector<double> times;
  std::vector<double> values;
};
MmarPath mmar_compose(const MeasureRealization& measure, double sigma,
                      std::uint64_t seed);

// Geometric-waiting-time discretization of the Poisson cascade. Each level k
// redraws its multiplier after geometric(lambda_k) steps; emits
// x_t = sigma * (product of level multipliers)^{1/2} * eps_t.
// The ladder is anchored at lambda_K when anchor_is_K, else at lambda_1.
std::vector<double> discretize_to_msm(double b, double lambda_anchor,
                                      bool anchor_is_K, std::size_t K,
                                      const MultiplierSampler& M, double sigma,
                                      std::size_t n, std::uint64_t seed);

}  // namespace ratevol
