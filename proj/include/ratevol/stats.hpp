#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ratevol {

using Rng = std::mt19937_64;

// Density of N(0, variance) at x.
double normal_pdf(double x, double variance);
double normal_log_pdf(double x, double variance);

// Standard normal CDF.
double normal_cdf(double x);

// Log-density of the centralized, unit-variance-scaled student-t:
// X = Z * sqrt(variance*(nu-2)/nu) with Z ~ t_nu, so Var[X] = variance.
// Requires nu > 2.
double student_t_std_log_pdf(double x, double nu, double variance);

double mean(std::span<const double> x);
// Unbiased (n-1) sample variance.
double sample_variance(std::span<const double> x);
double sample_sd(std::span<const double> x);

// Biased (divide-by-n) sample autocovariance at the given lag, around the
// sample mean.
double autocovariance(std::span<const double> x, std::size_t lag);

// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
struct KsResult {
  double statistic;
  double p_value;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace ratevol
