#include "ratevol/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ratevol {

double normal_pdf(double x, double variance) {
  return std::exp(-0.5 * x * x / variance) /
         std::sqrt(2.0 * std::numbers::pi * variance);
}

double normal_log_pdf(double x, double variance) {
  return -0.5 * (std::log(2.0 * std::numbers::pi * variance) +
                 x * x / variance);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double student_t_std_log_pdf(double x, double nu, double variance) {
  if (nu <= 2.0) throw std::invalid_argument("student-t requires nu > 2");
  if (variance <= 0.0) throw std::invalid_argument("variance must be > 0");
  const double z2 = x * x / ((nu - 2.0) * variance);
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(std::numbers::pi * (nu - 2.0) * variance) -
         0.5 * (nu + 1.0) * std::log1p(z2);
}

double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

double sample_sd(std::span<const double> x) {
  return std::sqrt(sample_variance(x));
}

double autocovariance(std::span<const double> x, std::size_t lag) {
  const std::size_t n = x.size();
  if (lag >= n) throw std::invalid_argument("lag >= series length");
  const double m = mean(x);
  double s = 0.0;
  for (std::size_t t = lag; t < n; ++t) s += (x[t] - m) * (x[t - lag] - m);
  return s / static_cast<double>(n);
}

namespace {

// Asymptotic Kolmogorov distribution survival function Q(lambda).
double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term =
        2.0 * std::pow(-1.0, j - 1) * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("KS test needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  // Stephens' small-sample correction.
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  return {d, kolmogorov_q(lambda)};
}

}  // namespace ratevol
