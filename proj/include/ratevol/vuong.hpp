#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ratevol {

// Per-observation log-densities of a fitted model plus its parameter count.
struct ModelLogDensities {
  std::vector<double> log_density;
  std::size_t n_params = 0;
};

struct VuongReport {
  double statistic = 0.0;
  double p_value = 0.5;       // one-sided, Phi(statistic)
  bool hac = false;
  std::size_t hac_lag = 0;
  std::size_t n_used = 0;     // aligned observation count
  double bic_penalty = 0.0;   // (k_alt - k_ref) * ln(m) / 2
  bool degenerate = false;    // identical models (zero variance of d_t)
};

// Test of equal per-observation BIC for ref vs alt. Vectors are aligned on
// their trailing observations (models with a longer pre-sample drop leading
// addends). Negative statistic favors the reference model.
VuongReport vuong(const ModelLogDensities& ref, const ModelLogDensities& alt);

// Newey-West long-run variance of x (demeaned) with Bartlett weights.
double newey_west_variance(const std::vector<double>& x, std::size_t lag);

// Default truncation lag floor(4 * (m/100)^{2/9}).
std::size_t default_hac_lag(std::size_t m);

VuongReport vuong_hac(const ModelLogDensities& ref,
                      const ModelLogDensities& alt,
                      std::optional<std::size_t> lag = std::nullopt);

}  // namespace ratevol
