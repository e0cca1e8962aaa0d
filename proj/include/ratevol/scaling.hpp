#pragma once

#include <cstddef>
#include <vector>

namespace ratevol {

struct StructureFunctionTable {
  std::vector<std::size_t> lags;
  std::vector<double> qs;
  // s[iq][ilag] = mean |X(t+lag) - X(t)|^q over overlapping increments
  std::vector<std::vector<double>> s;
  std::vector<std::vector<std::size_t>> counts;
};

StructureFunctionTable structure_functions(const std::vector<double>& path,
                                           const std::vector<std::size_t>& lags,
                                           const std::vector<double>& qs);

struct ZetaEstimate {
  double q;
  double zeta;
  double std_error;  // OLS slope standard error
};

// Per-q OLS slope of log S_q on log(lag) over [min_lag, max_lag].
std::vector<ZetaEstimate> zeta_fit(const StructureFunctionTable& table,
                                   std::size_t min_lag, std::size_t max_lag);

struct PersistenceFit {
  double exponent;     // slope of log autocov(|x|^q) vs log lag
  double std_error;
  std::size_t n_used;  // lags with positive autocovariance
  bool reliable;       // false when some autocovariances were nonpositive
};

PersistenceFit persistence_exponent(const std::vector<double>& x, double q,
                                    std::size_t min_lag, std::size_t max_lag);

}  // namespace ratevol
