#include "ratevol/vuong.hpp"

#include <cmath>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

namespace {

struct Aligned {
  std::vector<double> d;  // log f_alt - log f_ref
  double penalty;
};

Aligned align(const ModelLogDensities& ref, const ModelLogDensities& alt) {
  const std::size_t m =
      std::min(ref.log_density.size(), alt.log_density.size());
  if (m < 30) throw std::invalid_argument("need at least 30 aligned addends");
  Aligned out;
  out.d.resize(m);
  const std::size_t ro = ref.log_density.size() - m;
  const std::size_t ao = alt.log_density.size() - m;
  for (std::size_t t = 0; t < m; ++t)
    out.d[t] = alt.log_density[ao + t] - ref.log_density[ro + t];
  out.penalty = 0.5 *
                (static_cast<double>(alt.n_params) -
                 static_cast<double>(ref.n_params)) *
                std::log(static_cast<double>(m));
  return out;
}

VuongReport build_report(const Aligned& a, double variance, bool hac,
                         std::size_t lag) {
  VuongReport report;
  report.hac = hac;
  report.hac_lag = lag;
  report.n_used = a.d.size();
  report.bic_penalty = a.penalty;
  const double m = static_cast<double>(a.d.size());
  double sum = 0.0;
  for (double v : a.d) sum += v;
  const double numerator = sum - a.penalty;
  if (!(variance > 0.0)) {
    report.degenerate = true;
    report.statistic = 0.0;
    report.p_value = 0.5;
    return report;
  }
  report.statistic = numerator / (std::sqrt(variance) * std::sqrt(m));
  report.p_value = normal_cdf(report.statistic);
  return report;
}

}  // namespace

VuongReport vuong(const ModelLogDensities& ref, const ModelLogDensities& alt) {
  const Aligned a = align(ref, alt);
  // divide-by-m variance around the mean, so the L = 0 HAC variant
  // reduces to this exactly
  return build_report(a, autocovariance(a.d, 0), false, 0);
}

double newey_west_variance(const std::vector<double>& x, std::size_t lag) {
  if (x.size() < 2) throw std::invalid_argument("need at least 2 points");
  double v = autocovariance(x, 0);
  for (std::size_t j = 1; j <= lag && j < x.size(); ++j) {
    const double w = 1.0 - static_cast<double>(j) / (static_cast<double>(lag) + 1.0);
    v += 2.0 * w * autocovariance(x, j);
  }
  return v;
}

std::size_t default_hac_lag(std::size_t m) {
  return static_cast<std::size_t>(
      std::floor(4.0 * std::pow(static_cast<double>(m) / 100.0, 2.0 / 9.0)));
}

VuongReport vuong_hac(const ModelLogDensities& ref,
                      const ModelLogDensities& alt,
                      std::optional<std::size_t> lag) {
  const Aligned a = align(ref, alt);
  const std::size_t L = lag.value_or(default_hac_lag(a.d.size()));
  double variance = newey_west_variance(a.d, L);
  // zero-variance (identical models) is degenerate, negative long-run
  // variance with nonzero addend spread asks for a different lag
  const double plain = autocovariance(a.d, 0);
  if (variance <= 0.0 && plain > 0.0)
    throw std::runtime_error(
        "Newey-West long-run variance nonpositive; try a larger lag");
  return build_report(a, variance, true, L);
}

}  // namespace ratevol
