#include "ratevol/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

StructureFunctionTable structure_functions(
    const std::vector<double>& path, const std::vector<std::size_t>& lags,
    const std::vector<double>& qs) {
  if (path.size() < 20) throw std::invalid_argument("path too short");
  for (std::size_t lag : lags)
    if (lag == 0 || lag >= path.size() / 10)
      throw std::invalid_argument("lag grid exceeds length/10 bound");

  StructureFunctionTable table;
  table.lags = lags;
  table.qs = qs;
  table.s.assign(qs.size(), std::vector<double>(lags.size(), 0.0));
  table.counts.assign(qs.size(), std::vector<std::size_t>(lags.size(), 0));

  for (std::size_t il = 0; il < lags.size(); ++il) {
    const std::size_t lag = lags[il];
    const std::size_t n = path.size() - lag;
    for (std::size_t iq = 0; iq < qs.size(); ++iq) {
      double sum = 0.0;
      for (std::size_t t = 0; t < n; ++t)
        sum += std::pow(std::abs(path[t + lag] - path[t]), qs[iq]);
      table.s[iq][il] = sum / static_cast<double>(n);
      table.counts[iq][il] = n;
    }
  }
  return table;
}

namespace {

struct OlsFit {
  double slope;
  double se;
};

OlsFit ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("need >= 2 points for regression");
  const double mx = mean(x), my = mean(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - intercept - slope * x[i];
    rss += r * r;
  }
  const double se =
      n > 2 ? std::sqrt(rss / (static_cast<double>(n) - 2.0) / sxx) : 0.0;
  return {slope, se};
}

}  // namespace

std::vector<ZetaEstimate> zeta_fit(const StructureFunctionTable& table,
                                   std::size_t min_lag, std::size_t max_lag) {
  std::vector<ZetaEstimate> out;
  for (std::size_t iq = 0; iq < table.qs.size(); ++iq) {
    std::vector<double> lx, ly;
    for (std::size_t il = 0; il < table.lags.size(); ++il) {
      const std::size_t lag = table.lags[il];
      if (lag < min_lag || lag > max_lag) continue;
      const double s = table.s[iq][il];
      if (!(s > 0.0))
        throw std::runtime_error("nonpositive structure function in range");
      lx.push_back(std::log(static_cast<double>(lag)));
      ly.push_back(std::log(s));
    }
    if (lx.size() < 4)
      throw std::invalid_argument("need >= 4 lags in the fit range");
    const OlsFit fit = ols_slope(lx, ly);
    out.push_back({table.qs[iq], fit.slope, fit.se});
  }
  return out;
}

PersistenceFit persistence_exponent(const std::vector<double>& x, double q,
                                    std::size_t min_lag, std::size_t max_lag) {
  if (q <= 0.0) throw std::invalid_argument("q must be > 0");
  if (min_lag < 1 || max_lag <= min_lag)
    throw std::invalid_argument("bad lag range");
  if (x.size() <= 2 * max_lag)
    throw std::invalid_argument("series too short for lag range");

  std::vector<double> absq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    absq[i] = std::pow(std::abs(x[i]), q);

  std::vector<double> lx, ly;
  bool all_positive = true;
  for (std::size_t lag = min_lag; lag <= max_lag; ++lag) {
    const double cov = autocovariance(absq, lag);
    if (cov > 0.0) {
      lx.push_back(std::log(static_cast<double>(lag)));
      ly.push_back(std::log(cov));
    } else {
      all_positive = false;
    }
  }
  if (lx.size() < 3)
    return {0.0, 0.0, lx.size(), false};
  const OlsFit fit = ols_slope(lx, ly);
  return {fit.slope, fit.se, lx.size(), all_positive};
}

}  // namespace ratevol
