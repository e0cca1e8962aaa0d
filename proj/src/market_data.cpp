#include "ratevol/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ratevol/fitting.hpp"
#include "ratevol/stats.hpp"

namespace ratevol {

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::optional<Date> parse_date(const std::string& s) {
  int y, m, d;
  if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &m, &d) == 3) {
    if (m >= 1 && m <= 12 && d >= 1 && d <= 31) return Date{y, m, d};
    return std::nullopt;
  }
  if (std::sscanf(s.c_str(), "%d/%d/%d", &m, &d, &y) == 3) {
    if (m >= 1 && m <= 12 && d >= 1 && d <= 31) return Date{y, m, d};
    return std::nullopt;
  }
  return std::nullopt;
}

void RateSeries::validate() const {
  if (values.size() < 2) throw std::invalid_argument("series length < 2");
  if (dates.size() != values.size())
    throw std::invalid_argument("dates/values length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw std::invalid_argument("non-finite rate value");
    if (i > 0 && !(dates[i - 1] < dates[i]))
      throw std::invalid_argument("dates not strictly increasing at index " +
                                  std::to_string(i));
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim
    auto b = field.find_first_not_of(" \t\r\"");
    auto e = field.find_last_not_of(" \t\r\"");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

// Resolve a column spec (name or 0-based index) against a header row.
std::size_t resolve_column(const std::string& spec,
                           const std::vector<std::string>& header) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == spec) return i;
  try {
    return static_cast<std::size_t>(std::stoul(spec));
  } catch (...) {
    throw std::runtime_error("column '" + spec + "' not found");
  }
}

}  // namespace

CsvLoadResult load_csv(const std::string& path, const CsvColumnSpec& spec) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  CsvLoadResult result;
  std::vector<std::pair<Date, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::size_t date_idx = 0, rate_idx = 1;
  bool columns_resolved = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (line[0] == '#') continue;  // comment / provenance footer
    auto fields = split_csv_line(line);
    if (!columns_resolved) {
      // A header row is one whose date column does not parse as a date.
      date_idx = resolve_column(spec.date_column, fields);
      rate_idx = resolve_column(spec.rate_column, fields);
      columns_resolved = true;
      if (date_idx < fields.size() && !parse_date(fields[date_idx]))
        continue;  // header consumed
    }
    if (date_idx >= fields.size() || rate_idx >= fields.size())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": too few columns");
    auto date = parse_date(fields[date_idx]);
    if (!date)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unparseable date '" + fields[date_idx] + "'");
    const std::string& rate_str = fields[rate_idx];
    if (rate_str.empty() || rate_str == "." || rate_str == "NA" ||
        rate_str == "ND") {
      ++result.dropped_rows;
      continue;
    }
    try {
      std::size_t pos = 0;
      const double v = std::stod(rate_str, &pos);
      if (pos != rate_str.size()) throw std::invalid_argument("trailing");
      rows.emplace_back(*date, v);
    } catch (...) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unparseable rate '" + rate_str + "'");
    }
  }
  if (rows.size() < 2)
    throw std::runtime_error(path + ": fewer than 2 valid rows");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [d, v] : rows) {
    result.series.dates.push_back(d);
    result.series.values.push_back(v);
  }
  result.series.validate();
  return result;
}

RateSeries apply_shift(const RateSeries& series, double b) {
  if (b < 0.0) throw std::invalid_argument("shift must be nonnegative");
  RateSeries out = series;
  out.shift += b;
  for (auto& v : out.values) v += b;
  if (b > 0.0) {
    for (double v : out.values)
      if (v <= 0.0)
        throw std::runtime_error("nonpositive rate after shift");
  }
  return out;
}

IncrementSeries increments(const RateSeries& series) {
  series.validate();
  IncrementSeries out;
  out.deltas.reserve(series.size() - 1);
  out.lagged_level.reserve(series.size() - 1);
  for (std::size_t t = 1; t < series.size(); ++t) {
    out.deltas.push_back(series.values[t] - series.values[t - 1]);
    out.lagged_level.push_back(series.values[t - 1]);
  }
  return out;
}

ConditionalSdvProfile conditional_sdv(const RateSeries& series,
                                      std::size_t n_bins,
                                      std::size_t min_occupancy) {
  if (n_bins < 2) throw std::invalid_argument("n_bins must be >= 2");
  auto inc = increments(series);
  const std::size_t n = inc.deltas.size();
  if (n < 2 * std::max<std::size_t>(min_occupancy, 1))
    throw std::invalid_argument("series too short for 2 bins");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inc.lagged_level[a] < inc.lagged_level[b];
  });

  // equal-occupancy quantile bins
  struct Bin {
    std::vector<double> levels, deltas;
  };
  std::vector<Bin> bins;
  for (std::size_t b = 0; b < n_bins; ++b) {
    const std::size_t lo = b * n / n_bins;
    const std::size_t hi = (b + 1) * n / n_bins;
    if (lo >= hi) continue;
    Bin bin;
    for (std::size_t i = lo; i < hi; ++i) {
      bin.levels.push_back(inc.lagged_level[order[i]]);
      bin.deltas.push_back(inc.deltas[order[i]]);
    }
    bins.push_back(std::move(bin));
  }
  // merge bins below min_occupancy with a neighbor
  for (std::size_t i = 0; i < bins.size() && bins.size() > 1;) {
    if (bins[i].levels.size() < min_occupancy) {
      const std::size_t j = (i + 1 < bins.size()) ? i + 1 : i - 1;
      auto& dst = bins[std::min(i, j)];
      auto& src = bins[std::max(i, j)];
      dst.levels.insert(dst.levels.end(), src.levels.begin(), src.levels.end());
      dst.deltas.insert(dst.deltas.end(), src.deltas.begin(), src.deltas.end());
      bins.erase(bins.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
      i = 0;
    } else {
      ++i;
    }
  }

  ConditionalSdvProfile profile;
  for (const auto& bin : bins) {
    profile.centers.push_back(mean(bin.levels));
    profile.sdv.push_back(bin.deltas.size() > 1 ? sample_sd(bin.deltas) : 0.0);
    profile.counts.push_back(bin.levels.size());
  }
  return profile;
}

ShiftFit fit_shift(const ConditionalSdvProfile& profile) {
  if (profile.centers.size() < 3)
    throw std::invalid_argument("profile needs >= 3 bins");

  auto sse = [&](const std::vector<double>& th) {
    const double c = th[0], g = th[1], b = th[2];
    double s = 0.0;
    for (std::size_t i = 0; i < profile.centers.size(); ++i) {
      const double r = profile.centers[i];
      if (r <= 0.0 && g != 0.0) {
        // power of a nonpositive level: fit on the positive part only
        if (r < 0.0) return 1e300;
      }
      const double pred = c * std::pow(std::max(r, 1e-300), g) - b;
      const double res = pred - profile.sdv[i];
      s += res * res;
    }
    return s;
  };

  ParamTransform transform{{Transform::lower(0.0), Transform::lower(0.0),
                            Transform::lower(0.0)}};
  // crude scale-aware starts
  const double sdv_scale = std::max(mean(profile.sdv), 1e-6);
  MaximizeOptions opts;
  opts.starts = 8;
  opts.seed = 17;
  opts.start_ranges = {{0.1 * sdv_scale, 10.0 * sdv_scale},
                       {0.01, 1.5},
                       {1e-4, 0.5}};
  opts.warm_starts = {{sdv_scale, 0.5, 0.01}};
  opts.nm.max_evals = 40000;
  opts.nm.restarts = 3;
  opts.nm.f_tol = 1e-18;
  opts.nm.x_tol = 1e-10;
  auto report = maximize([&](const std::vector<double>& th) { return -sse(th); },
                         transform, opts);
  ShiftFit fit;
  fit.c = report.estimates[0];
  fit.gamma = report.estimates[1];
  fit.b = report.estimates[2];
  fit.rss = -report.log_likelihood;
  fit.converged = report.converged;
  if (!fit.converged) throw std::runtime_error("fit_shift did not converge");
  return fit;
}

std::vector<double> normalized_increments(const RateSeries& series,
                                          double alpha0, double alpha1,
                                          double gamma) {
  auto inc = increments(series);
  std::vector<double> out;
  out.reserve(inc.deltas.size());
  for (std::size_t i = 0; i < inc.deltas.size(); ++i) {
    const double r = inc.lagged_level[i];
    if (r <= 0.0 && gamma != 0.0)
      throw std::runtime_error("nonpositive level at increment " +
                               std::to_string(i));
    const double scale = gamma == 0.0 ? 1.0 : std::pow(r, gamma);
    out.push_back((inc.deltas[i] - (alpha0 + alpha1 * r)) / scale);
  }
  return out;
}

AcfResult sample_acf(const std::vector<double>& x, std::size_t max_lag) {
  if (x.size() <= max_lag + 1)
    throw std::invalid_argument("series too short for max_lag");
  AcfResult result;
  const double c0 = autocovariance(x, 0);
  result.acf.reserve(max_lag);
  for (std::size_t k = 1; k <= max_lag; ++k)
    result.acf.push_back(c0 > 0.0 ? autocovariance(x, k) / c0 : 0.0);
  result.band_halfwidth = 1.96 / std::sqrt(static_cast<double>(x.size()));
  return result;
}

}  // namespace ratevol
