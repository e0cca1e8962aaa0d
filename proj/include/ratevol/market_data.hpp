#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ratevol {

// Calendar date, comparable by (year, month, day).
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;
  std::string to_string() const;
};

// Parses ISO-8601 (YYYY-MM-DD) or MM/DD/YYYY.
std::optional<Date> parse_date(const std::string& s);

// Dated daily rate observations. `shift` records the cumulative offset b
// already added to the raw values.
struct RateSeries {
  std::vector<Date> dates;
  std::vector<double> values;
  double shift = 0.0;

  std::size_t size() const { return values.size(); }
  void validate() const;  // throws on invariant violation
};

struct IncrementSeries {
  std::vector<double> deltas;        // r_t - r_{t-1}
  std::vector<double> lagged_level;  // r_{t-1}
};

struct ConditionalSdvProfile {
  std::vector<double> centers;  // mean lagged level per bin
  std::vector<double> sdv;      // sample sd of increments per bin
  std::vector<std::size_t> counts;
};

struct CsvColumnSpec {
  // Column selected by name (when the file has a header) or 0-based index.
  std::string date_column = "0";
  std::string rate_column = "1";
};

struct CsvLoadResult {
  RateSeries series;
  std::size_t dropped_rows = 0;  // rows with a missing rate value
};

CsvLoadResult load_csv(const std::string& path, const CsvColumnSpec& spec = {});

RateSeries apply_shift(const RateSeries& series, double b);

IncrementSeries increments(const RateSeries& series);

ConditionalSdvProfile conditional_sdv(const RateSeries& series,
                                      std::size_t n_bins,
                                      std::size_t min_occupancy);

// Least-squares fit of sdv(r) = c * r^gamma - b to a profile, b clamped >= 0.
struct ShiftFit {
  double c;
  double gamma;
  double b;
  double rss;
  bool converged;
};
ShiftFit fit_shift(const ConditionalSdvProfile& profile);

// (dr_t - (alpha0 + alpha1 * r_{t-1})) / r_{t-1}^gamma for t = 2..n.
std::vector<double> normalized_increments(const RateSeries& series,
                                          double alpha0, double alpha1,
                                          double gamma);

struct AcfResult {
  std::vector<double> acf;  // lags 1..max_lag
  double band_halfwidth;    // 1.96 / sqrt(n)
};
AcfResult sample_acf(const std::vector<double>& x, std::size_t max_lag);

}  // namespace ratevol
