// Command-line driver: data prep, model fitting, model comparison,
// simulation, cascade construction and scaling analysis.
//
// Exit codes: 0 success, 2 input error, 3 convergence failure, 4 config
// error. Stochastic commands require --seed. Outputs are written atomically
// (temp file + rename) and carry a provenance footer (config hash + seed).

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratevol/cascades.hpp"
#include "ratevol/models.hpp"
#include "ratevol/scaling.hpp"
#include "ratevol/vuong.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitConfig = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Provenance {
  std::uint64_t config_hash = 0;
  std::optional<std::uint64_t> seed;

  std::string footer() const {
    char buf[128];
    if (seed)
      std::snprintf(buf, sizeof buf, "# provenance config_hash=%016" PRIx64
                    " seed=%" PRIu64 "\n", config_hash, *seed);
    else
      std::snprintf(buf, sizeof buf,
                    "# provenance config_hash=%016" PRIx64 "\n", config_hash);
    return buf;
  }
};

// Hash of the effective invocation: argv plus the config file content.
Provenance make_provenance(int argc, char** argv, const std::string& config_path,
                           std::optional<std::uint64_t> seed) {
  std::string blob;
  for (int i = 1; i < argc; ++i) {
    blob += argv[i];
    blob += '\n';
  }
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    blob += std::string(std::istreambuf_iterator<char>(in), {});
  }
  return Provenance{fnv1a(blob), seed};
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string fmt_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}
std::string fmt_ll(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}
std::string fmt_bic(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

ratevol::RateSeries load_series(const std::string& path,
                                const std::string& date_col,
                                const std::string& rate_col, double shift) {
  if (!std::filesystem::exists(path))
    throw InputError("input file not found: " + path);
  ratevol::CsvColumnSpec spec{date_col, rate_col};
  auto result = ratevol::load_csv(path, spec);
  if (result.dropped_rows > 0)
    std::cerr << "note: dropped " << result.dropped_rows
              << " rows with missing values\n";
  if (shift != 0.0) return ratevol::apply_shift(result.series, shift);
  return result.series;
}

std::string series_to_csv(const ratevol::RateSeries& s) {
  std::ostringstream out;
  out << "date,rate\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", s.values[i]);
    out << s.dates[i].to_string() << ',' << buf << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- prep ----

struct PrepArgs {
  std::string input, date_col = "0", rate_col = "1", out_dir = ".";
  std::size_t bins = 20, min_occupancy = 50;
  double shift = 0.0;
  bool do_fit_shift = false;
};

int run_prep(const PrepArgs& a, const Provenance& prov) {
  auto series = load_series(a.input, a.date_col, a.rate_col, a.shift);
  auto profile = ratevol::conditional_sdv(series, a.bins, a.min_occupancy);

  std::ostringstream csv;
  csv << "center,sdv,count\n";
  for (std::size_t i = 0; i < profile.centers.size(); ++i)
    csv << fmt_param(profile.centers[i]) << ',' << fmt_param(profile.sdv[i])
        << ',' << profile.counts[i] << '\n';
  csv << prov.footer();
  atomic_write(a.out_dir + "/sdv_profile.csv", csv.str());

  std::ostringstream report;
  report << "observations=" << series.size() << "\n";
  report << "bins=" << profile.centers.size() << "\n";
  if (a.do_fit_shift) {
    auto fit = ratevol::fit_shift(profile);
    report << "fit c=" << fmt_param(fit.c) << " gamma=" << fmt_param(fit.gamma)
           << " b=" << fmt_param(fit.b) << " rss=" << fmt_param(fit.rss)
           << " converged=" << (fit.converged ? "yes" : "no") << "\n";
    if (!fit.converged) {
      report << prov.footer();
      atomic_write(a.out_dir + "/prep_report.txt", report.str());
      std::cout << report.str();
      return kExitConvergence;
    }
  }
  report << prov.footer();
  atomic_write(a.out_dir + "/prep_report.txt", report.str());
  std::cout << report.str();
  return kExitOk;
}

// ----------------------------------------------------------------- fit ----

struct FitArgs {
  std::string input, date_col = "0", rate_col = "1", out_dir = ".";
  std::vector<std::string> models;
  double shift = 0.0;
  std::size_t msm_k = 9;
  std::size_t starts = 4;
  std::size_t max_evals = 20000;
  std::uint64_t seed = 0;
  bool with_alpha1 = false;
  bool no_se = false;
};

std::string per_obs_csv(const ratevol::FitReport& r, const Provenance& prov) {
  std::ostringstream out;
  out << "# model=" << r.model_id << " n_params=" << r.n_params
      << " log_likelihood=" << fmt_ll(r.log_likelihood)
      << " n_addends=" << r.n_addends << "\n";
  out << "index,log_density\n";
  for (std::size_t i = 0; i < r.per_obs_log_density.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.per_obs_log_density[i]);
    out << i << ',' << buf << '\n';
  }
  out << prov.footer();
  return out.str();
}

int run_fit(const FitArgs& a, const Provenance& prov) {
  auto series = load_series(a.input, a.date_col, a.rate_col, a.shift);
  ratevol::FitControl control;
  control.starts = a.starts;
  control.seed = a.seed;
  control.max_evals = a.max_evals;
  control.with_alpha1 = a.with_alpha1;
  control.compute_se = !a.no_se;

  bool all_converged = true;
  std::ostringstream table;
  table << "model\tparameters\tlogL\tBIC\tconverged\n";
  for (const auto& model : a.models) {
    ratevol::FitReport report;
    if (model == "cev-normal")
      report = ratevol::fit_cev(series, ratevol::InnovationFamily::Normal,
                                control);
    else if (model == "cev-t")
      report = ratevol::fit_cev(series, ratevol::InnovationFamily::StudentT,
                                control);
    else if (model == "msm")
      report = ratevol::fit_msm(series, a.msm_k, control);
    else if (model == "garch")
      report = ratevol::fit_garch(series, control);
    else if (model == "egarch")
      report = ratevol::fit_egarch(series, control);
    else if (model == "jump")
      report = ratevol::fit_jumpdiff(series, control);
    else
      throw ConfigError("unknown model: " + model);

    atomic_write(a.out_dir + "/" + model + ".report.txt",
                 report.serialize() + prov.footer());
    atomic_write(a.out_dir + "/" + model + ".perobs.csv",
                 per_obs_csv(report, prov));

    table << report.model_id << '\t';
    for (std::size_t i = 0; i < report.estimates.size(); ++i) {
      if (i) table << ' ';
      table << report.param_names[i] << '=' << fmt_param(report.estimates[i]);
    }
    table << '\t' << fmt_ll(report.log_likelihood) << '\t'
          << fmt_bic(report.bic) << '\t'
          << (report.converged ? "yes" : "no") << '\n';
    all_converged = all_converged && report.converged;
  }
  std::string text = table.str() + prov.footer();
  atomic_write(a.out_dir + "/fit_table.txt", text);
  std::cout << text;
  return all_converged ? kExitOk : kExitConvergence;
}

// ------------------------------------------------------------- compare ----

struct PerObsFile {
  std::string model;
  std::size_t n_params = 0;
  double log_likelihood = 0.0;
  std::vector<double> log_density;
};

PerObsFile read_per_obs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read per-observation file: " + path);
  PerObsFile out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hdr(line.substr(1));
      std::string token;
      while (hdr >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string val = token.substr(eq + 1);
        if (key == "model") out.model = val;
        else if (key == "n_params") out.n_params = std::stoul(val);
        else if (key == "log_likelihood") out.log_likelihood = std::stod(val);
      }
      continue;
    }
    if (line.rfind("index,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw InputError("malformed per-observation row in " + path);
    out.log_density.push_back(std::stod(line.substr(comma + 1)));
  }
  if (out.log_density.empty())
    throw InputError("no per-observation densities in " + path);
  return out;
}

struct CompareArgs {
  std::string reference, out_dir = ".";
  std::vector<std::string> alternatives;
  std::optional<std::size_t> hac_lag;
};

int run_compare(const CompareArgs& a, const Provenance& prov) {
  auto ref = read_per_obs(a.reference);
  const double n_ref = static_cast<double>(ref.log_density.size());

  std::ostringstream table;
  table << "model\tdim\tlogL\tBIC\tVuong(p)\tHAC(p)\n";
  {
    double ll = 0.0;
    for (double v : ref.log_density) ll += v;
    table << ref.model << '\t' << ref.n_params << '\t' << fmt_ll(ll) << '\t'
          << fmt_bic(ratevol::bic(ll, ref.n_params, ref.log_density.size()))
          << "\treference\treference\n";
  }
  for (const auto& path : a.alternatives) {
    auto alt = read_per_obs(path);
    const double nd =
        std::fabs(n_ref - static_cast<double>(alt.log_density.size()));
    if (nd > 5)
      throw InputError("observation counts differ by more than the "
                       "pre-sample allowance: " + path);
    ratevol::ModelLogDensities mref{ref.log_density, ref.n_params};
    ratevol::ModelLogDensities malt{alt.log_density, alt.n_params};
    auto plain = ratevol::vuong(mref, malt);
    auto hac = ratevol::vuong_hac(mref, malt, a.hac_lag);
    double ll = 0.0;
    for (double v : alt.log_density) ll += v;
    char pv[96], ph[96];
    std::snprintf(pv, sizeof pv, "%.3f (%.3f)", plain.statistic,
                  plain.p_value);
    std::snprintf(ph, sizeof ph, "%.3f (%.3f)", hac.statistic, hac.p_value);
    table << alt.model << '\t' << alt.n_params << '\t' << fmt_ll(ll) << '\t'
          << fmt_bic(ratevol::bic(ll, alt.n_params, alt.log_density.size()))
          << '\t' << pv << '\t' << ph << '\n';
  }
  std::string text = table.str() + prov.footer();
  atomic_write(a.out_dir + "/compare_table.txt", text);
  std::cout << text;
  return kExitOk;
}

// ------------------------------------------------------------ simulate ----

struct SimulateArgs {
  std::string kind, out_dir = ".";
  std::size_t n = 10000;
  std::uint64_t seed = 0;
  std::size_t msm_k = 9;
  double m0 = 1.5, b = 2.0, lambda_k = 0.9, sigma = 0.05;
  double alpha0 = 0.0, gamma = 0.0, nu = 5.0;
  double a0 = 1e-5, a1 = 0.0, bg = 0.0, a2 = 0.0;
  double c = -3.0, d = 0.0, tau = 0.1;
  double r0 = 5.0;
};

int run_simulate(const SimulateArgs& a, const Provenance& prov) {
  using namespace ratevol;
  std::string content;
  if (a.kind == "msm") {
    MsmVolParams p{a.msm_k, a.m0, a.b, a.lambda_k, a.sigma};
    auto sim = msm_simulate(p, a.n, a.seed);
    std::ostringstream out;
    out << "t,x,g\n";
    for (std::size_t t = 0; t < sim.x.size(); ++t) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g\n", t, sim.x[t],
                    sim.g_path[t]);
      out << buf;
    }
    content = out.str();
  } else if (a.kind == "garch") {
    LevelGarchParams p;
    p.alpha0 = a.alpha0;
    p.gamma = a.gamma;
    p.a0 = a.a0;
    p.a1 = a.a1;
    p.b = a.bg;
    p.nu = a.nu;
    content = series_to_csv(garch_simulate(p, a.r0, a.n, a.seed).series);
  } else if (a.kind == "egarch") {
    LevelEgarchParams p;
    p.alpha0 = a.alpha0;
    p.gamma = a.gamma;
    p.a0 = a.a0;
    p.a1 = a.a1;
    p.a2 = a.a2;
    p.b = a.bg;
    p.nu = a.nu;
    content = series_to_csv(egarch_simulate(p, a.r0, a.n, a.seed).series);
  } else if (a.kind == "jump") {
    JumpDiffParams p;
    p.alpha0 = a.alpha0;
    p.gamma = a.gamma;
    p.a0 = a.a0;
    p.a1 = a.a1;
    p.b = a.bg;
    p.c = a.c;
    p.d = a.d;
    p.tau = a.tau;
    content = series_to_csv(jumpdiff_simulate(p, a.r0, a.r0, a.n, a.seed).series);
  } else if (a.kind == "cev") {
    Rng rng(a.seed);
    std::normal_distribution<double> gauss(0.0, a.sigma);
    DriftSpec drift{a.alpha0, std::nullopt};
    auto sim = level_simulate(drift, a.gamma, [&] { return gauss(rng); },
                              a.r0, a.n);
    content = series_to_csv(sim.series);
  } else {
    throw ConfigError("unknown simulation kind: " + a.kind);
  }
  content += prov.footer();
  atomic_write(a.out_dir + "/sim_" + a.kind + ".csv", content);
  std::cout << "wrote " << a.out_dir << "/sim_" << a.kind << ".csv\n";
  return kExitOk;
}

// ------------------------------------------------------------- cascade ----

struct CascadeArgs {
  std::string kind, out_dir = ".", multiplier = "binomial";
  double p = 0.5, m0 = 1.5, log_sd = 0.3, bb = 2.0, l1 = 5.0, T = 1.0;
  std::size_t depth = 10, badic_b = 2;
  std::uint64_t seed = 0;
  bool strict = false;
  std::optional<double> compose_sigma;
};

ratevol::MultiplierSampler make_multiplier(const CascadeArgs& a,
                                           double target_mean) {
  if (a.multiplier == "binomial") return ratevol::binomial_multiplier(a.m0);
  if (a.multiplier == "lognormal")
    return ratevol::lognormal_multiplier(target_mean, a.log_sd);
  if (a.multiplier == "constant")
    return ratevol::constant_multiplier(target_mean);
  throw ConfigError("unknown multiplier kind: " + a.multiplier);
}

int run_cascade(const CascadeArgs& a, const Provenance& prov) {
  using namespace ratevol;
  MeasureRealization m;
  if (a.kind == "dyadic") {
    m = dyadic_bernoulli(a.p, a.depth, a.T, a.seed);
  } else if (a.kind == "badic") {
    auto M = make_multiplier(a, 1.0 / static_cast<double>(a.badic_b));
    m = badic_cascade(a.badic_b, M, a.depth, a.T, a.seed);
  } else if (a.kind == "poisson") {
    auto M = make_multiplier(a, 1.0);
    if (M.moment(2.0) >= a.bb) {
      const std::string msg = "E[M^2] >= b: the construction does not converge";
      if (a.strict) throw ConfigError(msg);
      std::cerr << "warning: " << msg << "\n";
    }
    m = poisson_multifractal(a.bb, a.l1, M, a.depth, a.T, a.seed);
  } else {
    throw ConfigError("unknown cascade kind: " + a.kind);
  }

  std::ostringstream out;
  auto theta = m.cumulative();
  if (a.compose_sigma) {
    auto path = mmar_compose(m, *a.compose_sigma, a.seed + 1);
    out << "boundary,cumulative_mass,path\n";
    for (std::size_t i = 0; i < m.boundaries.size(); ++i) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", m.boundaries[i],
                    theta[i], path.values[i]);
      out << buf;
    }
  } else {
    out << "boundary,cumulative_mass\n";
    for (std::size_t i = 0; i < m.boundaries.size(); ++i) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.10g,%.10g\n", m.boundaries[i],
                    theta[i]);
      out << buf;
    }
  }
  out << prov.footer();
  atomic_write(a.out_dir + "/cascade_" + a.kind + ".csv", out.str());
  std::cout << "wrote " << a.out_dir << "/cascade_" << a.kind << ".csv\n";
  return kExitOk;
}

// ------------------------------------------------------------- scaling ----

struct ScalingArgs {
  std::string input, construction, out_dir = ".";
  std::string date_col = "0", rate_col = "1";
  double p = 0.3, sigma = 1.0;
  std::size_t depth = 12, realizations = 20;
  std::uint64_t seed = 0;
  std::vector<double> qs{1.0, 2.0, 3.0};
  std::size_t min_lag = 1, max_lag = 10;
};

int run_scaling(const ScalingArgs& a, const Provenance& prov) {
  using namespace ratevol;
  std::vector<std::size_t> lags;
  for (std::size_t l = a.min_lag; l <= a.max_lag; ++l) lags.push_back(l);

  StructureFunctionTable table;
  std::optional<ScalingFunction> oracle;
  if (!a.construction.empty()) {
    if (a.construction != "dyadic")
      throw ConfigError("unsupported construction: " + a.construction);
    oracle = dyadic_scaling(a.p);
    // pool S_q over realizations, then regress once
    table.lags = lags;
    table.qs = a.qs;
    table.s.assign(a.qs.size(), std::vector<double>(lags.size(), 0.0));
    for (std::size_t rep = 0; rep < a.realizations; ++rep) {
      auto m = dyadic_bernoulli(a.p, a.depth, 1.0, a.seed + 2 * rep);
      auto path = mmar_compose(m, a.sigma, a.seed + 2 * rep + 1);
      auto t = structure_functions(path.values, lags, a.qs);
      for (std::size_t iq = 0; iq < a.qs.size(); ++iq)
        for (std::size_t il = 0; il < lags.size(); ++il)
          table.s[iq][il] += t.s[iq][il] / double(a.realizations);
    }
  } else if (!a.input.empty()) {
    auto series = load_series(a.input, a.date_col, a.rate_col, 0.0);
    table = structure_functions(series.values, lags, a.qs);
  } else {
    throw ConfigError("scaling needs either --input or --construction");
  }

  auto zetas = zeta_fit(table, a.min_lag, a.max_lag);
  std::ostringstream out;
  out << (oracle ? "q,zeta,se,analytic,abs_gap\n" : "q,zeta,se\n");
  double max_gap = 0.0;
  for (const auto& z : zetas) {
    out << fmt_param(z.q) << ',' << fmt_param(z.zeta) << ','
        << fmt_param(z.std_error);
    if (oracle) {
      const double an = oracle->zeta(z.q);
      const double gap = std::fabs(z.zeta - an);
      max_gap = std::max(max_gap, gap);
      out << ',' << fmt_param(an) << ',' << fmt_param(gap);
    }
    out << '\n';
  }
  if (oracle) out << "# max_abs_gap=" << fmt_param(max_gap) << '\n';
  out << prov.footer();
  atomic_write(a.out_dir + "/zeta_table.csv", out.str());
  std::cout << out.str();
  return kExitOk;
}

// ----------------------------------------------------------------- acf ----

struct AcfArgs {
  std::string input, out_dir = ".";
  std::string date_col = "0", rate_col = "1";
  double alpha0 = 0.0, gamma = 0.0, power = 1.0;
  std::size_t max_lag = 100;
  bool absolute = false;
};

int run_acf(const AcfArgs& a, const Provenance& prov) {
  using namespace ratevol;
  auto series = load_series(a.input, a.date_col, a.rate_col, 0.0);
  auto x = normalized_increments(series, a.alpha0, 0.0, a.gamma);
  if (a.absolute)
    for (auto& v : x) v = std::pow(std::fabs(v), a.power);
  auto result = sample_acf(x, a.max_lag);
  std::ostringstream out;
  out << "lag,acf,band\n";
  for (std::size_t l = 0; l < result.acf.size(); ++l)
    out << (l + 1) << ',' << fmt_param(result.acf[l]) << ','
        << fmt_param(result.band_halfwidth) << '\n';
  out << prov.footer();
  atomic_write(a.out_dir + "/acf.csv", out.str());
  std::cout << "wrote " << a.out_dir << "/acf.csv\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interest-rate volatility models: multifractal MSM, GARCH "
               "benchmarks, cascades and scaling analysis"};
  app.require_subcommand(1);
  std::string config_path;
  app.set_config("--config", "", "key=value config file; flags override");
  // keep a copy of the path for provenance hashing
  app.get_config_ptr()->each([&](const std::string& v) { config_path = v; });

  PrepArgs prep;
  auto* cmd_prep = app.add_subcommand("prep", "level-volatility profile and "
                                              "shift estimation");
  cmd_prep->add_option("--input", prep.input, "rate CSV")->required();
  cmd_prep->add_option("--date-col", prep.date_col);
  cmd_prep->add_option("--rate-col", prep.rate_col);
  cmd_prep->add_option("--out", prep.out_dir);
  cmd_prep->add_option("--bins", prep.bins);
  cmd_prep->add_option("--min-occupancy", prep.min_occupancy);
  cmd_prep->add_option("--shift", prep.shift, "constant added to all rates");
  cmd_prep->add_flag("--fit-shift", prep.do_fit_shift,
                     "least-squares fit of sdv(r) = c r^gamma - b");

  FitArgs fit;
  auto* cmd_fit = app.add_subcommand("fit", "maximum-likelihood model fits");
  cmd_fit->add_option("--input", fit.input)->required();
  cmd_fit->add_option("--date-col", fit.date_col);
  cmd_fit->add_option("--rate-col", fit.rate_col);
  cmd_fit->add_option("--out", fit.out_dir);
  cmd_fit->add_option("--models", fit.models,
                      "any of: cev-normal cev-t msm garch egarch jump")
      ->required()
      ->delimiter(',');
  cmd_fit->add_option("--shift", fit.shift);
  cmd_fit->add_option("--K", fit.msm_k, "MSM volatility levels");
  cmd_fit->add_option("--starts", fit.starts);
  cmd_fit->add_option("--max-evals", fit.max_evals);
  cmd_fit->add_option("--seed", fit.seed)->required();
  cmd_fit->add_flag("--with-alpha1", fit.with_alpha1);
  cmd_fit->add_flag("--no-se", fit.no_se, "skip standard errors");

  CompareArgs cmp;
  auto* cmd_cmp = app.add_subcommand("compare", "BIC-difference tests against "
                                                "a reference model");
  cmd_cmp->add_option("--reference", cmp.reference,
                      "reference per-observation file")->required();
  cmd_cmp->add_option("--alt", cmp.alternatives,
                      "alternative per-observation files")->required();
  cmd_cmp->add_option("--out", cmp.out_dir);
  std::int64_t hac_lag_opt = -1;
  cmd_cmp->add_option("--hac-lag", hac_lag_opt,
                      "Newey-West lag (default: automatic)");

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand("simulate", "model simulation");
  cmd_sim->add_option("--kind", sim.kind, "msm garch egarch jump cev")
      ->required();
  cmd_sim->add_option("--out", sim.out_dir);
  cmd_sim->add_option("--n", sim.n);
  cmd_sim->add_option("--seed", sim.seed)->required();
  cmd_sim->add_option("--K", sim.msm_k);
  cmd_sim->add_option("--m0", sim.m0);
  cmd_sim->add_option("--b", sim.b);
  cmd_sim->add_option("--lambda-K", sim.lambda_k);
  cmd_sim->add_option("--sigma", sim.sigma);
  cmd_sim->add_option("--alpha0", sim.alpha0);
  cmd_sim->add_option("--gamma", sim.gamma);
  cmd_sim->add_option("--nu", sim.nu);
  cmd_sim->add_option("--a0", sim.a0);
  cmd_sim->add_option("--a1", sim.a1);
  cmd_sim->add_option("--a2", sim.a2);
  cmd_sim->add_option("--bg", sim.bg, "GARCH persistence b");
  cmd_sim->add_option("--c", sim.c);
  cmd_sim->add_option("--d", sim.d);
  cmd_sim->add_option("--tau", sim.tau);
  cmd_sim->add_option("--r0", sim.r0, "initial level");

  CascadeArgs cas;
  auto* cmd_cas = app.add_subcommand("cascade", "multifractal measures");
  cmd_cas->add_option("--kind", cas.kind, "dyadic badic poisson")->required();
  cmd_cas->add_option("--out", cas.out_dir);
  cmd_cas->add_option("--p", cas.p, "dyadic mass fraction");
  cmd_cas->add_option("--multiplier", cas.multiplier,
                      "binomial lognormal constant");
  cmd_cas->add_option("--m0", cas.m0);
  cmd_cas->add_option("--log-sd", cas.log_sd);
  cmd_cas->add_option("--b", cas.bb, "poisson frequency ratio");
  cmd_cas->add_option("--badic-b", cas.badic_b, "branching factor");
  cmd_cas->add_option("--l1", cas.l1, "poisson base rate");
  cmd_cas->add_option("--T", cas.T);
  cmd_cas->add_option("--depth", cas.depth);
  cmd_cas->add_option("--seed", cas.seed)->required();
  cmd_cas->add_flag("--strict", cas.strict,
                    "escalate convergence warnings to errors");
  double compose_sigma = 0.0;
  auto* compose_opt =
      cmd_cas->add_option("--compose", compose_sigma,
                          "also emit the time-changed Gaussian path with "
                          "this volatility");

  ScalingArgs sca;
  auto* cmd_sca = app.add_subcommand("scaling", "structure-function slopes");
  cmd_sca->add_option("--input", sca.input, "path CSV (rate column used)");
  cmd_sca->add_option("--date-col", sca.date_col);
  cmd_sca->add_option("--rate-col", sca.rate_col);
  cmd_sca->add_option("--construction", sca.construction,
                      "simulate instead of reading data (dyadic)");
  cmd_sca->add_option("--p", sca.p);
  cmd_sca->add_option("--sigma", sca.sigma);
  cmd_sca->add_option("--depth", sca.depth);
  cmd_sca->add_option("--realizations", sca.realizations);
  std::int64_t sca_seed = -1;
  cmd_sca->add_option("--seed", sca_seed);
  cmd_sca->add_option("--out", sca.out_dir);
  cmd_sca->add_option("--qs", sca.qs)->delimiter(',');
  cmd_sca->add_option("--min-lag", sca.min_lag);
  cmd_sca->add_option("--max-lag", sca.max_lag);

  AcfArgs acf;
  auto* cmd_acf = app.add_subcommand("acf", "autocorrelation of normalized "
                                            "increments");
  cmd_acf->add_option("--input", acf.input)->required();
  cmd_acf->add_option("--date-col", acf.date_col);
  cmd_acf->add_option("--rate-col", acf.rate_col);
  cmd_acf->add_option("--out", acf.out_dir);
  cmd_acf->add_option("--alpha0", acf.alpha0);
  cmd_acf->add_option("--gamma", acf.gamma);
  cmd_acf->add_option("--max-lag", acf.max_lag);
  cmd_acf->add_flag("--abs", acf.absolute, "use |x|^power");
  cmd_acf->add_option("--power", acf.power);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*cmd_prep) {
      auto prov = make_provenance(argc, argv, config_path, std::nullopt);
      return run_prep(prep, prov);
    }
    if (*cmd_fit) {
      auto prov = make_provenance(argc, argv, config_path, fit.seed);
      return run_fit(fit, prov);
    }
    if (*cmd_cmp) {
      if (hac_lag_opt >= 0)
        cmp.hac_lag = static_cast<std::size_t>(hac_lag_opt);
      auto prov = make_provenance(argc, argv, config_path, std::nullopt);
      return run_compare(cmp, prov);
    }
    if (*cmd_sim) {
      auto prov = make_provenance(argc, argv, config_path, sim.seed);
      return run_simulate(sim, prov);
    }
    if (*cmd_cas) {
      if (compose_opt->count() > 0) cas.compose_sigma = compose_sigma;
      auto prov = make_provenance(argc, argv, config_path, cas.seed);
      return run_cascade(cas, prov);
    }
    if (*cmd_sca) {
      if (!sca.construction.empty()) {
        if (sca_seed < 0)
          throw ConfigError("--seed is required with --construction");
        sca.seed = static_cast<std::uint64_t>(sca_seed);
      }
      auto prov = make_provenance(
          argc, argv, config_path,
          sca.construction.empty()
              ? std::optional<std::uint64_t>{}
              : std::optional<std::uint64_t>{sca.seed});
      return run_scaling(sca, prov);
    }
    if (*cmd_acf) {
      auto prov = make_provenance(argc, argv, config_path, std::nullopt);
      return run_acf(acf, prov);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitConfig;
}
