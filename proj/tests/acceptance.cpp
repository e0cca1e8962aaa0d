// End-to-end acceptance checks. Each numbered check prints a single
// PASS/FAIL/SKIP line; the process exits nonzero when any check fails.
// The data-dependent check (9) needs the TBM3/NIBORM3 rate files; point
// RATEVOL_TBM3 / RATEVOL_NIBORM3 at them (or drop them under data/) to
// enable it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ratevol/cascades.hpp"
#include "ratevol/fitting.hpp"
#include "ratevol/garch.hpp"
#include "ratevol/jump.hpp"
#include "ratevol/level.hpp"
#include "ratevol/market_data.hpp"
#include "ratevol/models.hpp"
#include "ratevol/msm.hpp"
#include "ratevol/scaling.hpp"
#include "ratevol/stats.hpp"
#include "ratevol/vuong.hpp"

using namespace ratevol;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

void report_skip(int id, const std::string& detail) {
  std::printf("criterion %d: SKIP - %s\n", id, detail.c_str());
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// Synthetic calendar: one row per day-slot, strictly increasing.
Date synthetic_date(std::size_t i) {
  return Date{1900 + int(i) / 372, (int(i) / 31) % 12 + 1, int(i) % 31 + 1};
}

RateSeries series_from_values(std::vector<double> values) {
  RateSeries s;
  s.values = std::move(values);
  for (std::size_t i = 0; i < s.values.size(); ++i)
    s.dates.push_back(synthetic_date(i));
  return s;
}

// ---------------------------------------------------------------- check 1
// The O(T K 2^K) filter against brute-force summation over all latent
// state paths. The chain starts from the uniform (stationary) law and
// transitions before every observation, so the enumeration weights the
// first state uniformly.
double enumerated_loglik(const std::vector<double>& x,
                         const MsmVolParams& params) {
  const auto space = build_state_space(params);
  const std::size_t S = space.dim();
  const std::size_t T = x.size();
  const double sigma2 = params.sigma * params.sigma;

  // per-level transition factor between consecutive states
  auto trans = [&](std::size_t from, std::size_t to) {
    double p = 1.0;
    for (std::size_t k = 0; k < params.K; ++k) {
      const double lam = space.lambdas[k];
      const bool same = ((from >> k) & 1u) == ((to >> k) & 1u);
      p *= same ? 1.0 - lam / 2.0 : lam / 2.0;
    }
    return p;
  };

  double total = 0.0;
  std::vector<std::size_t> path(T, 0);
  for (;;) {
    double w = 1.0 / double(S);
    for (std::size_t t = 0; t < T; ++t) {
      if (t > 0) w *= trans(path[t - 1], path[t]);
      w *= normal_pdf(x[t], sigma2 * space.g[path[t]]);
    }
    total += w;
    // odometer over the S^T paths
    std::size_t t = 0;
    while (t < T && ++path[t] == S) path[t++] = 0;
    if (t == T) break;
  }
  return std::log(total);
}

void check_1_filter_oracle() {
  const auto t0 = Clock::now();
  Rng rng(20240401);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t K = 1; K <= 3; ++K) {
    for (std::size_t T = 3; T <= 5; ++T) {
      for (int draw = 0; draw < 20; ++draw) {
        MsmVolParams p;
        p.K = K;
        p.m0 = 1.05 + 0.9 * u01(rng);
        p.b = 1.1 + 5.0 * u01(rng);
        p.lambda_K = 0.05 + 0.9 * u01(rng);
        p.sigma = 0.5 + 1.5 * u01(rng);
        std::vector<double> x(T);
        for (auto& v : x) v = p.sigma * gauss(rng);
        const double ll_filter = msm_log_likelihood(x, p);
        const double ll_enum = enumerated_loglik(x, p);
        const double rel =
            std::fabs(ll_filter - ll_enum) / std::max(1.0, std::fabs(ll_enum));
        worst = std::max(worst, rel);
      }
    }
  }
  const double secs = seconds_since(t0);
  report(1, worst <= 1e-10 && secs < 10.0,
         fmt("filter equals path enumeration, K<=3, T<=5 "
             "(max rel err %.2e, %.2f s)",
             worst, secs));
}

// ---------------------------------------------------------------- check 2
void check_2_kronecker_transition() {
  Rng rng(20240402);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t K = 1; K <= 6; ++K) {
    const std::size_t S = std::size_t(1) << K;
    for (int ladder = 0; ladder < 10; ++ladder) {
      MsmVolParams p;
      p.K = K;
      p.m0 = 1.05 + 0.9 * u01(rng);
      p.b = 1.1 + 5.0 * u01(rng);
      p.lambda_K = 0.05 + 0.9 * u01(rng);
      const auto space = build_state_space(p);

      // dense transition matrix, built element-wise from the level bits
      std::vector<double> A(S * S);
      for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < S; ++j) {
          double v = 1.0;
          for (std::size_t k = 0; k < K; ++k) {
            const double lam = space.lambdas[k];
            const bool same = ((i >> k) & 1u) == ((j >> k) & 1u);
            v *= same ? 1.0 - lam / 2.0 : lam / 2.0;
          }
          A[i * S + j] = v;
        }

      for (int vec = 0; vec < 10; ++vec) {
        FilterState state;
        state.p.resize(S);
        double sum = 0.0;
        for (auto& v : state.p) sum += (v = u01(rng) + 1e-12);
        for (auto& v : state.p) v /= sum;

        std::vector<double> dense(S, 0.0);
        for (std::size_t i = 0; i < S; ++i)
          for (std::size_t j = 0; j < S; ++j)
            dense[j] += state.p[i] * A[i * S + j];

        const auto fast = transition_apply(state, space);
        for (std::size_t j = 0; j < S; ++j)
          worst = std::max(worst, std::fabs(fast[j] - dense[j]));
      }
    }
  }
  report(2, worst <= 1e-13,
         fmt("factorized transition equals dense product, K<=6 "
             "(max abs err %.2e)",
             worst));
}

// ---------------------------------------------------------------- check 3
void check_3_bic_convention() {
  const double b1 = bic(22955.80, 6, 14171);
  const double b2 = bic(8804.44, 6, 6230);
  const bool ok = b1 >= -3.2363 && b1 <= -3.2353 && b2 >= -2.8186 &&
                  b2 <= -2.8176;
  report(3, ok,
         fmt("per-observation BIC convention (%.4f, %.4f)", b1, b2));
}

// ---------------------------------------------------------------- check 4
void check_4_reductions() {
  // synthetic positive level series, 500 increments
  Rng rng(20240404);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> r{5.0};
  for (int t = 0; t < 500; ++t)
    r.push_back(r.back() * std::exp(0.02 * gauss(rng)));
  const auto series = series_from_values(r);

  const double alpha0 = 0.0003, gamma = 0.4, sigma = 0.05, nu = 6.0;
  const double var = sigma * sigma;

  CevParams cev_t;
  cev_t.drift.alpha0 = alpha0;
  cev_t.gamma = gamma;
  cev_t.sigma = sigma;
  cev_t.family = InnovationFamily::StudentT;
  cev_t.nu = nu;
  CevParams cev_n = cev_t;
  cev_n.family = InnovationFamily::Normal;

  double worst = 0.0;

  {  // GARCH with a1 = b = 0 collapses to constant variance a0
    LevelGarchParams g;
    g.alpha0 = alpha0;
    g.gamma = gamma;
    g.a0 = var;
    g.a1 = 0.0;
    g.b = 0.0;
    g.nu = nu;
    const double lg =
        level_garch_loglik(series, g, nullptr, GarchInit::Unconditional);
    worst = std::max(worst, std::fabs(lg - cev_log_likelihood(series, cev_t)));
  }
  {  // EGARCH with a1 = a2 = b = 0 collapses to log h = a0
    LevelEgarchParams e;
    e.alpha0 = alpha0;
    e.gamma = gamma;
    e.a0 = std::log(var);
    e.a1 = e.a2 = e.b = 0.0;
    e.nu = nu;
    const double le =
        level_egarch_loglik(series, e, nullptr, GarchInit::Unconditional);
    worst = std::max(worst, std::fabs(le - cev_log_likelihood(series, cev_t)));
  }
  {  // jump mixture with the jump channel switched off (c -> -inf)
    JumpDiffParams j;
    j.alpha0 = alpha0;
    j.gamma = gamma;
    j.a0 = var;
    j.a1 = 0.0;
    j.b = 0.0;
    j.c = -400.0;
    j.d = 0.0;
    j.tau = 0.05;
    const double lj =
        jumpdiff_loglik(series, j, nullptr, GarchInit::Unconditional);
    // jump addends start one observation later; drop the first CEV addend
    std::vector<double> po;
    cev_log_likelihood(series, cev_n, &po);
    double tail = 0.0;
    for (std::size_t i = 1; i < po.size(); ++i) tail += po[i];
    worst = std::max(worst, std::fabs(lj - tail));
  }
  {  // MSM with a degenerate multiplier is iid Gaussian
    MsmLevelParams m;
    m.drift.alpha0 = alpha0;
    m.gamma = gamma;
    m.vol = MsmVolParams{5, 1.0 + 1e-6, 3.0, 0.5, sigma};
    const double lm = msm_level_loglik(series, m);
    worst = std::max(worst, std::fabs(lm - cev_log_likelihood(series, cev_n)));
  }

  report(4, worst <= 1e-8,
         fmt("GARCH/EGARCH/jump/MSM reductions to CEV (max abs gap %.2e)",
             worst));
}

// ---------------------------------------------------------------- check 5
void check_5_parameter_recovery() {
  const auto t0 = Clock::now();
  const MsmVolParams truth_vol{5, 1.6, 4.0, 0.6, 0.07};
  const double truth_gamma = 0.2, truth_alpha0 = 0.02;
  // scored parameters: gamma, m0, b, lambda_K, sigma (indices 1..5)
  const double truth[5] = {truth_gamma, truth_vol.m0, truth_vol.b,
                           truth_vol.lambda_K, truth_vol.sigma};
  const int reps = 50;
  int within = 0, total = 0;
  for (int rep = 0; rep < reps; ++rep) {
    auto sim = msm_simulate(truth_vol, 10000, 1000 + rep);
    std::vector<double> r{50.0};
    for (double xi : sim.x)
      r.push_back(r.back() + truth_alpha0 + std::pow(r.back(), truth_gamma) * xi);
    const auto series = series_from_values(std::move(r));

    FitControl c;
    c.starts = 0;
    c.seed = 40 + std::uint64_t(rep);
    c.max_evals = 3000;
    c.warm_starts = {{0.02, 0.25, 1.5, 3.0, 0.5, 0.08},
                     {0.02, 0.15, 1.7, 5.0, 0.7, 0.06}};
    const auto fit = fit_msm(series, 5, c);
    for (int j = 1; j <= 5; ++j) {
      const double se = fit.standard_errors[std::size_t(j)];
      const bool ok = std::isfinite(se) && se > 0.0 &&
                      std::fabs(fit.estimates[std::size_t(j)] -
                                truth[j - 1]) <= 3.0 * se;
      within += ok;
      ++total;
    }
  }
  const double secs = seconds_since(t0);
  const double frac = double(within) / double(total);
  report(5, frac >= 0.90 && secs < 1800.0,
         fmt("parameter recovery on 50 fits: %d/%d pairs within 3 SE "
             "(%.1f%%, %.0f s)",
             within, total, 100.0 * frac, secs));
}

// ---------------------------------------------------------------- check 6
void check_6_scaling_oracle() {
  const double p = 0.3;
  const auto analytic = dyadic_scaling(p);
  const std::vector<double> qs{1.0, 2.0, 3.0};
  const std::vector<std::size_t> lags{1, 2, 3, 4, 5, 6, 8, 10};
  const int reps = 50;
  std::vector<std::vector<double>> pooled(qs.size(),
                                          std::vector<double>(lags.size(), 0.0));
  for (int rep = 0; rep < reps; ++rep) {
    const auto m = dyadic_bernoulli(p, 14, 1.0, 26000 + std::uint64_t(rep));
    const auto path = mmar_compose(m, 1.0, 27000 + std::uint64_t(rep));
    const auto t = structure_functions(path.values, lags, qs);
    for (std::size_t iq = 0; iq < qs.size(); ++iq)
      for (std::size_t il = 0; il < lags.size(); ++il)
        pooled[iq][il] += t.s[iq][il] / reps;
  }
  StructureFunctionTable table;
  table.lags = lags;
  table.qs = qs;
  table.s = pooled;
  const auto zetas = zeta_fit(table, 1, 10);
  double worst = 0.0;
  for (const auto& z : zetas)
    worst = std::max(worst, std::fabs(z.zeta - analytic.zeta(z.q)));
  report(6, worst <= 0.05,
         fmt("composed-cascade zeta(q) vs analytic, q in {1,2,3} "
             "(max gap %.4f)",
             worst));
}

// ---------------------------------------------------------------- check 7
void check_7_cascade_msm_equivalence() {
  // fast-mixing configuration: the two-sample KS p-value assumes
  // independent draws, so slow regime switching would make it
  // anti-conservative on both samples
  const MsmVolParams p{4, 1.5, 1.5, 0.98, 0.05};
  const auto M = binomial_multiplier(p.m0);
  const std::size_t n = 50000;
  int not_rejected = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto sim = msm_simulate(p, n, 50000 + 2 * std::uint64_t(rep));
    const auto disc = discretize_to_msm(p.b, p.lambda_K, true, p.K, M, p.sigma,
                                        n, 50001 + 2 * std::uint64_t(rep));
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::fabs(sim.x[i]);
      b[i] = std::fabs(disc[i]);
    }
    if (ks_two_sample(std::move(a), std::move(b)).p_value > 0.01)
      ++not_rejected;
  }
  report(7, not_rejected >= 95,
         fmt("cascade discretization vs direct simulation: KS not rejected "
             "in %d/100 replicates",
             not_rejected));
}

// ---------------------------------------------------------------- check 8
void check_8_vuong_calibration() {
  Rng rng(20240408);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // null: data iid N(0,1), both candidate densities equally wrong
  const std::size_t m = 500;
  int rej_plain = 0, rej_hac = 0;
  const int reps = 1000;
  for (int rep = 0; rep < reps; ++rep) {
    ModelLogDensities ref, alt;
    ref.n_params = alt.n_params = 1;
    ref.log_density.resize(m);
    alt.log_density.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double z = gauss(rng);
      ref.log_density[i] = normal_log_pdf(z - 0.1, 1.0);
      alt.log_density[i] = normal_log_pdf(z + 0.1, 1.0);
    }
    const auto v = vuong(ref, alt);
    const auto h = vuong_hac(ref, alt);
    if (v.p_value < 0.025 || v.p_value > 0.975) ++rej_plain;
    if (h.p_value < 0.025 || h.p_value > 0.975) ++rej_hac;
  }
  const double rate_plain = double(rej_plain) / reps;
  const double rate_hac = double(rej_hac) / reps;

  // AR(1) addend differences: the HAC statistic should shrink by about
  // sqrt((1 - rho) / (1 + rho))
  const double rho = 0.5;
  const double target = std::sqrt((1.0 - rho) / (1.0 + rho));
  const std::size_t m2 = 2000;
  double ratio_sum = 0.0;
  const int reps2 = 100;
  for (int rep = 0; rep < reps2; ++rep) {
    ModelLogDensities ref, alt;
    ref.n_params = alt.n_params = 1;
    ref.log_density.resize(m2, 0.0);
    alt.log_density.resize(m2, 0.0);
    double d = 0.0;
    for (std::size_t i = 0; i < m2; ++i) {
      d = rho * d + gauss(rng);
      ref.log_density[i] = d;
    }
    const auto v = vuong(ref, alt);
    const auto h = vuong_hac(ref, alt);
    ratio_sum += h.statistic / v.statistic;  // shared numerator
  }
  const double ratio = ratio_sum / reps2;

  const bool ok = rate_plain >= 0.03 && rate_plain <= 0.07 &&
                  rate_hac >= 0.03 && rate_hac <= 0.07 &&
                  ratio >= 0.75 * target && ratio <= 1.25 * target;
  report(8, ok,
         fmt("null rejection rates plain %.1f%% / HAC %.1f%%, AR(1) shrink "
             "%.3f vs %.3f",
             100.0 * rate_plain, 100.0 * rate_hac, ratio, target));
}

// ---------------------------------------------------------------- check 9
struct TableCheck {
  std::string label;
  double printed;
  double computed;
};

std::optional<RateSeries> try_load(const char* env, const char* fallback,
                                   double default_shift,
                                   const char* shift_env) {
  std::string path;
  if (const char* p = std::getenv(env)) path = p;
  else if (std::filesystem::exists(fallback)) path = fallback;
  if (path.empty()) return std::nullopt;
  auto series = load_csv(path).series;
  double shift = default_shift;
  if (const char* s = std::getenv(shift_env)) shift = std::atof(s);
  if (shift != 0.0) series = apply_shift(series, shift);
  return series;
}

void check_9_data_reproduction() {
  // the published estimates shift the T-bill series by +0.03 to clear the
  // zero-rate episodes; override via RATEVOL_TBM3_SHIFT if undesired
  const auto tbm3 =
      try_load("RATEVOL_TBM3", "data/TBM3.csv", 0.03, "RATEVOL_TBM3_SHIFT");
  const auto nibor = try_load("RATEVOL_NIBORM3", "data/NIBORM3.csv", 0.0,
                              "RATEVOL_NIBORM3_SHIFT");
  if (!tbm3 && !nibor) {
    report_skip(9,
                "reference rate files not supplied "
                "(set RATEVOL_TBM3 / RATEVOL_NIBORM3)");
    return;
  }

  std::vector<TableCheck> checks;
  auto cev = [](double a0, double g, double s,
                std::optional<double> nu = std::nullopt) {
    CevParams p;
    p.drift.alpha0 = a0;
    p.gamma = g;
    p.sigma = s;
    if (nu) {
      p.family = InnovationFamily::StudentT;
      p.nu = *nu;
    }
    return p;
  };
  auto msm9 = [](double a0, double g, double m0, double b, double lk,
                 double s) {
    MsmLevelParams p;
    p.drift.alpha0 = a0;
    p.gamma = g;
    p.vol = MsmVolParams{9, m0, b, lk, s};
    return p;
  };

  FitReport msm_tb, garch_tb, egarch_tb, jump_tb;
  if (tbm3) {
    checks.push_back({"TBM3 cev-normal",
                      15707.94,
                      evaluate_cev(*tbm3, cev(0.0009709, 0.3755, 0.04788))
                          .log_likelihood});
    checks.push_back(
        {"TBM3 cev-t", 20688.54,
         evaluate_cev(*tbm3, cev(-0.0002434, 0.5377, 0.2186, 2.01))
             .log_likelihood});
    msm_tb = evaluate_msm(
        *tbm3, msm9(0.0693e-3, 0.1984, 1.462, 3.864, 0.931, 0.06029));
    checks.push_back({"TBM3 msm9", 22955.80, msm_tb.log_likelihood});
    LevelGarchParams g{0.0904e-3, 0.1699, 0.7092e-5, 0.1301, 0.8915, 3.7995};
    garch_tb = evaluate_garch(*tbm3, g);
    checks.push_back({"TBM3 garch", 22873.03, garch_tb.log_likelihood});
    LevelEgarchParams e{0.1039e-3, 0.3441, -0.2360, -0.03127,
                        0.2322,    0.9888, 3.866};
    egarch_tb = evaluate_egarch(*tbm3, e);
    checks.push_back({"TBM3 egarch", 22936.53, egarch_tb.log_likelihood});
    JumpDiffParams j{0.464e-3, 0.1670, 5.131e-6, 0.0931,
                     0.8773,   -3.751, 0.2761,   0.08622};
    jump_tb = evaluate_jumpdiff(*tbm3, j);
    checks.push_back({"TBM3 jump", 22597.89, jump_tb.log_likelihood});
  }
  if (nibor) {
    checks.push_back({"NIBORM3 cev-normal",
                      4771.78,
                      evaluate_cev(*nibor, cev(0.0002863, 1.61, 0.006298))
                          .log_likelihood});
    checks.push_back({"NIBORM3 cev-t",
                      8041.42,
                      evaluate_cev(*nibor, cev(0.0002419, 0.988, 0.0921, 2.01))
                          .log_likelihood});
    checks.push_back(
        {"NIBORM3 msm9", 8804.44,
         evaluate_msm(*nibor, msm9(0.998e-3, 1.882, 1.464, 2.964, 0.949,
                                   0.003706))
             .log_likelihood});
    LevelGarchParams g{0.9104e-3, 0.9717, 0.4889e-5, 0.20993, 0.80838, 3.3305};
    checks.push_back(
        {"NIBORM3 garch", 8783.27, evaluate_garch(*nibor, g).log_likelihood});
    LevelEgarchParams e{1.120e-3, 0.9101, -0.4024, 0.02930,
                        0.2664,   0.9741, 3.358};
    checks.push_back({"NIBORM3 egarch", 8828.90,
                      evaluate_egarch(*nibor, e).log_likelihood});
    JumpDiffParams j{1.085e-3, 1.872,  0.0436e-6, 0.1291,
                     0.8301,   -1.883, -0.2119,   0.01127};
    checks.push_back({"NIBORM3 jump", 8579.61,
                      evaluate_jumpdiff(*nibor, j).log_likelihood});
  }

  bool ok = true;
  std::string detail;
  for (const auto& c : checks) {
    const double rel = std::fabs(c.computed - c.printed) / std::fabs(c.printed);
    if (rel > 0.001) {
      ok = false;
      detail += fmt(" [%s: %.2f vs %.2f]", c.label.c_str(), c.computed,
                    c.printed);
    }
  }

  // model-selection sign pattern on the T-bill data
  if (tbm3) {
    auto densities = [](const FitReport& r) {
      return ModelLogDensities{r.per_obs_log_density, r.n_params};
    };
    const auto ref = densities(msm_tb);
    const auto vg = vuong_hac(ref, densities(garch_tb));
    const auto ve = vuong_hac(ref, densities(egarch_tb));
    const auto vj = vuong_hac(ref, densities(jump_tb));
    const bool pattern = vg.p_value < 0.001 && vj.p_value < 0.001 &&
                         ve.p_value > 0.05;
    if (!pattern) {
      ok = false;
      detail += fmt(" [tournament p: garch %.4f egarch %.4f jump %.4f]",
                    vg.p_value, ve.p_value, vj.p_value);
    }
  }

  report(9, ok,
         fmt("published-table reproduction on %zu rows%s%s", checks.size(),
             tbm3 && nibor ? "" : " (one dataset only)", detail.c_str()));
}

// --------------------------------------------------------------- check 10
void check_10_performance() {
  const MsmVolParams p{9, 1.462, 3.864, 0.931, 0.06029};
  const auto sim = msm_simulate(p, 14171, 20241010);
  volatile double sink = 0.0;
  const auto t0 = Clock::now();
  sink = msm_log_likelihood(sim.x, p);
  const double secs = seconds_since(t0);
  (void)sink;
  report(10, secs < 1.0,
         fmt("one K=9 likelihood on 14171 observations in %.0f ms",
             1000.0 * secs));
}

}  // namespace

int main() {
  check_1_filter_oracle();
  check_2_kronecker_transition();
  check_3_bic_convention();
  check_4_reductions();
  check_5_parameter_recovery();
  check_6_scaling_oracle();
  check_7_cascade_msm_equivalence();
  check_8_vuong_calibration();
  check_9_data_reproduction();
  check_10_performance();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed or skipped\n");
  return 0;
}
