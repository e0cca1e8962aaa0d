#pragma once

#include <cstdint>
#include <string>

#include "ratevol/fitting.hpp"
#include "ratevol/garch.hpp"
#include "ratevol/jump.hpp"
#include "ratevol/level.hpp"
#include "ratevol/market_data.hpp"
#include "ratevol/msm.hpp"

namespace ratevol {

// Level-MSM: drift + CEV scaling around the binomial MSM innovation process.
struct MsmLevelParams {
  DriftSpec drift;
  double gamma = 0.0;
  MsmVolParams vol;
};

double msm_level_loglik(const RateSeries& series, const MsmLevelParams& params,
                        std::vector<double>* per_obs = nullptr);

struct FitControl {
  std::size_t starts = 4;
  std::uint64_t seed = 1;
  std::size_t max_evals = 20000;
  bool with_alpha1 = false;  // linear mean-reversion term in the drift
  bool compute_se = true;
  // Extra natural-scale start points (same layout as the fitted vector).
  std::vector<std::vector<double>> warm_starts;
};

// ML drivers. Each returns a FitReport with estimates, standard errors,
// log L, per-observation BIC and the per-observation log-density vector.
FitReport fit_cev(const RateSeries& series, InnovationFamily family,
                  const FitControl& control);
FitReport fit_msm(const RateSeries& series, std::size_t K,
                  const FitControl& control);
FitReport fit_garch(const RateSeries& series, const FitControl& control);
FitReport fit_egarch(const RateSeries& series, const FitControl& control);
FitReport fit_jumpdiff(const RateSeries& series, const FitControl& control);

// Likelihood evaluation at fixed parameters (no optimization), with the
// same report plumbing; used for reproducing printed parameter tables.
FitReport evaluate_msm(const RateSeries& series, const MsmLevelParams& params);
FitReport evaluate_cev(const RateSeries& series, const CevParams& params);
FitReport evaluate_garch(const RateSeries& series,
                         const LevelGarchParams& params);
FitReport evaluate_egarch(const RateSeries& series,
                          const LevelEgarchParams& params);
FitReport evaluate_jumpdiff(const RateSeries& series,
                            const JumpDiffParams& params);

}  // namespace ratevol
