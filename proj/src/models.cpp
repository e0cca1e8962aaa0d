#include "ratevol/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

double msm_level_loglik(const RateSeries& series, const MsmLevelParams& params,
                        std::vector<double>* per_obs) {
  InnerLogLik inner = [&](const std::vector<double>& x,
                          std::vector<double>* po) {
    return msm_log_likelihood(x, params.vol, po);
  };
  return level_log_likelihood(series, params.drift, params.gamma, inner,
                              per_obs);
}

namespace {

struct DataScale {
  double inc_mean;
  double inc_sd;
};

DataScale data_scale(const RateSeries& series) {
  const auto inc = increments(series);
  return {mean(inc.deltas), sample_sd(inc.deltas)};
}

// Shared report assembly: evaluate per-observation densities at the optimum,
// attach BIC and (optionally) standard errors.
void finalize_report(
    FitReport& report, const Objective& objective,
    const PerObsObjective& per_obs_fn, bool compute_se) {
  report.per_obs_log_density = per_obs_fn(report.estimates);
  report.n_addends = report.per_obs_log_density.size();
  report.bic = bic(report.log_likelihood, report.n_params, report.n_addends);
  if (compute_se) {
    bool opg = false;
    try {
      report.standard_errors =
          standard_errors(objective, report.estimates, per_obs_fn, &opg);
      report.se_opg_fallback = opg;
    } catch (const std::exception&) {
      report.standard_errors.assign(report.n_params,
                                    std::numeric_limits<double>::quiet_NaN());
    }
  }
}

FitReport run_fit(const std::string& model_id,
                  const std::vector<std::string>& names,
                  const Objective& objective, const PerObsObjective& per_obs,
                  const ParamTransform& transform,
                  std::vector<std::pair<double, double>> ranges,
                  const FitControl& control) {
  MaximizeOptions opts;
  opts.starts = control.starts;
  opts.seed = control.seed;
  opts.start_ranges = std::move(ranges);
  opts.warm_starts = control.warm_starts;
  opts.nm.max_evals = control.max_evals;
  opts.nm.restarts = 2;
  FitReport report = maximize(objective, transform, opts);
  report.model_id = model_id;
  report.param_names = names;
  finalize_report(report, objective, per_obs, control.compute_se);
  return report;
}

Objective safe(const Objective& f) {
  return [f](const std::vector<double>& th) {
    try {
      const double v = f(th);
      return std::isfinite(v) ? v
                              : -std::numeric_limits<double>::infinity();
    } catch (const std::exception&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
}

}  // namespace

FitReport fit_cev(const RateSeries& series, InnovationFamily family,
                  const FitControl& control) {
  const auto scale = data_scale(series);
  const bool t = family == InnovationFamily::StudentT;

  auto unpack = [&](const std::vector<double>& th) {
    CevParams p;
    std::size_t i = 0;
    p.drift.alpha0 = th[i++];
    if (control.with_alpha1) p.drift.alpha1 = th[i++];
    p.gamma = th[i++];
    p.sigma = th[i++];
    p.family = family;
    if (t) p.nu = th[i++];
    return p;
  };
  Objective obj = safe([&, unpack](const std::vector<double>& th) {
    return cev_log_likelihood(series, unpack(th));
  });
  PerObsObjective po = [&, unpack](const std::vector<double>& th) {
    std::vector<double> v;
    cev_log_likelihood(series, unpack(th), &v);
    return v;
  };

  std::vector<std::string> names{"alpha0"};
  ParamTransform tr{{Transform::identity()}};
  std::vector<std::pair<double, double>> ranges{
      {scale.inc_mean - scale.inc_sd, scale.inc_mean + scale.inc_sd}};
  if (control.with_alpha1) {
    names.push_back("alpha1");
    tr.items.push_back(Transform::identity());
    ranges.push_back({-0.01, 0.0});
  }
  names.insert(names.end(), {"gamma", "sigma"});
  tr.items.insert(tr.items.end(),
                  {Transform::lower(0.0), Transform::lower(0.0)});
  ranges.insert(ranges.end(),
                {{0.05, 1.9}, {1e-3 * scale.inc_sd, 5.0 * scale.inc_sd}});
  if (t) {
    names.push_back("nu");
    tr.items.push_back(Transform::lower(2.001));
    ranges.push_back({2.05, 20.0});
  }
  return run_fit(t ? "cev-t" : "cev-normal", names, obj, po, tr, ranges, control);
}

FitReport fit_msm(const RateSeries& series, std::size_t K,
                  const FitControl& control) {
  const auto scale = data_scale(series);

  auto unpack = [&](const std::vector<double>& th) {
    MsmLevelParams p;
    std::size_t i = 0;
    p.drift.alpha0 = th[i++];
    if (control.with_alpha1) p.drift.alpha1 = th[i++];
    p.gamma = th[i++];
    p.vol.K = K;
    p.vol.m0 = th[i++];
    p.vol.b = th[i++];
    p.vol.lambda_K = th[i++];
    p.vol.sigma = th[i++];
    return p;
  };
  Objective obj = safe([&, unpack](const std::vector<double>& th) {
    return msm_level_loglik(series, unpack(th));
  });
  PerObsObjective po = [&, unpack](const std::vector<double>& th) {
    std::vector<double> v;
    msm_level_loglik(series, unpack(th), &v);
    return v;
  };

  std::vector<std::string> names{"alpha0"};
  ParamTransform tr{{Transform::identity()}};
  std::vector<std::pair<double, double>> ranges{
      {scale.inc_mean - scale.inc_sd, scale.inc_mean + scale.inc_sd}};
  if (control.with_alpha1) {
    names.push_back("alpha1");
    tr.items.push_back(Transform::identity());
    ranges.push_back({-0.01, 0.0});
  }
  names.insert(names.end(), {"gamma", "m0", "b", "lambda_K", "sigma"});
  tr.items.insert(tr.items.end(),
                  {Transform::lower(0.0), Transform::interval(1.0, 2.0),
                   Transform::lower(1.0), Transform::interval(0.0, 1.0),
                   Transform::lower(0.0)});
  ranges.insert(ranges.end(), {{0.05, 1.9},
                               {1.2, 1.9},
                               {1.5, 25.0},
                               {0.05, 0.95},
                               {1e-3 * scale.inc_sd, 5.0 * scale.inc_sd}});
  return run_fit("msm" + std::to_string(K), names, obj, po, tr, ranges, control);
}

FitReport fit_garch(const RateSeries& series, const FitControl& control) {
  const auto scale = data_scale(series);
  auto unpack = [&](const std::vector<double>& th) {
    LevelGarchParams p;
    p.alpha0 = th[0];
    p.gamma = th[1];
    p.a0 = th[2];
    p.a1 = th[3];
    p.b = th[4];
    p.nu = th[5];
    return p;
  };
  Objective obj = safe([&, unpack](const std::vector<double>& th) {
    return level_garch_loglik(series, unpack(th));
  });
  PerObsObjective po = [&, unpack](const std::vector<double>& th) {
    std::vector<double> v;
    level_garch_loglik(series, unpack(th), &v);
    return v;
  };
  const double v = scale.inc_sd * scale.inc_sd;
  ParamTransform tr{{Transform::identity(), Transform::lower(0.0),
                     Transform::lower(0.0), Transform::lower(0.0),
                     Transform::lower(0.0), Transform::lower(2.001)}};
  std::vector<std::pair<double, double>> ranges{
      {scale.inc_mean - scale.inc_sd, scale.inc_mean + scale.inc_sd},
      {0.05, 1.5},
      {1e-3 * v, v},
      {0.02, 0.4},
      {0.4, 0.97},
      {2.5, 15.0}};
  return run_fit("garch", {"alpha0", "gamma", "a0", "a1", "b", "nu"}, obj, po,
                 tr, ranges, control);
}

FitReport fit_egarch(const RateSeries& series, const FitControl& control) {
  const auto scale = data_scale(series);
  auto unpack = [&](const std::vector<double>& th) {
    LevelEgarchParams p;
    p.alpha0 = th[0];
    p.gamma = th[1];
    p.a0 = th[2];
    p.a1 = th[3];
    p.a2 = th[4];
    p.b = th[5];
    p.nu = th[6];
    return p;
  };
  Objective obj = safe([&, unpack](const std::vector<double>& th) {
    return level_egarch_loglik(series, unpack(th));
  });
  PerObsObjective po = [&, unpack](const std::vector<double>& th) {
    std::vector<double> v;
    level_egarch_loglik(series, unpack(th), &v);
    return v;
  };
  ParamTransform tr{{Transform::identity(), Transform::lower(0.0),
                     Transform::identity(), Transform::identity(),
                     Transform::identity(), Transform::interval(-1.0, 1.0),
                     Transform::lower(2.001)}};
  std::vector<std::pair<double, double>> ranges{
      {scale.inc_mean - scale.inc_sd, scale.inc_mean + scale.inc_sd},
      {0.05, 1.5},
      {-1.0, 0.0},
      {-0.2, 0.2},
      {0.0, 0.5},
      {0.5, 0.995},
      {2.5, 15.0}};
  return run_fit("egarch", {"alpha0", "gamma", "a0", "a1", "a2", "b", "nu"},
                 obj, po, tr, ranges, control);
}

FitReport fit_jumpdiff(const RateSeries& series, const FitControl& control) {
  const auto scale = data_scale(series);
  auto unpack = [&](const std::vector<double>& th) {
    JumpDiffParams p;
    p.alpha0 = th[0];
    p.gamma = th[1];
    p.a0 = th[2];
    p.a1 = th[3];
    p.b = th[4];
    p.c = th[5];
    p.d = th[6];
    p.tau = th[7];
    return p;
  };
  Objective obj = safe([&, unpack](const std::vector<double>& th) {
    return jumpdiff_loglik(series, unpack(th));
  });
  PerObsObjective po = [&, unpack](const std::vector<double>& th) {
    std::vector<double> v;
    jumpdiff_loglik(series, unpack(th), &v);
    return v;
  };
  const double v = scale.inc_sd * scale.inc_sd;
  ParamTransform tr{{Transform::identity(), Transform::lower(0.0),
                     Transform::lower(0.0), Transform::lower(0.0),
                     Transform::lower(0.0), Transform::identity(),
                     Transform::identity(), Transform::lower(0.0)}};
  std::vector<std::pair<double, double>> ranges{
      {scale.inc_mean - scale.inc_sd, scale.inc_mean + scale.inc_sd},
      {0.05, 1.5},
      {1e-3 * v, v},
      {0.02, 0.4},
      {0.4, 0.97},
      {-5.0, -1.0},
      {-0.5, 0.5},
      {0.2 * scale.inc_sd, 5.0 * scale.inc_sd}};
  return run_fit("jumpdiff",
                 {"alpha0", "gamma", "a0", "a1", "b", "c", "d", "tau"}, obj,
                 po, tr, ranges, control);
}

namespace {

FitReport evaluate_common(const std::string& model_id,
                          std::vector<std::string> names,
                          std::vector<double> estimates, double logl,
                          std::vector<double> per_obs) {
  FitReport report;
  report.model_id = model_id;
  report.param_names = std::move(names);
  report.estimates = std::move(estimates);
  report.log_likelihood = logl;
  report.per_obs_log_density = std::move(per_obs);
  report.n_addends = report.per_obs_log_density.size();
  report.n_params = report.estimates.size();
  report.bic = bic(logl, report.n_params, report.n_addends);
  report.converged = true;
  return report;
}

}  // namespace

FitReport evaluate_msm(const RateSeries& series, const MsmLevelParams& params) {
  std::vector<double> po;
  const double ll = msm_level_loglik(series, params, &po);
  return evaluate_common(
      "msm" + std::to_string(params.vol.K),
      {"alpha0", "gamma", "m0", "b", "lambda_K", "sigma"},
      {params.drift.alpha0, params.gamma, params.vol.m0, params.vol.b,
       params.vol.lambda_K, params.vol.sigma},
      ll, std::move(po));
}

FitReport evaluate_cev(const RateSeries& series, const CevParams& params) {
  std::vector<double> po;
  const double ll = cev_log_likelihood(series, params, &po);
  const bool t = params.family == InnovationFamily::StudentT;
  std::vector<std::string> names{"alpha0", "gamma", "sigma"};
  std::vector<double> est{params.drift.alpha0, params.gamma, params.sigma};
  if (t) {
    names.push_back("nu");
    est.push_back(params.nu);
  }
  return evaluate_common(t ? "cev-t" : "cev-normal", std::move(names),
                         std::move(est), ll, std::move(po));
}

FitReport evaluate_garch(const RateSeries& series,
                         const LevelGarchParams& params) {
  std::vector<double> po;
  const double ll = level_garch_loglik(series, params, &po);
  return evaluate_common(
      "garch", {"alpha0", "gamma", "a0", "a1", "b", "nu"},
      {params.alpha0, params.gamma, params.a0, params.a1, params.b, params.nu},
      ll, std::move(po));
}

FitReport evaluate_egarch(const RateSeries& series,
                          const LevelEgarchParams& params) {
  std::vector<double> po;
  const double ll = level_egarch_loglik(series, params, &po);
  return evaluate_common("egarch",
                         {"alpha0", "gamma", "a0", "a1", "a2", "b", "nu"},
                         {params.alpha0, params.gamma, params.a0, params.a1,
                          params.a2, params.b, params.nu},
                         ll, std::move(po));
}

FitReport evaluate_jumpdiff(const RateSeries& series,
                            const JumpDiffParams& params) {
  std::vector<double> po;
  const double ll = jumpdiff_loglik(series, params, &po);
  return evaluate_common("jumpdiff",
                         {"alpha0", "gamma", "a0", "a1", "b", "c", "d", "tau"},
                         {params.alpha0, params.gamma, params.a0, params.a1,
                          params.b, params.c, params.d, params.tau},
                         ll, std::move(po));
}

}  // namespace ratevol
