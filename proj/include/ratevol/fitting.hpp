#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ratevol {

// Objective convention throughout: a log-likelihood to be MAXIMIZED,
// evaluated on the natural (constrained) parameter scale.
using Objective = std::function<double(const std::vector<double>&)>;

// Per-parameter bijection between a constrained domain and the real line.
struct Transform {
  enum class Kind { Identity, LowerBounded, Interval };
  Kind kind = Kind::Identity;
  double lo = 0.0;
  double hi = 1.0;

  static Transform identity() { return {Kind::Identity, 0, 0}; }
  static Transform lower(double lo) { return {Kind::LowerBounded, lo, 0}; }
  static Transform interval(double lo, double hi) {
    return {Kind::Interval, lo, hi};
  }

  double to_natural(double u) const;
  double to_unconstrained(double x) const;
};

struct ParamTransform {
  std::vector<Transform> items;

  std::size_t dim() const { return items.size(); }
  std::vector<double> to_natural(const std::vector<double>& u) const;
  std::vector<double> to_unconstrained(const std::vector<double>& x) const;
};

struct NelderMeadOptions {
  double initial_step = 0.25;
  double f_tol = 1e-9;
  double x_tol = 1e-8;
  std::size_t max_evals = 20000;
  std::size_t restarts = 1;  // re-expand the simplex at the incumbent
};

struct NelderMeadResult {
  std::vector<double> x;
  double f;
  std::size_t evals = 0;
  bool converged = false;
};

// Minimizes f (note: MINIMIZES; maximize() negates internally).
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, const NelderMeadOptions& opts);

struct MaximizeOptions {
  std::size_t starts = 1;  // Latin-hypercube draws (besides warm starts)
  std::uint64_t seed = 1;
  // Natural-scale sampling ranges for the LHS starts, one per parameter.
  std::vector<std::pair<double, double>> start_ranges;
  std::vector<std::vector<double>> warm_starts;  // natural scale
  NelderMeadOptions nm;
};

struct FitReport {
  std::string model_id;
  std::vector<std::string> param_names;
  std::vector<double> estimates;       // natural scale
  std::vector<double> standard_errors;
  double log_likelihood = 0.0;
  double bic = 0.0;
  std::size_t n_addends = 0;
  std::size_t n_params = 0;
  std::size_t n_evals = 0;
  std::size_t n_starts = 0;
  bool converged = false;
  bool se_opg_fallback = false;
  std::vector<double> per_obs_log_density;
  std::map<std::string, std::string> notes;  // conventions used

  // Key-value text serialization (6 significant digits for numerics).
  std::string serialize() const;
};

FitReport maximize(const Objective& objective, const ParamTransform& transform,
                   const MaximizeOptions& opts);

// Observed-information standard errors via a central-difference Hessian of
// the log-likelihood on the natural scale. When the Hessian is not negative
// definite, falls back to the outer product of per-observation gradients if
// a per-observation evaluator is supplied (flag set in `opg_used`).
using PerObsObjective =
    std::function<std::vector<double>(const std::vector<double>&)>;
std::vector<double> standard_errors(const Objective& objective,
                                    const std::vector<double>& theta,
                                    const PerObsObjective& per_obs,
                                    bool* opg_used = nullptr);

double bic(double log_likelihood, std::size_t k, std::size_t n);

}  // namespace ratevol
