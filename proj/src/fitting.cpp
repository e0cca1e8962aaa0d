#include "ratevol/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ratevol/stats.hpp"

namespace ratevol {

double Transform::to_natural(double u) const {
  switch (kind) {
    case Kind::Identity:
      return u;
    case Kind::LowerBounded:
      return lo + std::exp(u);
    case Kind::Interval:
      return lo + (hi - lo) / (1.0 + std::exp(-u));
  }
  return u;
}

double Transform::to_unconstrained(double x) const {
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::LowerBounded:
      if (x <= lo) throw std::invalid_argument("value below lower bound");
      return std::log(x - lo);
    case Kind::Interval: {
      if (x <= lo || x >= hi)
        throw std::invalid_argument("value outside interval");
      const double p = (x - lo) / (hi - lo);
      return std::log(p / (1.0 - p));
    }
  }
  return x;
}

std::vector<double> ParamTransform::to_natural(
    const std::vector<double>& u) const {
  std::vector<double> x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = items[i].to_natural(u[i]);
  return x;
}

std::vector<double> ParamTransform::to_unconstrained(
    const std::vector<double>& x) const {
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    u[i] = items[i].to_unconstrained(x[i]);
  return u;
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  result.x = start;
  result.f = std::numeric_limits<double>::infinity();

  auto eval = [&](const std::vector<double>& x) {
    ++result.evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> simplex;
  std::vector<double> fv;

  auto init_simplex = [&](const std::vector<double>& x0, double step) {
    simplex.assign(1, x0);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = x0;
      v[i] += (v[i] != 0.0 ? step * std::abs(v[i]) : step);
      simplex.push_back(v);
    }
    fv.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);
  };

  for (std::size_t round = 0; round < opts.restarts; ++round) {
    init_simplex(result.x, opts.initial_step);
    while (result.evals < opts.max_evals) {
      // order
      std::vector<std::size_t> idx(n + 1);
      std::iota(idx.begin(), idx.end(), 0u);
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      {
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (auto i : idx) {
          s2.push_back(simplex[i]);
          f2.push_back(fv[i]);
        }
        simplex.swap(s2);
        fv.swap(f2);
      }
      // convergence
      double xspread = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double lo = simplex[0][i], hi = simplex[0][i];
        for (std::size_t j = 1; j <= n; ++j) {
          lo = std::min(lo, simplex[j][i]);
          hi = std::max(hi, simplex[j][i]);
        }
        xspread = std::max(xspread, hi - lo);
      }
      if (std::isfinite(fv[0]) && fv[n] - fv[0] < opts.f_tol &&
          xspread < opts.x_tol) {
        result.converged = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[j][i] / n;

      auto point = [&](double t) {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i)
          p[i] = centroid[i] + t * (simplex[n][i] - centroid[i]);
        return p;
      };

      auto xr = point(-1.0);
      const double fr = eval(xr);
      if (fr < fv[0]) {
        auto xe = point(-2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex[n] = xe;
          fv[n] = fe;
        } else {
          simplex[n] = xr;
          fv[n] = fr;
        }
      } else if (fr < fv[n - 1]) {
        simplex[n] = xr;
        fv[n] = fr;
      } else {
        const bool outside = fr < fv[n];
        auto xc = point(outside ? -0.5 : 0.5);
        const double fc = eval(xc);
        if (fc < std::min(fr, fv[n])) {
          simplex[n] = xc;
          fv[n] = fc;
        } else {
          // shrink toward best
          for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t i = 0; i < n; ++i)
              simplex[j][i] = simplex[0][i] + 0.5 * (simplex[j][i] - simplex[0][i]);
            fv[j] = eval(simplex[j]);
          }
        }
      }
    }
    if (fv[0] < result.f) {
      result.f = fv[0];
      result.x = simplex[0];
    }
  }
  return result;
}

FitReport maximize(const Objective& objective, const ParamTransform& transform,
                   const MaximizeOptions& opts) {
  const std::size_t dim = transform.dim();
  auto neg = [&](const std::vector<double>& u) {
    return -objective(transform.to_natural(u));
  };

  std::vector<std::vector<double>> starts;
  for (const auto& w : opts.warm_starts)
    starts.push_back(transform.to_unconstrained(w));

  if (opts.starts > 0) {
    if (opts.start_ranges.size() != dim)
      throw std::invalid_argument(
          "start_ranges must be provided for LHS starts");
    // Latin hypercube in the natural ranges.
    Rng rng(opts.seed);
    std::vector<std::vector<double>> grid(dim,
                                          std::vector<double>(opts.starts));
    for (std::size_t i = 0; i < dim; ++i) {
      const auto [lo, hi] = opts.start_ranges[i];
      for (std::size_t s = 0; s < opts.starts; ++s) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double frac = (s + u(rng)) / opts.starts;
        grid[i][s] = lo + frac * (hi - lo);
      }
      std::shuffle(grid[i].begin(), grid[i].end(), rng);
    }
    for (std::size_t s = 0; s < opts.starts; ++s) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) x[i] = grid[i][s];
      starts.push_back(transform.to_unconstrained(x));
    }
  }
  if (starts.empty()) throw std::invalid_argument("no start points");

  FitReport report;
  report.n_params = dim;
  report.n_starts = starts.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_u;
  bool any_finite = false;
  bool best_converged = false;
  for (const auto& s : starts) {
    NelderMeadResult r = nelder_mead(neg, s, opts.nm);
    report.n_evals += r.evals;
    if (std::isfinite(r.f)) {
      any_finite = true;
      if (r.f < best) {
        best = r.f;
        best_u = r.x;
        best_converged = r.converged;
      }
    }
  }
  if (!any_finite)
    throw std::runtime_error("all optimizer starts produced non-finite objective");

  report.estimates = transform.to_natural(best_u);
  report.log_likelihood = objective(report.estimates);
  report.converged = best_converged;
  return report;
}

namespace {

// Dense symmetric solve via Gauss-Jordan; returns false when singular.
bool invert(std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const double d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double m = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= m * a[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  a = inv;
  return true;
}

}  // namespace

std::vector<double> standard_errors(const Objective& objective,
                                    const std::vector<double>& theta,
                                    const PerObsObjective& per_obs,
                                    bool* opg_used) {
  const std::size_t n = theta.size();
  if (opg_used) *opg_used = false;
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i)
    h[i] = std::max(1e-5 * std::abs(theta[i]), 1e-6);

  auto at = [&](std::vector<double> x, std::size_t i, double di,
                std::size_t j, double dj) {
    x[i] += di;
    x[j] += dj;
    return objective(x);
  };

  const double f0 = objective(theta);
  std::vector<std::vector<double>> hess(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double fpp = at(theta, i, h[i], i, h[i]);
    const double fmm = at(theta, i, -h[i], i, -h[i]);
    hess[i][i] = (fpp - 2.0 * f0 + fmm) / (4.0 * h[i] * h[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double fa = at(theta, i, h[i], j, h[j]);
      const double fb = at(theta, i, h[i], j, -h[j]);
      const double fc = at(theta, i, -h[i], j, h[j]);
      const double fd = at(theta, i, -h[i], j, -h[j]);
      hess[i][j] = hess[j][i] = (fa - fb - fc + fd) / (4.0 * h[i] * h[j]);
    }
  }
  for (auto& row : hess)
    for (double v : row)
      if (!std::isfinite(v))
        throw std::runtime_error("non-finite Hessian entry");

  // negative Hessian = observed information
  auto info = hess;
  for (auto& row : info)
    for (auto& v : row) v = -v;
  auto inv = info;
  bool ok = invert(inv);
  if (ok) {
    for (std::size_t i = 0; i < n; ++i)
      if (inv[i][i] <= 0.0) ok = false;
  }
  if (ok) {
    std::vector<double> se(n);
    for (std::size_t i = 0; i < n; ++i) se[i] = std::sqrt(inv[i][i]);
    return se;
  }

  if (!per_obs)
    throw std::runtime_error(
        "observed information not positive definite and no per-observation "
        "evaluator for OPG fallback");
  if (opg_used) *opg_used = true;
  // OPG: G = sum_t g_t g_t', cov = G^{-1}
  const std::vector<double> base = per_obs(theta);
  const std::size_t m = base.size();
  std::vector<std::vector<double>> grads(m, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto tp = theta, tm = theta;
    tp[i] += h[i];
    tm[i] -= h[i];
    const auto lp = per_obs(tp);
    const auto lm = per_obs(tm);
    for (std::size_t t = 0; t < m; ++t)
      grads[t][i] = (lp[t] - lm[t]) / (2.0 * h[i]);
  }
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g[i][j] += grads[t][i] * grads[t][j];
  if (!invert(g)) throw std::runtime_error("OPG matrix singular");
  std::vector<double> se(n);
  for (std::size_t i = 0; i < n; ++i)
    se[i] = g[i][i] > 0.0 ? std::sqrt(g[i][i])
                          : std::numeric_limits<double>::quiet_NaN();
  return se;
}

double bic(double log_likelihood, std::size_t k, std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return (-2.0 * log_likelihood +
          static_cast<double>(k) * std::log(static_cast<double>(n))) /
         static_cast<double>(n);
}

namespace {

std::string fmt6(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string FitReport::serialize() const {
  std::ostringstream os;
  os << "model = " << model_id << "\n";
  for (std::size_t i = 0; i < param_names.size(); ++i) {
    os << param_names[i] << " = " << fmt6(estimates[i]);
    if (i < standard_errors.size())
      os << "  (se " << fmt6(standard_errors[i]) << ")";
    os << "\n";
  }
  os << "logL = " << fmt6(log_likelihood) << "\n";
  os << "BIC = " << fmt6(bic) << "\n";
  os << "n_addends = " << n_addends << "\n";
  os << "n_params = " << n_params << "\n";
  os << "n_evals = " << n_evals << "\n";
  os << "n_starts = " << n_starts << "\n";
  os << "converged = " << (converged ? "true" : "false") << "\n";
  os << "se_opg_fallback = " << (se_opg_fallback ? "true" : "false") << "\n";
  for (const auto& [key, value] : notes) os << "note." << key << " = " << value << "\n";
  return os.str();
}

}  // namespace ratevol
