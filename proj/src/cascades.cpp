#include "ratevol/cascades.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ratevol/msm.hpp"

namespace ratevol {

MultiplierSampler binomial_multiplier(double m0) {
  if (!(m0 > 0.0 && m0 < 2.0))
    throw std::invalid_argument("binomial multiplier needs m0 in (0, 2)");
  const double m1 = 2.0 - m0;
  MultiplierSampler s;
  s.declared_mean = 1.0;
  s.sample = [m0, m1](Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < 0.5 ? m0 : m1;
  };
  s.moment = [m0, m1](double q) {
    return 0.5 * (std::pow(m0, q) + std::pow(m1, q));
  };
  return s;
}

MultiplierSampler lognormal_multiplier(double target_mean, double s) {
  if (!(target_mean > 0.0))
    throw std::invalid_argument("target mean must be > 0");
  const double mu = std::log(target_mean) - 0.5 * s * s;
  MultiplierSampler out;
  out.declared_mean = target_mean;
  out.sample = [mu, s](Rng& rng) {
    std::normal_distribution<double> g(mu, s);
    return std::exp(g(rng));
  };
  out.moment = [mu, s](double q) {
    return std::exp(q * mu + 0.5 * q * q * s * s);
  };
  return out;
}

MultiplierSampler constant_multiplier(double value) {
  if (!(value > 0.0)) throw std::invalid_argument("multiplier must be > 0");
  MultiplierSampler out;
  out.declared_mean = value;
  out.sample = [value](Rng&) { return value; };
  out.moment = [value](double q) { return std::pow(value, q); };
  return out;
}

double MeasureRealization::total_mass() const {
  double s = 0.0;
  for (double m : masses) s += m;
  return s;
}

std::vector<double> MeasureRealization::cumulative() const {
  std::vector<double> theta(boundaries.size(), 0.0);
  for (std::size_t i = 0; i < masses.size(); ++i)
    theta[i + 1] = theta[i] + masses[i];
  return theta;
}

MeasureRealization dyadic_bernoulli(double p, std::size_t depth, double T,
                                    std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> masses{1.0};
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<double> next;
    next.reserve(masses.size() * 2);
    for (double m : masses) {
      if (u(rng) < 0.5) {
        next.push_back(m * p);
        next.push_back(m * (1.0 - p));
      } else {
        next.push_back(m * (1.0 - p));
        next.push_back(m * p);
      }
    }
    masses.swap(next);
  }
  MeasureRealization out;
  out.kind = "dyadic_bernoulli";
  out.depth = depth;
  out.T = T;
  out.masses = std::move(masses);
  const std::size_t n = out.masses.size();
  out.boundaries.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.boundaries[i] = T * static_cast<double>(i) / static_cast<double>(n);
  return out;
}

ScalingFunction dyadic_scaling(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
  ScalingFunction f;
  f.measure_T = [p](double q) {
    return std::log2(std::pow(p, q) + std::pow(1.0 - p, q));
  };
  f.zeta = [f](double q) { return 1.0 - f.measure_T(q / 2.0); };
  return f;
}

MeasureRealization badic_cascade(std::size_t b, const MultiplierSampler& M,
                                 std::size_t depth, double T,
                                 std::uint64_t seed) {
  if (b < 2) throw std::invalid_argument("b must be >= 2");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  Rng rng(seed);
  std::vector<double> masses{1.0};
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<double> next;
    next.reserve(masses.size() * b);
    for (double m : masses)
      for (std::size_t j = 0; j < b; ++j) next.push_back(m * M.sample(rng));
    masses.swap(next);
  }
  MeasureRealization out;
  out.kind = "badic_cascade";
  out.depth = depth;
  out.T = T;
  out.masses = std::move(masses);
  const std::size_t n = out.masses.size();
  out.boundaries.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.boundaries[i] = T * static_cast<double>(i) / static_cast<double>(n);
  return out;
}

ScalingFunction badic_scaling(std::size_t b, const MultiplierSampler& M) {
  const double logb = std::log(static_cast<double>(b));
  auto moment = M.moment;
  ScalingFunction f;
  f.measure_T = [moment, logb](double q) {
    return std::log(moment(q)) / logb;
  };
  f.zeta = [moment, logb](double q) {
    return -std::log(moment(q / 2.0)) / logb;
  };
  return f;
}

MeasureRealization poisson_multifractal(double b, double l1,
                                        const MultiplierSampler& M,
                                        std::size_t levels, double T,
                                        std::uint64_t seed) {
  if (!(b > 1.0)) throw std::invalid_argument("b must be > 1");
  if (!(l1 > 0.0)) throw std::invalid_argument("l1 must be > 0");
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  Rng rng(seed);

  struct Node {
    double a, b, w;  // interval and accumulated multiplier product
  };
  std::vector<Node> nodes{{0.0, T, 1.0}};
  for (std::size_t k = 1; k <= levels; ++k) {
    const double rate = std::pow(b, static_cast<double>(k) - 1.0) * l1;
    std::exponential_distribution<double> expo(rate);
    std::vector<Node> next;
    for (const Node& node : nodes) {
      double t = node.a;
      while (t < node.b) {
        const double cut = std::min(node.b, t + expo(rng));
        next.push_back({t, cut, node.w * M.sample(rng)});
        t = cut;
      }
    }
    nodes.swap(next);
  }

  MeasureRealization out;
  out.kind = "poisson_multifractal";
  out.depth = levels;
  out.T = T;
  out.boundaries.reserve(nodes.size() + 1);
  out.masses.reserve(nodes.size());
  out.boundaries.push_back(0.0);
  for (const Node& node : nodes) {
    out.boundaries.push_back(node.b);
    out.masses.push_back((node.b - node.a) / T * node.w);
  }
  return out;
}

ScalingFunction poisson_scaling(double b, const MultiplierSampler& M) {
  const double logb = std::log(b);
  auto moment = M.moment;
  ScalingFunction f;
  f.measure_T = [moment, logb](double q) {
    return 1.0 - q + std::log(moment(q)) / logb;
  };
  f.zeta = [f](double q) { return 1.0 - f.measure_T(q / 2.0); };
  return f;
}

MmarPath mmar_compose(const MeasureRealization& measure, double sigma,
                      std::uint64_t seed) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MmarPath path;
  path.times = measure.boundaries;
  path.values.resize(measure.boundaries.size(), 0.0);
  for (std::size_t i = 0; i < measure.masses.size(); ++i) {
    const double var = sigma * sigma * measure.T * measure.masses[i];
    path.values[i + 1] = path.values[i] + std::sqrt(std::max(var, 0.0)) * gauss(rng);
  }
  return path;
}

std::vector<double> discretize_to_msm(double b, double lambda_anchor,
                                      bool anchor_is_K, std::size_t K,
                                      const MultiplierSampler& M, double sigma,
                                      std::size_t n, std::uint64_t seed) {
  if (!(b > 1.0)) throw std::invalid_argument("b must be > 1");
  if (!(lambda_anchor > 0.0 && lambda_anchor < 1.0))
    throw std::invalid_argument("lambda must be in (0,1)");
  if (K < 1 || n < 1) throw std::invalid_argument("K and n must be >= 1");

  std::vector<double> lambdas(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double expo = anchor_is_K
                            ? std::pow(b, static_cast<double>(k) -
                                              static_cast<double>(K))
                            : std::pow(b, static_cast<double>(k) - 1.0);
    lambdas[k - 1] = 1.0 - std::pow(1.0 - lambda_anchor, expo);
  }

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // geometric(lambda) waiting time on {1, 2, ...}
  auto geometric = [&](double lambda) {
    const double u = unif(rng);
    return 1 + static_cast<std::size_t>(
                   std::floor(std::log1p(-u) / std::log1p(-lambda)));
  };

  std::vector<double> mult(K);
  std::vector<std::size_t> next_switch(K);
  for (std::size_t k = 0; k < K; ++k) {
    mult[k] = M.sample(rng);
    next_switch[k] = geometric(lambdas[k]);
  }

  std::vector<double> x;
  x.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0) {
      for (std::size_t k = 0; k < K; ++k) {
        if (next_switch[k] == 0) {
          mult[k] = M.sample(rng);
          next_switch[k] = geometric(lambdas[k]);
        }
      }
    }
    double g = 1.0;
    for (double m : mult) g *= m;
    x.push_back(sigma * std::sqrt(g) * gauss(rng));
    for (std::size_t k = 0; k < K; ++k) --next_switch[k];
  }
  return x;
}

}  // namespace ratevol
