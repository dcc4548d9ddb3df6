// Copyright 2026 The fracpoisson Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fracpoisson/harness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include "fracpoisson/detail/parallel.hpp"
#include "fracpoisson/detail/talbot.hpp"
#include "fracpoisson/errors.hpp"
#include "fracpoisson/fracderiv.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/stats.hpp"
#include "fracpoisson/ztrans.hpp"

namespace fracpoisson::harness {
namespace {

constexpr std::size_t kSamples = 100'000;

const std::vector<double> kShape = {0.3, 0.5, 0.7, 1.0};
const std::vector<double> kTempering = {0.0, 0.5, 2.0};
const std::vector<double> kRates = {0.5, 1.0, 2.0};
const std::vector<double> kTimes = {0.5, 1.0, 2.0};
const std::vector<double> kMemory = {0.15, 0.25, 0.5};
const std::vector<double> kGegenbauerU = {-0.5, 0.0, 0.5, 1.0};

// Everything a check needs besides its own definition.
struct Context {
  const HarnessConfig& config;
  std::uint64_t seed;
  std::uint64_t stream;

  RngSpec rng(std::uint64_t offset = 0) const { return RngSpec{seed, stream + offset}; }
};

// Accumulates the worst deviation and where it occurred.
class Worst {
 public:
  void see(double value, const std::string& where) {
    if (std::isnan(value) || value > value_) {
      if (std::isnan(value_)) return;
      value_ = value;
      where_ = where;
    }
  }
  double value() const { return value_; }
  std::string describe() const { return where_.empty() ? "" : "worst at " + where_; }

 private:
  double value_ = 0.0;
  std::string where_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CheckReport make(double metric, double threshold, std::string details,
                 Comparison comparison = Comparison::at_most) {
  CheckReport r;
  r.metric = metric;
  r.threshold = threshold;
  r.comparison = comparison;
  r.details = std::move(details);
  return r;
}

CheckReport stochastic(CheckReport r, const RngSpec& rng) {
  r.seed = rng;
  return r;
}

double max_abs_diff(const PmfTable& a, const PmfTable& b, int k_max) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.columns.size(); ++i) {
    for (int k = 0; k <= k_max; ++k) {
      worst = std::max(worst, std::abs(a.value(k, i) - b.value(k, i)));
    }
  }
  return worst;
}

std::vector<double> truncated(const std::vector<double>& p, int k_max) {
  return std::vector<double>(p.begin(), p.begin() + std::min<std::size_t>(p.size(), k_max + 1));
}

double z_score(double estimate, double se, double target) {
  return std::abs(estimate - target) / se;
}

// ---------------------------------------------------------------- reductions

constexpr int kReductionK = 15;

CheckReport reduce(const std::function<void(Worst&)>& body) {
  Worst worst;
  body(worst);
  return make(worst.value(), 1e-10, "max |difference| over k <= 15; " + worst.describe());
}

std::string pstr(const ProcessParams& p) {
  return "lambda=" + fmt(p.lambda) + " alpha=" + fmt(p.alpha) + " beta=" + fmt(p.beta) +
         " mu=" + fmt(p.mu) + " nu=" + fmt(p.nu);
}

std::string gstr(const GegenbauerParams& g) {
  return "lambda=" + fmt(g.lambda) + " d=" + fmt(g.d) + " u=" + fmt(g.u) + " beta=" + fmt(g.beta);
}

CheckReport reduction_pair(Family lhs, Family rhs, const std::vector<ProcessParams>& grid,
                           const Context& ctx) {
  return reduce([&](Worst& worst) {
    for (const auto& p : grid) {
      const auto a = pmf_table(lhs, p, kReductionK, kTimes, ctx.config.series);
      const auto b = pmf_table(rhs, p, kReductionK, kTimes, ctx.config.series);
      worst.see(max_abs_diff(a, b, kReductionK), pstr(p));
    }
  });
}

std::vector<ProcessParams> process_grid(std::vector<double> alphas, std::vector<double> betas) {
  std::vector<ProcessParams> out;
  for (double a : alphas) {
    for (double b : betas) {
      for (double l : kRates) out.push_back(ProcessParams{l, a, b, 0.0, 0.0});
    }
  }
  return out;
}

CheckReport red_tempered_tsfpp(const Context& ctx) {
  return reduction_pair(Family::tempered_tsfpp, Family::tsfpp, process_grid(kShape, kShape), ctx);
}

CheckReport red_tsfpp_sfpp(const Context& ctx) {
  return reduction_pair(Family::tsfpp, Family::sfpp, process_grid(kShape, {1.0}), ctx);
}

CheckReport red_tsfpp_tfpp(const Context& ctx) {
  return reduction_pair(Family::tsfpp, Family::tfpp, process_grid({1.0}, kShape), ctx);
}

CheckReport red_to_poisson(Family family, const std::vector<ProcessParams>& grid,
                           const Context& ctx) {
  return reduce([&](Worst& worst) {
    for (const auto& p : grid) {
      const auto a = pmf_table(family, p, kReductionK, kTimes, ctx.config.series);
      for (std::size_t i = 0; i < kTimes.size(); ++i) {
        for (int k = 0; k <= kReductionK; ++k) {
          worst.see(std::abs(a.value(k, i) - poisson_pmf(p.lambda, k, kTimes[i])), pstr(p));
        }
      }
    }
  });
}

CheckReport red_sfpp_poisson(const Context& ctx) {
  return red_to_poisson(Family::sfpp, process_grid({1.0}, {1.0}), ctx);
}

CheckReport red_tfpp_poisson(const Context& ctx) {
  return red_to_poisson(Family::tfpp, process_grid({1.0}, {1.0}), ctx);
}

CheckReport red_gegenbauer_sfpp(const Context& ctx) {
  return reduce([&](Worst& worst) {
    for (double a : kShape) {
      for (double l : kRates) {
        const GegenbauerParams g{l, a / 2, 1.0, 1.0};
        const ProcessParams p{l, a, 1.0, 0.0, 0.0};
        const auto lhs = pmf_table(Family::gegenbauer, g, kReductionK, kTimes, ctx.config.series);
        const auto rhs = pmf_table(Family::sfpp, p, kReductionK, kTimes, ctx.config.series);
        worst.see(max_abs_diff(lhs, rhs, kReductionK), gstr(g));
      }
    }
  });
}

CheckReport red_gegenbauer_ts(const Context& ctx) {
  return reduce([&](Worst& worst) {
    for (double d : kMemory) {
      for (double u : kGegenbauerU) {
        for (double l : kRates) {
          const GegenbauerParams g{l, d, u, 1.0};
          const auto lhs =
              pmf_table(Family::gegenbauer_ts, g, kReductionK, kTimes, ctx.config.series);
          const auto rhs = pmf_table(Family::gegenbauer, g, kReductionK, kTimes, ctx.config.series);
          worst.see(max_abs_diff(lhs, rhs, kReductionK), gstr(g));
        }
      }
    }
  });
}

CheckReport k0_check(const std::function<void(Worst&)>& body) {
  Worst worst;
  body(worst);
  return make(worst.value(), 1e-10, "max relative error of P(0,t); " + worst.describe());
}

// Relative error, absolute where the reference vanishes (e.g. C(1, 2) = 0).
double rel(double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); }

CheckReport k0_sfpp(const Context& ctx) {
  return k0_check([&](Worst& worst) {
    for (const auto& p : process_grid(kShape, {1.0})) {
      const auto tab = pmf_table(Family::sfpp, p, 0, kTimes, ctx.config.series);
      for (std::size_t i = 0; i < kTimes.size(); ++i) {
        const double exact = std::exp(-std::pow(p.lambda, p.alpha) * kTimes[i]);
        worst.see(rel(tab.value(0, i), exact), pstr(p) + " t=" + fmt(kTimes[i]));
      }
    }
  });
}

CheckReport k0_tsfpp(const Context& ctx) {
  return k0_check([&](Worst& worst) {
    for (const auto& p : process_grid(kShape, kShape)) {
      const auto tab = pmf_table(Family::tsfpp, p, 0, kTimes, ctx.config.series);
      for (std::size_t i = 0; i < kTimes.size(); ++i) {
        const double z = -std::pow(p.lambda, p.alpha) * std::pow(kTimes[i], p.beta);
        worst.see(rel(tab.value(0, i), mittag_leffler(p.beta, 1.0, z, ctx.config.series)),
                  pstr(p) + " t=" + fmt(kTimes[i]));
      }
    }
  });
}

CheckReport k0_tempered_sfpp(const Context& ctx) {
  return k0_check([&](Worst& worst) {
    for (const auto& base : process_grid(kShape, {1.0})) {
      for (double mu : kTempering) {
        ProcessParams p = base;
        p.mu = mu;
        const auto tab = pmf_table(Family::tempered_sfpp, p, 0, kTimes, ctx.config.series);
        for (std::size_t i = 0; i < kTimes.size(); ++i) {
          const double psi = std::pow(mu + p.lambda, p.alpha) - std::pow(mu, p.alpha);
          worst.see(rel(tab.value(0, i), std::exp(-kTimes[i] * psi)),
                    pstr(p) + " t=" + fmt(kTimes[i]));
        }
      }
    }
  });
}

CheckReport k0_gegenbauer(const Context& ctx) {
  return k0_check([&](Worst& worst) {
    for (double d : kMemory) {
      for (double u : kGegenbauerU) {
        for (double l : kRates) {
          const GegenbauerParams g{l, d, u, 1.0};
          const auto tab = pmf_table(Family::gegenbauer, g, 0, kTimes, ctx.config.series);
          for (std::size_t i = 0; i < kTimes.size(); ++i) {
            const double exact = std::exp(-std::pow(l, 2 * d) * kTimes[i]);
            worst.see(rel(tab.value(0, i), exact), gstr(g) + " t=" + fmt(kTimes[i]));
          }
        }
      }
    }
  });
}

// -------------------------------------------------------------------- oracle

constexpr int kOracleK = 20;

CheckReport oracle_grid(Family family, const std::vector<ModelParams>& grid, const Context& ctx) {
  std::vector<double> worst(grid.size(), 0.0);
  detail::parallel_for(grid.size(), [&](std::size_t g) {
    const auto tab = pmf_table(family, grid[g], kOracleK, kTimes, ctx.config.series);
    for (std::size_t i = 0; i < kTimes.size(); ++i) {
      const auto ref = extract_pmf(family, grid[g], kOracleK, kTimes[i]);
      for (int k = 0; k <= kOracleK; ++k) {
        const double diff = std::abs(tab.value(k, i) - static_cast<double>(ref[k]));
        worst[g] = std::max(worst[g], diff);
      }
    }
  });
  Worst w;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::string where;
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, ProcessParams>) {
            where = pstr(p);
          } else if constexpr (std::is_same_v<P, GegenbauerParams>) {
            where = gstr(p);
          } else {
            where = "lambda=" + fmt(p.lambda) + " alpha1=" + fmt(p.alpha1) +
                    " alpha2=" + fmt(p.alpha2);
          }
        },
        grid[g]);
    w.see(worst[g], where);
  }
  return make(w.value(), 1e-10,
              std::to_string(grid.size() * kTimes.size()) +
                  " columns, max |series - transform coefficient| over k <= 20; " + w.describe());
}

std::vector<ModelParams> as_models(const std::vector<ProcessParams>& ps) {
  return std::vector<ModelParams>(ps.begin(), ps.end());
}

CheckReport oracle_sfpp(const Context& ctx) {
  return oracle_grid(Family::sfpp, as_models(process_grid(kShape, {1.0})), ctx);
}

CheckReport oracle_tsfpp(const Context& ctx) {
  return oracle_grid(Family::tsfpp, as_models(process_grid(kShape, kShape)), ctx);
}

CheckReport oracle_tempered_sfpp(const Context& ctx) {
  std::vector<ModelParams> grid;
  for (auto p : process_grid(kShape, {1.0})) {
    for (double mu : kTempering) {
      p.mu = mu;
      grid.push_back(p);
    }
  }
  return oracle_grid(Family::tempered_sfpp, grid, ctx);
}

std::vector<ModelParams> gegenbauer_grid(const std::vector<double>& betas) {
  std::vector<ModelParams> grid;
  for (double d : kMemory) {
    for (double u : kGegenbauerU) {
      for (double b : betas) {
        for (double l : kRates) grid.push_back(GegenbauerParams{l, d, u, b});
      }
    }
  }
  return grid;
}

CheckReport oracle_gegenbauer(const Context& ctx) {
  return oracle_grid(Family::gegenbauer, gegenbauer_grid({1.0}), ctx);
}

CheckReport oracle_gegenbauer_ts(const Context& ctx) {
  return oracle_grid(Family::gegenbauer_ts, gegenbauer_grid(kShape), ctx);
}

CheckReport oracle_composite(const Context& ctx) {
  std::vector<ModelParams> grid;
  for (double a1 : kShape) {
    for (double a2 : kShape) {
      for (double l : kRates) grid.push_back(CompositeParams{l, a1, a2});
    }
  }
  return oracle_grid(Family::composite, grid, ctx);
}

// ---------------------------------------------------------------- identities

// The right-hand side cancels by up to a factor 2e5 (alpha = 2.4, p = 6), more
// than a double-rounded C(a, k) leaves room for at 1e-12. Both sides therefore
// use the falling product that gen_binomial evaluates in long double before
// rounding; the double-rounded evaluation is reported alongside.
CheckReport binomial_identity(const Context&) {
  Worst worst;
  double worst_double = 0.0;
  for (double a : {0.3, 0.5, 1.7, 2.4}) {
    for (int p = 1; p <= 6; ++p) {
      long double rhs = 0.0L;
      double rhs_double = 0.0;
      for (int j = 0; j <= p; ++j) {
        const long double w = std::ldexp(1.0L, 2 * j);
        rhs += w * detail::binom_product<long double>(a, p + j) *
               detail::binom_product<long double>(p + j, 2 * j);
        rhs_double += static_cast<double>(w) * gen_binomial(a, p + j) * gen_binomial(p + j, 2 * j);
      }
      const long double lhs = detail::binom_product<long double>(2.0L * a, 2 * p);
      const long double err = lhs == 0 ? std::fabs(rhs) : std::fabs((rhs - lhs) / lhs);
      worst.see(static_cast<double>(err), "alpha=" + fmt(a) + " p=" + std::to_string(p));
      worst_double = std::max(worst_double, rel(rhs_double, gen_binomial(2 * a, 2 * p)));
    }
  }
  return make(worst.value(), 1e-12,
              "C(2a,2p) against sum_j 4^j C(a,p+j) C(p+j,2j) in long double; " + worst.describe() +
                  "; with double-rounded coefficients the worst relative error is " +
                  fmt(worst_double));
}

CheckReport pochhammer_relation(const Context&) {
  Worst worst;
  for (double a : {0.3, 0.5, 1.7, 2.4}) {
    double fact = 1.0;
    for (int k = 0; k <= 20; ++k) {
      if (k > 0) fact *= k;
      const double rhs = (k % 2 ? -1.0 : 1.0) * fact * gen_binomial(a, k);
      const double lhs = pochhammer(-a, k);
      worst.see(rel(lhs, rhs),
                "alpha=" + fmt(a) + " k=" + std::to_string(k));
    }
  }
  return make(worst.value(), 1e-12, "(-a)_k against (-1)^k k! C(a,k); " + worst.describe());
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
  return out;
}

CheckReport ml_exp(const Context& ctx) {
  Worst worst;
  for (double z : linspace(-20.0, 20.0, 50)) {
    worst.see(rel(mittag_leffler(1.0, 1.0, z, ctx.config.series), std::exp(z)), "z=" + fmt(z));
  }
  return make(worst.value(), 1e-12, "relative error of E_{1,1}(z) on [-20, 20]; " + worst.describe());
}

CheckReport ml_cos(const Context& ctx) {
  Worst worst;
  for (double x : linspace(0.0, 10.0, 50)) {
    worst.see(std::abs(mittag_leffler(2.0, 1.0, -x * x, ctx.config.series) - std::cos(x)),
              "x=" + fmt(x));
  }
  return make(worst.value(), 1e-12, "absolute error of E_{2,1}(-x^2) on [0, 10]; " + worst.describe());
}

CheckReport prabhakar_unit(const Context& ctx) {
  Worst worst;
  for (double a : {0.3, 0.6, 1.0, 1.5}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double z : linspace(-3.0, 3.0, 50)) {
        const double e = mittag_leffler(a, b, z, ctx.config.series);
        worst.see(rel(prabhakar_ml(a, b, 1.0, z, ctx.config.series), e),
                  "a=" + fmt(a) + " b=" + fmt(b) + " z=" + fmt(z));
      }
    }
  }
  return make(worst.value(), 1e-12, "relative error of M^1_{a,b} against E_{a,b}; " + worst.describe());
}

CheckReport prabhakar_laplace(const Context& ctx) {
  const double a = 0.6, b = 1.0, c = 2.0, eta = 1.0, s = 2.0;
  const double t_max = 40.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double t) {
    if (t <= 0.0) return 0.0;
    return std::pow(t, b - 1) * prabhakar_ml(a, b, c, -eta * std::pow(t, a), ctx.config.series) *
           std::exp(-s * t);
  };
  const double integral = integrator.integrate(f, 0.0, t_max);
  const double exact = std::pow(s, a * c - b) / std::pow(std::pow(s, a) + eta, c);
  return make(std::abs(integral - exact), 1e-6,
              "integral " + fmt(integral) + " against closed form " + fmt(exact));
}

CheckReport series_pow_consistency(const Context&) {
  const int order = 30;
  std::vector<OracleReal> c(order, OracleReal(0));
  c[0] = 1.5;
  c[1] = OracleReal(3) / 10;
  c[2] = OracleReal(-2) / 10;
  c[5] = OracleReal(7) / 100;
  const PowerSeries s(c);
  const OracleReal a = OracleReal(37) / 100;
  const OracleReal b = OracleReal(121) / 100;
  const PowerSeries lhs = series_pow(s, OracleReal(a + b));
  const PowerSeries rhs = series_pow(s, a) * series_pow(s, b);
  OracleReal worst(0);
  for (int k = 0; k < order; ++k) worst = std::max(worst, OracleReal(abs(lhs[k] - rhs[k])));
  return make(static_cast<double>(worst), 1e-40,
              "max coefficient gap of s^(a+b) against s^a s^b, order 30, 50 digits");
}

CheckReport shift_identity(const Context&) {
  const int order = 30;
  OracleReal worst(0);
  for (double alpha : {0.3, 0.7, 1.5}) {
    const PowerSeries one_minus_w = PowerSeries::linear(OracleReal(1), OracleReal(-1), order);
    std::vector<OracleReal> c(order, OracleReal(0));
    c[0] = 1;
    c[1] = -2;
    if (order > 2) c[2] = 1;
    const PowerSeries inner{c};  // 1 - w (2 - w)
    const PowerSeries lhs = series_pow(one_minus_w, OracleReal(2 * OracleReal(alpha)));
    const PowerSeries rhs = series_pow(inner, OracleReal(alpha));
    for (int k = 0; k < order; ++k) worst = std::max(worst, OracleReal(abs(lhs[k] - rhs[k])));
  }
  return make(static_cast<double>(worst), 1e-40,
              "max coefficient gap of (1-w)^(2a) against (1-w(2-w))^a, a in {0.3, 0.7, 1.5}");
}

CheckReport nonnegativity(const Context& ctx) {
  const std::vector<double> times = {0.1, 1.0, 5.0};
  std::vector<ProcessParams> grid;
  for (double a : kShape) {
    for (double b : kShape) {
      for (double mu : kTempering) {
        for (double nu : kTempering) {
          for (double l : kRates) grid.push_back(ProcessParams{l, a, b, mu, nu});
        }
      }
    }
  }
  std::vector<double> lowest(grid.size(), 0.0);
  detail::parallel_for(grid.size(), [&](std::size_t g) {
    const auto tab = pmf_table(grid[g], 50, times, ctx.config.series);
    for (const auto& col : tab.columns) {
      for (double p : col.p) lowest[g] = std::min(lowest[g], p);
    }
  });
  std::size_t at = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (lowest[g] < lowest[at]) at = g;
  }
  return make(-lowest[at], 1e-12,
              "negated minimum over " + std::to_string(grid.size()) +
                  " parameter points, k <= 50, t in {0.1, 1, 5}; lowest at " + pstr(grid[at]));
}

CheckReport gegenbauer_mass(const Context& ctx) {
  const GegenbauerParams g{1.0, 0.25, 0.5, 1.0};
  const double t = 1.0;
  const auto tab = pmf_table(Family::gegenbauer, g, 200, {t}, ctx.config.series);
  double sum = 0.0;
  for (double p : tab.columns[0].p) sum += p;
  const double printed = std::exp(-2 * std::pow(g.lambda, 2 * g.d) * std::pow(1 - g.u, g.d) * t);
  const double generating =
      std::exp(-std::pow(g.lambda, 2 * g.d) * std::pow(2 * (1 - g.u), g.d) * t);
  return make(std::abs(sum - printed), 1e-6,
              "partial sum to K=200 is " + fmt(sum) + "; e^{-2 lambda^{2d} (1-u)^d t} = " +
                  fmt(printed) + "; the generating function at w=1 gives e^{-lambda^{2d} (2(1-u))^d t} = " +
                  fmt(generating));
}

CheckReport tsfpp_pgf(const Context& ctx) {
  Worst worst;
  const std::vector<ProcessParams> grid = {
      {1.0, 0.7, 0.6, 0.0, 0.0}, {0.5, 0.3, 0.5, 0.0, 0.0}, {2.0, 0.5, 0.9, 0.0, 0.0}};
  for (const auto& p : grid) {
    const auto tab = pmf_table(Family::tsfpp, p, 300, {1.0}, ctx.config.series);
    for (double u : {0.2, 0.5, 0.9}) {
      double sum = 0.0, power = 1.0;
      for (double v : tab.columns[0].p) {
        sum += power * v;
        power *= u;
      }
      const double z = -std::pow(p.lambda, p.alpha) * std::pow(1 - u, p.alpha);
      worst.see(std::abs(sum - mittag_leffler(p.beta, 1.0, z, ctx.config.series)),
                pstr(p) + " u=" + fmt(u));
    }
  }
  return make(worst.value(), 1e-8,
              "sum_{k<=300} u^k P(k,1) against E_beta(-lambda^alpha (1-u)^alpha); " +
                  worst.describe());
}

// ---------------------------------------------------------------- montecarlo

double tv_against(const SampleSet& set, const std::vector<double>& p, int k_max) {
  return stats::tv_distance(empirical_pmf(set, k_max), truncated(p, k_max));
}

CheckReport mc_tv(const ProcessParams& p, const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const auto set = sample_process(p, 1.0, kSamples, rng);
  const auto col = pmf_column(p, 20, 1.0, ctx.config.series);
  return stochastic(make(tv_against(set, col.p, 20), 0.01,
                         "TV over k <= 20, n = 1e5, t = 1, " + pstr(p)),
                    rng);
}

CheckReport mc_tsfpp(const Context& ctx) { return mc_tv({1.0, 0.7, 0.6, 0.0, 0.0}, ctx); }
CheckReport mc_tempered_sfpp(const Context& ctx) { return mc_tv({1.0, 0.6, 1.0, 0.5, 0.0}, ctx); }
CheckReport mc_tempered_tsfpp(const Context& ctx) { return mc_tv({1.0, 0.7, 0.7, 0.5, 0.5}, ctx); }

CheckReport mc_renewal_tv(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const auto set = sample_tfpp_renewal(1.0, 0.5, 1.0, kSamples, rng);
  const auto col = pmf_column(ProcessParams{1.0, 1.0, 0.5, 0.0, 0.0}, 20, 1.0, ctx.config.series);
  return stochastic(make(tv_against(set, col.p, 20), 0.01,
                         "renewal sampler against the TFPP series, beta = 0.5, TV over k <= 20"),
                    rng);
}

CheckReport mc_renewal_poisson(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const auto set = sample_tfpp_renewal(1.0, 1.0, 2.0, kSamples, rng);
  std::vector<double> probs;
  for (int k = 0; k <= 40; ++k) probs.push_back(poisson_pmf(1.0, k, 2.0));
  const auto test = stats::chi_square_gof(set.counts, probs);
  return stochastic(make(test.p_value, 0.01,
                         "chi-square of exponential-wait renewal counts against Poisson(2), "
                         "statistic " + fmt(test.statistic),
                         Comparison::at_least),
                    rng);
}

CheckReport mc_renewal_vs_process(const Context& ctx) {
  const RngSpec a = ctx.rng(0);
  const RngSpec b = ctx.rng(1);
  const auto renewal = sample_tfpp_renewal(1.0, 0.5, 1.0, kSamples, a);
  const auto process = sample_process(ProcessParams{1.0, 1.0, 0.5, 0.0, 0.0}, 1.0, kSamples, b);
  const auto test = stats::chi_square_two_sample(renewal.counts, process.counts);
  return stochastic(make(test.p_value, 0.01,
                         "two-sample chi-square, renewal sampler (stream " +
                             std::to_string(a.stream) + ") against time-changed sampler (stream " +
                             std::to_string(b.stream) + "), beta = 0.5",
                         Comparison::at_least),
                    a);
}

CheckReport mc_renewal_p0(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const auto set = sample_tfpp_renewal(1.0, 0.5, 1.0, kSamples, rng);
  const double p0 = empirical_pmf(set, 0)[0];
  const double target = mittag_leffler(0.5, 1.0, -1.0);
  const double se = std::sqrt(target * (1 - target) / static_cast<double>(kSamples));
  return stochastic(make(z_score(p0, se, target), 4.0,
                         "standard errors between P(N=0) = " + fmt(p0) + " and E_0.5(-1) = " +
                             fmt(target)),
                    rng);
}

CheckReport mc_inverse_laplace(double beta, double nu, double target, const std::string& what,
                               const Context& ctx) {
  const RngSpec rng = ctx.rng();
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  std::vector<double> x(kSamples);
  for (auto& v : x) v = std::exp(-sample_inverse_subordinator(beta, nu, 1.0, gen, 0.01));
  const auto m = stats::moments(x);
  return stochastic(make(z_score(m.mean, m.mean_se, target), 4.0,
                         "standard errors between E[e^{-Y(1)}] = " + fmt(m.mean) + " and " + what +
                             " = " + fmt(target)),
                    rng);
}

CheckReport mc_inverse_stable_laplace(const Context& ctx) {
  return mc_inverse_laplace(0.5, 0.0, mittag_leffler(0.5, 1.0, -1.0), "E_0.5(-1)", ctx);
}

// E[e^{-Y(t)}] has Laplace transform in t equal to psi(s) / (s (psi(s) + 1)) with
// psi(s) = (s + nu)^beta - nu^beta.
double inverse_tempered_laplace(double beta, double nu, double t) {
  using C = std::complex<long double>;
  const long double b = beta, n = nu;
  return static_cast<double>(detail::talbot_invert(
      [&](C s) {
        const C psi = std::pow(s + n, b) - std::pow(C(n), b);
        return psi / (s * (psi + 1.0L));
      },
      t));
}

CheckReport mc_inverse_tempered_laplace(const Context& ctx) {
  return mc_inverse_laplace(0.7, 1.0, inverse_tempered_laplace(0.7, 1.0, 1.0),
                            "the Talbot inversion of its transform", ctx);
}

CheckReport mc_inverse_stable_mean(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  std::vector<double> x(kSamples);
  for (auto& v : x) v = sample_inverse_subordinator(0.5, 0.0, 1.0, gen, 0.01);
  const auto m = stats::moments(x);
  const double target = 1.0 / std::tgamma(1.5);
  return stochastic(make(z_score(m.mean, m.mean_se, target), 4.0,
                         "standard errors between E[Y_0.5(1)] = " + fmt(m.mean) +
                             " and 1/Gamma(1.5)"),
                    rng);
}

CheckReport mc_levy_cdf(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  const std::size_t n = 1'000'000;
  std::size_t below = 0;
  for (std::size_t i = 0; i < n; ++i) below += sample_stable(0.5, 1.0, gen) <= 1.0;
  const double target = std::erfc(0.5);
  const double est = static_cast<double>(below) / n;
  const double se = std::sqrt(target * (1 - target) / n);
  return stochastic(make(z_score(est, se, target), 4.0,
                         "standard errors between the empirical CDF of S_0.5(1) at 1 (" + fmt(est) +
                             ") and erfc(1/2)"),
                    rng);
}

CheckReport mc_stable_scaling(const Context& ctx) {
  const RngSpec a = ctx.rng(0);
  const RngSpec b = ctx.rng(1);
  Xoshiro256 ga = Xoshiro256::for_stream(a);
  Xoshiro256 gb = Xoshiro256::for_stream(b);
  std::vector<double> x(kSamples), y(kSamples);
  const double scale = std::pow(2.0, 1.0 / 0.9);
  for (auto& v : x) v = sample_stable(0.9, 2.0, ga) / scale;
  for (auto& v : y) v = sample_stable(0.9, 1.0, gb);
  const auto test = stats::ks_two_sample(std::move(x), std::move(y));
  return stochastic(make(test.p_value, 0.01,
                         "KS of S_0.9(2)/2^{1/0.9} against S_0.9(1), statistic " +
                             fmt(test.statistic),
                         Comparison::at_least),
                    a);
}

CheckReport mc_stable_density(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  const std::size_t n = 1'000'000;
  const double lo = 2.0, hi = 10.0, width = 0.25;
  const int bins = static_cast<int>((hi - lo) / width);
  std::vector<std::size_t> hist(bins, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = sample_stable(0.7, 1.0, gen);
    if (x >= lo && x < hi) ++hist[static_cast<int>((x - lo) / width)];
  }
  Worst worst;
  for (int b = 0; b < bins; ++b) {
    const double a = lo + b * width;
    // Simpson average of the series density over the bin.
    const double avg = (stable_density_series(0.7, a) + 4 * stable_density_series(0.7, a + width / 2) +
                        stable_density_series(0.7, a + width)) / 6;
    worst.see(std::abs(static_cast<double>(hist[b]) / (n * width) - avg), "x=" + fmt(a));
  }
  return stochastic(make(worst.value(), 0.01,
                         "sup |histogram - 60-term series density| on [2, 10], 1e6 draws; " +
                             worst.describe()),
                    rng);
}

CheckReport mc_tempered_untempered(const Context& ctx) {
  const RngSpec a = ctx.rng(0);
  const RngSpec b = ctx.rng(1);
  Xoshiro256 ga = Xoshiro256::for_stream(a);
  Xoshiro256 gb = Xoshiro256::for_stream(b);
  std::vector<double> x(kSamples), y(kSamples);
  for (auto& v : x) v = sample_tempered_stable(0.6, 0.0, 1.0, ga);
  for (auto& v : y) v = sample_stable(0.6, 1.0, gb);
  const auto test = stats::ks_two_sample(std::move(x), std::move(y));
  return stochastic(make(test.p_value, 0.01,
                         "KS of tempered draws with mu = 0 against stable draws, statistic " +
                             fmt(test.statistic),
                         Comparison::at_least),
                    a);
}

CheckReport mc_monotone_paths(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  std::vector<double> times;
  for (int i = 0; i <= 200; ++i) times.push_back(0.01 * i);
  std::size_t violations = 0, paths = 0;
  for (double alpha : {0.3, 0.6, 0.9}) {
    for (double mu : {0.0, 1.5}) {
      for (int rep = 0; rep < 200; ++rep, ++paths) {
        const auto path = sample_subordinator_path(alpha, mu, times, gen);
        if (path.values.front() < 0.0) ++violations;
        for (std::size_t i = 1; i < path.values.size(); ++i) {
          violations += path.values[i] < path.values[i - 1];
        }
      }
    }
  }
  return stochastic(make(static_cast<double>(violations), 0.0,
                         "decreasing steps over " + std::to_string(paths) + " paths of 201 points"),
                    rng);
}

CheckReport mc_determinism(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  std::size_t mismatches = 0;
  const std::vector<ProcessParams> grid = {
      {1.0, 0.7, 0.6, 0.0, 0.0}, {1.0, 0.6, 1.0, 0.5, 0.0}, {2.0, 1.0, 1.0, 0.0, 0.0}};
  for (const auto& p : grid) {
    const auto a = sample_process(p, 1.0, 20'000, rng);
    const auto b = sample_process(p, 1.0, 20'000, rng);
    mismatches += a.counts != b.counts;
  }
  const auto r1 = sample_tfpp_renewal(1.0, 0.5, 1.0, 20'000, rng);
  const auto r2 = sample_tfpp_renewal(1.0, 0.5, 1.0, 20'000, rng);
  mismatches += r1.counts != r2.counts;
  return stochastic(make(static_cast<double>(mismatches), 0.0,
                         "sample sets differing between two runs with the same RngSpec"),
                    rng);
}

// ------------------------------------------------------------------- moments

CheckReport moment_band(const std::vector<double>& x, bool variance, double target,
                        const std::string& what, const RngSpec& rng) {
  const auto m = stats::moments(x);
  const double est = variance ? m.variance : m.mean;
  const double se = variance ? m.variance_se : m.mean_se;
  return stochastic(make(z_score(est, se, target), 4.0,
                         "standard errors between the sample " +
                             std::string(variance ? "variance " : "mean ") + fmt(est) + " and " +
                             what + " = " + fmt(target)),
                    rng);
}

std::vector<double> tempered_stable_draws(const RngSpec& rng) {
  Xoshiro256 gen = Xoshiro256::for_stream(rng);
  std::vector<double> x(kSamples);
  for (auto& v : x) v = sample_tempered_stable(0.6, 1.5, 3.0, gen);
  return x;
}

CheckReport mom_tempered_stable_mean(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  return moment_band(tempered_stable_draws(rng), false, 0.6 * std::pow(1.5, -0.4) * 3.0,
                     "alpha mu^{alpha-1} t", rng);
}

CheckReport mom_tempered_stable_variance(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  return moment_band(tempered_stable_draws(rng), true, 0.6 * 0.4 * std::pow(1.5, -1.4) * 3.0,
                     "alpha (1-alpha) mu^{alpha-2} t", rng);
}

std::vector<double> process_draws(const ProcessParams& p, double t, const RngSpec& rng) {
  const auto set = sample_process(p, t, kSamples, rng);
  return std::vector<double>(set.counts.begin(), set.counts.end());
}

CheckReport mom_tempered_process_mean(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const double l = 2.0, a = 0.6, mu = 1.5, t = 3.0;
  return moment_band(process_draws({l, a, 1.0, mu, 0.0}, t, rng), false,
                     l * a * std::pow(mu, a - 1) * t, "lambda alpha mu^{alpha-1} t", rng);
}

CheckReport mom_tempered_process_variance(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  const double l = 2.0, a = 0.6, mu = 1.5, t = 3.0;
  const double target = l * a * std::pow(mu, a - 1) * t + l * l * a * (1 - a) * std::pow(mu, a - 2) * t;
  return moment_band(process_draws({l, a, 1.0, mu, 0.0}, t, rng), true, target,
                     "lambda alpha mu^{alpha-1} t + lambda^2 alpha (1-alpha) mu^{alpha-2} t", rng);
}

CheckReport mom_poisson_mean(const Context& ctx) {
  const RngSpec rng = ctx.rng();
  return moment_band(process_draws({2.0, 1.0, 1.0, 0.0, 0.0}, 1.0, rng), false, 2.0,
                     "lambda t", rng);
}

// ------------------------------------------------------------------ governing

using Lhs = std::function<TimeGridFn(const TimeGridFn&)>;
using Rhs = std::function<std::vector<double>(const std::vector<double>&)>;

// sup |lhs - rhs| / sup |rhs| over t in [0.25, 2], k <= 8, h = 1/512.
CheckReport residual(Family family, const ModelParams& params, const Lhs& lhs, const Rhs& rhs,
                     const std::string& what, const Context& ctx) {
  const int k_max = 8;
  const double h = 1.0 / 512;
  const std::size_t n = 1025;
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = static_cast<double>(i) * h;
  const auto tab = pmf_table(family, params, k_max, ts, ctx.config.series);
  std::vector<std::vector<double>> left(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    TimeGridFn f{h, {}, tab.value(k, 0)};
    f.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) f.values.push_back(tab.value(k, i));
    left[k] = lhs(f).values;
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ts[i] < 0.25) continue;
    const auto right = rhs(tab.columns[i].p);
    for (int k = 0; k <= k_max; ++k) {
      num = std::max(num, std::abs(left[k][i] - right[k]));
      den = std::max(den, std::abs(right[k]));
    }
  }
  return make(num / den, 1e-2, what + "; sup-norm residual relative to the right side");
}

std::vector<double> negate(std::vector<double> v) {
  for (auto& x : v) x = -x;
  return v;
}

Rhs shift_rhs(double alpha, double mu, double lambda) {
  return [=](const std::vector<double>& p) { return negate(fractional_shift(p, alpha, mu, lambda)); };
}

Lhs caputo(double beta) {
  return [=](const TimeGridFn& f) { return caputo_derivative(f, beta); };
}

CheckReport gov_sfpp(const Context& ctx) {
  return residual(Family::sfpp, ProcessParams{1.0, 0.6, 1.0, 0.0, 0.0}, caputo(1.0),
                  shift_rhs(0.6, 0.0, 1.0), "SFPP, lambda=1 alpha=0.6", ctx);
}

CheckReport gov_tsfpp(const Context& ctx) {
  return residual(Family::tsfpp, ProcessParams{1.0, 0.7, 0.6, 0.0, 0.0}, caputo(0.6),
                  shift_rhs(0.7, 0.0, 1.0), "TSFPP, lambda=1 alpha=0.7 beta=0.6", ctx);
}

CheckReport gov_tempered_sfpp(const Context& ctx) {
  return residual(Family::tempered_sfpp, ProcessParams{1.0, 0.6, 1.0, 0.5, 0.0}, caputo(1.0),
                  shift_rhs(0.6, 0.5, 1.0), "tempered SFPP, lambda=1 alpha=0.6 mu=0.5", ctx);
}

CheckReport gov_tempered_tsfpp(const Context& ctx) {
  return residual(
      Family::tempered_tsfpp, ProcessParams{1.0, 0.7, 0.7, 0.5, 0.5},
      [](const TimeGridFn& f) { return caputo_tempered_derivative(f, 0.7, 0.5); },
      shift_rhs(0.7, 0.5, 1.0), "tempered TSFPP, lambda=1 alpha=0.7 beta=0.7 mu=0.5 nu=0.5", ctx);
}

CheckReport gov_gegenbauer(const Context& ctx) {
  return residual(
      Family::gegenbauer, GegenbauerParams{1.0, 0.25, 0.5, 1.0}, caputo(1.0),
      [](const std::vector<double>& p) { return negate(gegenbauer_shift(p, 0.25, 0.5)); },
      "Gegenbauer, lambda=1 d=0.25 u=0.5", ctx);
}

CheckReport gov_tfpp(const Context& ctx) {
  return residual(Family::tfpp, ProcessParams{2.0, 1.0, 0.6, 0.0, 0.0}, caputo(0.6),
                  shift_rhs(1.0, 0.0, 2.0),
                  "TFPP with coefficient lambda (not lambda^beta), lambda=2 beta=0.6", ctx);
}

// ------------------------------------------------------------------ registry

struct Definition {
  CheckInfo info;
  std::uint64_t stream;
  CheckReport (*run)(const Context&);
};

const std::vector<Definition>& registry() {
  static const std::vector<Definition> defs = [] {
    std::vector<Definition> d;
    std::uint64_t next_stream = 0;
    auto add = [&](std::string id, std::string suite, std::string invariant,
                   CheckReport (*run)(const Context&), bool stochastic = false) {
      d.push_back({{std::move(id), std::move(suite), std::move(invariant), stochastic},
                   stochastic ? next_stream : 0, run});
      if (stochastic) next_stream += 2;
    };
    const std::string lattice = "pmf.reduction_lattice";
    add("reductions.tempered_tsfpp_to_tsfpp", "reductions", lattice, red_tempered_tsfpp);
    add("reductions.tsfpp_to_sfpp", "reductions", lattice, red_tsfpp_sfpp);
    add("reductions.tsfpp_to_tfpp", "reductions", lattice, red_tsfpp_tfpp);
    add("reductions.sfpp_to_poisson", "reductions", lattice, red_sfpp_poisson);
    add("reductions.tfpp_to_poisson", "reductions", lattice, red_tfpp_poisson);
    add("reductions.gegenbauer_to_sfpp", "reductions", lattice, red_gegenbauer_sfpp);
    add("reductions.gegenbauer_ts_to_gegenbauer", "reductions", lattice, red_gegenbauer_ts);
    const std::string k0 = "pmf.k0_closed_forms";
    add("reductions.k0_sfpp", "reductions", k0, k0_sfpp);
    add("reductions.k0_tsfpp", "reductions", k0, k0_tsfpp);
    add("reductions.k0_tempered_sfpp", "reductions", k0, k0_tempered_sfpp);
    add("reductions.k0_gegenbauer", "reductions", k0, k0_gegenbauer);

    const std::string agree = "ztrans.oracle_agreement";
    add("oracle.sfpp", "oracle", agree, oracle_sfpp);
    add("oracle.tsfpp", "oracle", agree, oracle_tsfpp);
    add("oracle.tempered_sfpp", "oracle", agree, oracle_tempered_sfpp);
    add("oracle.gegenbauer", "oracle", agree, oracle_gegenbauer);
    add("oracle.gegenbauer_ts", "oracle", agree, oracle_gegenbauer_ts);
    add("oracle.composite", "oracle", agree, oracle_composite);

    add("identities.binomial_identity", "identities", "specfun.binomial_identity",
        binomial_identity);
    add("identities.pochhammer_relation", "identities", "specfun.pochhammer_relation",
        pochhammer_relation);
    add("identities.ml_exp", "identities", "specfun.ml_exp", ml_exp);
    add("identities.ml_cos", "identities", "", ml_cos);
    add("identities.prabhakar_unit", "identities", "specfun.prabhakar_c1", prabhakar_unit);
    add("identities.prabhakar_laplace", "identities", "specfun.prabhakar_laplace",
        prabhakar_laplace);
    add("identities.series_pow", "identities", "ztrans.series_pow_consistency",
        series_pow_consistency);
    add("identities.shift_identity", "identities", "ztrans.shift_identity", shift_identity);
    add("identities.nonnegativity", "identities", "pmf.nonnegativity", nonnegativity);
    add("identities.gegenbauer_mass", "identities", "pmf.gegenbauer_total_mass", gegenbauer_mass);
    add("identities.tsfpp_pgf", "identities", "pmf.tsfpp_pgf", tsfpp_pgf);

    add("montecarlo.tsfpp_tv", "montecarlo", "simulate.representation_equivalence", mc_tsfpp,
        true);
    add("montecarlo.tempered_sfpp_tv", "montecarlo", "simulate.tempered_equivalence",
        mc_tempered_sfpp, true);
    add("montecarlo.monotone_paths", "montecarlo", "simulate.monotone_path", mc_monotone_paths,
        true);
    add("montecarlo.determinism", "montecarlo", "simulate.determinism", mc_determinism, true);
    add("montecarlo.tempered_tsfpp_tv", "montecarlo", "", mc_tempered_tsfpp, true);
    add("montecarlo.renewal_tv", "montecarlo", "", mc_renewal_tv, true);
    add("montecarlo.renewal_poisson", "montecarlo", "", mc_renewal_poisson, true);
    add("montecarlo.renewal_vs_process", "montecarlo", "", mc_renewal_vs_process, true);
    add("montecarlo.renewal_p0", "montecarlo", "", mc_renewal_p0, true);
    add("montecarlo.inverse_stable_laplace", "montecarlo", "", mc_inverse_stable_laplace, true);
    add("montecarlo.inverse_stable_mean", "montecarlo", "", mc_inverse_stable_mean, true);
    add("montecarlo.inverse_tempered_laplace", "montecarlo", "", mc_inverse_tempered_laplace,
        true);
    add("montecarlo.levy_cdf", "montecarlo", "", mc_levy_cdf, true);
    add("montecarlo.stable_scaling", "montecarlo", "", mc_stable_scaling, true);
    add("montecarlo.stable_density", "montecarlo", "", mc_stable_density, true);
    add("montecarlo.tempered_untempered", "montecarlo", "", mc_tempered_untempered, true);

    add("moments.tempered_stable_mean", "moments", "", mom_tempered_stable_mean, true);
    add("moments.tempered_stable_variance", "moments", "", mom_tempered_stable_variance, true);
    add("moments.tempered_process_mean", "moments", "", mom_tempered_process_mean, true);
    add("moments.tempered_process_variance", "moments", "", mom_tempered_process_variance, true);
    add("moments.poisson_mean", "moments", "", mom_poisson_mean, true);

    const std::string gov = "fracderiv.governing_residuals";
    add("governing.sfpp", "governing", gov, gov_sfpp);
    add("governing.tsfpp", "governing", gov, gov_tsfpp);
    add("governing.tempered_sfpp", "governing", gov, gov_tempered_sfpp);
    add("governing.tempered_tsfpp", "governing", gov, gov_tempered_tsfpp);
    add("governing.gegenbauer", "governing", gov, gov_gegenbauer);
    add("governing.tfpp", "governing", "fracderiv.tfpp_rate", gov_tfpp);
    return d;
  }();
  return defs;
}

// Every module invariant and the one suite that owns it.
const std::vector<std::pair<std::string, std::string>>& invariant_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"specfun.binomial_identity", "identities"},
      {"specfun.pochhammer_relation", "identities"},
      {"specfun.ml_exp", "identities"},
      {"specfun.prabhakar_c1", "identities"},
      {"specfun.prabhakar_laplace", "identities"},
      {"pmf.reduction_lattice", "reductions"},
      {"pmf.nonnegativity", "identities"},
      {"pmf.k0_closed_forms", "reductions"},
      {"pmf.gegenbauer_total_mass", "identities"},
      {"pmf.tsfpp_pgf", "identities"},
      {"ztrans.oracle_agreement", "oracle"},
      {"ztrans.series_pow_consistency", "identities"},
      {"ztrans.shift_identity", "identities"},
      {"simulate.representation_equivalence", "montecarlo"},
      {"simulate.tempered_equivalence", "montecarlo"},
      {"simulate.monotone_path", "montecarlo"},
      {"simulate.determinism", "montecarlo"},
      {"fracderiv.governing_residuals", "governing"},
      {"fracderiv.tfpp_rate", "governing"},
  };
  return table;
}

bool passes(double metric, double threshold, Comparison c) {
  if (std::isnan(metric)) return false;
  return c == Comparison::at_most ? metric <= threshold : metric >= threshold;
}

std::uint64_t base_seed(const HarnessConfig& config) {
  if (!config.fresh_seed) return config.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

CheckReport execute(const Definition& def, const HarnessConfig& config, std::uint64_t seed) {
  const Context ctx{config, seed, def.stream};
  CheckReport r;
  try {
    r = def.run(ctx);
    r.status = passes(r.metric, r.threshold, r.comparison) ? Status::pass : Status::fail;
  } catch (const NonConvergence& e) {
    r = make(std::nan(""), 0.0, std::string("error: non-convergence at level ") + e.level() +
                                    ": " + e.what());
    r.status = Status::fail;
  } catch (const std::exception& e) {
    r = make(std::nan(""), 0.0, std::string("error: ") + e.what());
    r.status = Status::fail;
  }
  r.check_id = def.info.id;
  if (def.info.stochastic && !r.seed) r.seed = ctx.rng();
  return r;
}

bool in_suite(const CheckInfo& info, std::string_view suite) {
  return suite == "all" || info.suite == suite;
}

void require_suite(std::string_view suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidParameter("unknown suite '" + std::string(suite) + "'");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reductions", "oracle",     "montecarlo", "moments",
                                                 "governing",  "identities", "all"};
  return names;
}

std::vector<CheckInfo> list_checks(std::string_view suite) {
  require_suite(suite);
  std::vector<CheckInfo> out;
  for (const auto& def : registry()) {
    if (in_suite(def.info, suite)) out.push_back(def.info);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<CoverageEntry> coverage() {
  std::vector<CoverageEntry> out;
  for (const auto& [invariant, suite] : invariant_table()) {
    CoverageEntry e{invariant, suite, {}};
    for (const auto& def : registry()) {
      if (def.info.invariant == invariant) e.checks.push_back(def.info.id);
    }
    std::sort(e.checks.begin(), e.checks.end());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CheckReport> run_suite(std::string_view suite, const HarnessConfig& config) {
  require_suite(suite);
  config.series.validate();
  std::vector<const Definition*> selected;
  for (const auto& def : registry()) {
    if (in_suite(def.info, suite)) selected.push_back(&def);
  }
  const std::uint64_t seed = base_seed(config);
  std::vector<CheckReport> out(selected.size());
  detail::parallel_for(selected.size(),
                       [&](std::size_t i) { out[i] = execute(*selected[i], config, seed); });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  return out;
}

CheckReport run_check(std::string_view check_id, const HarnessConfig& config) {
  config.series.validate();
  for (const auto& def : registry()) {
    if (def.info.id == check_id) return execute(def, config, base_seed(config));
  }
  throw InvalidParameter("unknown check '" + std::string(check_id) + "'");
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.status == Status::pass; });
}

std::string header_json(std::string_view suite) {
  nlohmann::ordered_json cov = nlohmann::ordered_json::array();
  for (const auto& e : coverage()) {
    cov.push_back({{"invariant", e.invariant}, {"suite", e.suite}, {"checks", e.checks}});
  }
  nlohmann::ordered_json j;
  j["header"] = {{"suite", std::string(suite)}, {"coverage", cov}};
  return j.dump();
}

std::string to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["status"] = r.status == Status::pass ? "pass" : "fail";
  j["metric"] = r.metric;
  j["threshold"] = r.threshold;
  j["pass_if"] = r.comparison == Comparison::at_most ? "metric <= threshold" : "metric >= threshold";
  j["details"] = r.details;
  if (r.seed) {
    j["seed"] = {{"seed", r.seed->seed}, {"stream", r.seed->stream}};
  } else {
    j["seed"] = nullptr;
  }
  return j.dump();
}

void write_jsonl(std::ostream& out, std::string_view suite,
                 const std::vector<CheckReport>& reports) {
  out << header_json(suite) << '\n';
  for (const auto& r : reports) out << to_json(r) << '\n';
}

}  // namespace fracpoisson::harness
