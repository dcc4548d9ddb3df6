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

#include "fracpoisson/ztrans.hpp"

#include <algorithm>
#include <cmath>

namespace fracpoisson {

namespace {

constexpr int kGuardCoefficients = 8;
// Two precision rungs must agree to this many absolute digits.
constexpr int kAgreementDigits = 35;

template <class Real>
SeriesConfig oracle_config() {
  SeriesConfig config;
  const int digits = static_cast<int>(detail::digits10_of<Real>());
  config.rel_tol = std::max(1e-300, std::pow(10.0, -(digits - 3)));
  config.abs_tol = 0.0;
  config.max_terms = 100'000;
  return config;
}

template <class Real>
using Series = TruncatedSeries<Real>;

// (1 - w)^a
template <class Real>
Series<Real> one_minus_w_pow(const Real& a, int order) {
  return series_pow(Series<Real>::linear(Real(1), Real(-1), order), a);
}

template <class Real>
Series<Real> transform(Family family, const ModelParams& params, double t, int order) {
  using std::pow;
  const Real tr(t);
  switch (family) {
    case Family::poisson: {
      const Real x = Real(std::get<ProcessParams>(params).lambda) * tr;
      return series_exp(Series<Real>::linear(Real(-x), x, order));
    }
    case Family::sfpp:
    case Family::tfpp:
    case Family::tsfpp: {
      const auto& p = std::get<ProcessParams>(params);
      const double alpha = family == Family::tfpp ? 1.0 : p.alpha;
      const double beta = family == Family::sfpp ? 1.0 : p.beta;
      const Real x = pow(Real(p.lambda), Real(alpha)) * pow(tr, Real(beta));
      Series<Real> s = Real(-x) * one_minus_w_pow(Real(alpha), order);
      if (beta == 1.0) return series_exp(s);
      return series_ml_compose(beta, s, oracle_config<Real>());
    }
    case Family::tempered_sfpp: {
      const auto& p = std::get<ProcessParams>(params);
      const Real al(p.alpha);
      const Real mu(p.mu), lam(p.lambda);
      Series<Real> inner = series_pow(Series<Real>::linear(Real(mu + lam), Real(-lam), order), al);
      const Real shift = p.mu == 0.0 ? Real(0) : Real(pow(mu, al));
      Series<Real> s = Real(-tr) * (inner - Series<Real>::constant(shift, order));
      return series_exp(s);
    }
    case Family::gegenbauer:
    case Family::gegenbauer_ts: {
      const auto& g = std::get<GegenbauerParams>(params);
      const double beta = family == Family::gegenbauer ? 1.0 : g.beta;
      std::vector<Real> quad(order, Real(0));
      quad[0] = 1;
      if (order > 1) quad[1] = Real(-2) * Real(g.u);
      if (order > 2) quad[2] = 1;
      const Real x = pow(Real(g.lambda), Real(2 * Real(g.d))) * pow(tr, Real(beta));
      Series<Real> s = Real(-x) * series_pow(Series<Real>(std::move(quad)), Real(g.d));
      if (beta == 1.0) return series_exp(s);
      return series_ml_compose(beta, s, oracle_config<Real>());
    }
    case Family::composite: {
      const auto& c = std::get<CompositeParams>(params);
      const Real x = Real(c.lambda) * tr;
      Series<Real> sum = one_minus_w_pow(Real(c.alpha1), order) +
                         one_minus_w_pow(Real(c.alpha2), order);
      return series_exp(Real(-x) * sum);
    }
    case Family::tempered_tsfpp:
      break;
  }
  throw InvalidParameter("extract_pmf: family has no closed-form transform in w");
}

template <class Real>
std::vector<OracleReal> run(Family family, const ModelParams& params, int k_max, double t) {
  const Series<Real> s = transform<Real>(family, params, t, k_max + 1 + kGuardCoefficients);
  std::vector<OracleReal> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(static_cast<OracleReal>(s[k]));
  return out;
}

}  // namespace

std::vector<OracleReal> extract_pmf(Family family, const ModelParams& params, int k_max,
                                    double t) {
  validate(params);
  if (k_max < 0) throw InvalidParameter("extract_pmf: k_max must be >= 0");
  if (!(t >= 0) || !std::isfinite(t)) throw InvalidParameter("extract_pmf: t must be >= 0");
  if (family == Family::tempered_tsfpp) {
    const auto& p = std::get<ProcessParams>(params);
    if (p.beta != 1.0) {
      throw InvalidParameter("extract_pmf: tempered time-space family has no closed form in w");
    }
    family = Family::tempered_sfpp;
  }
  if (t == 0.0) {
    std::vector<OracleReal> out(k_max + 1, OracleReal(0));
    out[0] = 1;
    return out;
  }
  auto at = [&](unsigned digits) {
    return detail::with_precision(
        digits, [&]<class Real>() { return run<Real>(family, params, k_max, t); });
  };
  const OracleReal tol = pow(OracleReal(10), -kAgreementDigits);
  std::vector<OracleReal> low = at(40);
  for (unsigned digits = 80; digits <= detail::kMaxLadderDigits; digits *= 2) {
    std::vector<OracleReal> high = at(digits);
    OracleReal worst(0);
    for (int k = 0; k <= k_max; ++k) worst = std::max(worst, OracleReal(abs(high[k] - low[k])));
    if (worst <= tol) return high;
    low = std::move(high);
  }
  throw NonConvergence("precision", "extract_pmf: precision ladder exhausted");
}

std::vector<OracleReal> extract_pmf(const ModelParams& params, int k_max, double t) {
  return extract_pmf(classify(params), params, k_max, t);
}

PowerSeries ztransform_of(const std::vector<double>& seq) {
  std::vector<OracleReal> v(seq.begin(), seq.end());
  return PowerSeries(std::move(v));
}

bool shift_identity_check(const std::vector<double>& seq, int m) {
  if (m < 0) throw InvalidParameter("shift_identity_check: m must be >= 0");
  if (seq.empty()) return true;
  const int n = static_cast<int>(seq.size());
  const PowerSeries f = ztransform_of(seq);

  // Delay: f(k - m), with f(j) = 0 for j < 0, on the extended order n + m.
  std::vector<double> delayed(n + m, 0.0);
  std::copy(seq.begin(), seq.end(), delayed.begin() + m);
  std::vector<OracleReal> monomial(n + m, OracleReal(0));
  monomial[m] = 1;
  std::vector<OracleReal> f_ext(f.coeffs());
  f_ext.resize(n + m, OracleReal(0));
  const PowerSeries lhs_delay = ztransform_of(delayed);
  const PowerSeries rhs_delay = PowerSeries(std::move(monomial)) * PowerSeries(std::move(f_ext));
  for (int k = 0; k < n + m; ++k) {
    if (lhs_delay[k] != rhs_delay[k]) return false;
  }

  // Advance: f(k + m) on the n - m coefficients that remain known.
  if (m >= n) return true;
  std::vector<OracleReal> head(n, OracleReal(0));
  for (int j = 0; j < m; ++j) head[j] = OracleReal(seq[j]);
  const PowerSeries diff = f - PowerSeries(std::move(head));
  for (int j = 0; j < m; ++j) {
    if (diff[j] != 0) return false;
  }
  std::vector<double> advanced(seq.begin() + m, seq.end());
  const PowerSeries lhs_adv = ztransform_of(advanced);
  for (int k = 0; k + m < n; ++k) {
    if (lhs_adv[k] != diff[k + m]) return false;
  }
  return true;
}

}  // namespace fracpoisson
