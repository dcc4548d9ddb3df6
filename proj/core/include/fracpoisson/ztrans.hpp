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


#ifndef FRACPOISSON_ZTRANS_HPP
#define FRACPOISSON_ZTRANS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracpoisson/detail/partial_sum.hpp"
#include "fracpoisson/detail/real.hpp"
#include "fracpoisson/errors.hpp"
#include "fracpoisson/params.hpp"
#include "fracpoisson/series_config.hpp"

namespace fracpoisson {

// Working type of oracle results: 50 significant decimal digits.
using OracleReal = detail::MpReal<50>;

/// Power series in w = 1/z truncated after `order` coefficients.
///
/// Values are immutable; every operation returns a new series whose order is
/// the smaller of its operands' orders.
template <class Real>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidParameter("TruncatedSeries: order must be >= 1");
  }

  static TruncatedSeries constant(const Real& c, int order) {
    std::vector<Real> v(check_order(order), Real(0));
    v[0] = c;
    return TruncatedSeries(std::move(v));
  }

  // a + b w
  static TruncatedSeries linear(const Real& a, const Real& b, int order) {
    std::vector<Real> v(check_order(order), Real(0));
    v[0] = a;
    if (order > 1) v[1] = b;
    return TruncatedSeries(std::move(v));
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Real& operator[](int k) const { return coeffs_[k]; }
  const std::vector<Real>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Real> v(n);
    for (int k = 0; k < n; ++k) v[k] = a[k] + b[k];
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Real> v(n);
    for (int k = 0; k < n; ++k) v[k] = a[k] - b[k];
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Real> v(n, Real(0));
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < n; ++j) v[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator*(const Real& c, const TruncatedSeries& s) {
    std::vector<Real> v(s.coeffs_);
    for (auto& x : v) x *= c;
    return TruncatedSeries(std::move(v));
  }

 private:
  static std::size_t check_order(int order) {
    if (order < 1) throw InvalidParameter("TruncatedSeries: order must be >= 1");
    return static_cast<std::size_t>(order);
  }

  std::vector<Real> coeffs_;
};

using PowerSeries = TruncatedSeries<OracleReal>;

/// s^gamma by binomial composition: s = c0 (1 + r), (1 + r)^gamma expanded
/// with generalized binomial weights. Throws ZeroConstantTerm if c0 <= 0.
template <class Real>
TruncatedSeries<Real> series_pow(const TruncatedSeries<Real>& s, const Real& gamma) {
  using std::pow;
  const Real c0 = s[0];
  if (!(c0 > 0)) throw ZeroConstantTerm("series_pow: constant term must be > 0");
  const int n = s.order();
  std::vector<Real> rv(s.coeffs());
  for (auto& x : rv) x /= c0;
  rv[0] = 0;
  const TruncatedSeries<Real> r(std::move(rv));
  std::vector<Real> out(n, Real(0));
  out[0] = 1;
  TruncatedSeries<Real> r_pow = TruncatedSeries<Real>::constant(Real(1), n);
  Real weight(1);
  // r^j starts at w^j, so j < n terms are exact.
  for (int j = 1; j < n; ++j) {
    weight = weight * (gamma - (j - 1)) / j;
    r_pow = r_pow * r;
    if (weight == 0) break;
    for (int k = j; k < n; ++k) out[k] += weight * r_pow[k];
  }
  const Real scale = pow(c0, gamma);
  for (auto& x : out) x *= scale;
  return TruncatedSeries<Real>(std::move(out));
}

/// exp(s) via n e_n = sum_{j=1..n} j s_j e_{n-j}, e_0 = exp(s_0).
template <class Real>
TruncatedSeries<Real> series_exp(const TruncatedSeries<Real>& s) {
  using std::exp;
  const int n = s.order();
  std::vector<Real> e(n, Real(0));
  e[0] = exp(s[0]);
  for (int m = 1; m < n; ++m) {
    Real acc(0);
    for (int j = 1; j <= m; ++j) acc += Real(j) * s[j] * e[m - j];
    e[m] = acc / m;
  }
  return TruncatedSeries<Real>(std::move(e));
}

/// E_beta(s) = sum_n s^n / Gamma(1 + n beta).
///
/// With s_0 = 0 the sum is finite (n < order). Otherwise it runs until the
/// largest coefficient of the term falls below rel_tol times the largest
/// partial coefficient for `stagnation_window` consecutive n.
template <class Real>
TruncatedSeries<Real> series_ml_compose(double beta, const TruncatedSeries<Real>& s,
                                        const SeriesConfig& config = {}) {
  using std::abs;
  if (!(beta > 0 && beta <= 1)) throw InvalidParameter("series_ml_compose: beta must lie in (0, 1]");
  config.validate();
  const int order = s.order();
  std::vector<Real> sum(order, Real(0));
  sum[0] = detail::recip_gamma(Real(1));
  TruncatedSeries<Real> s_pow = TruncatedSeries<Real>::constant(Real(1), order);
  const bool finite = s[0] == 0;
  int small_run = 0;
  for (int n = 1;; ++n) {
    if (finite && n >= order) break;
    if (n > config.max_terms) {
      throw NonConvergence("n", "series_ml_compose: no stagnation within max_terms");
    }
    s_pow = s_pow * s;
    const Real g = detail::recip_gamma(Real(Real(1) + Real(n) * Real(beta)));
    Real term_max(0), sum_max(0);
    for (int k = 0; k < order; ++k) {
      const Real term = g * s_pow[k];
      sum[k] += term;
      term_max = std::max(term_max, Real(abs(term)));
      sum_max = std::max(sum_max, Real(abs(sum[k])));
    }
    if (finite) continue;
    if (term_max <= Real(config.rel_tol) * sum_max + Real(config.abs_tol)) {
      if (++small_run >= config.stagnation_window) break;
    } else {
      small_run = 0;
    }
  }
  return TruncatedSeries<Real>(std::move(sum));
}

/// Coefficients of w^0..w^{k_max} of the closed-form transform of `family`,
/// the independent oracle for the series PMFs.
///
/// The transform is built with k_max + 9 coefficients (8 guard terms) and
/// evaluated at successively higher precision until two rungs agree to 35
/// digits. Families without a closed form in w (tempered_tsfpp) throw
/// InvalidParameter.
std::vector<OracleReal> extract_pmf(Family family, const ModelParams& params, int k_max,
                                    double t);

// Convenience: the same family that classify() picks for `params`.
std::vector<OracleReal> extract_pmf(const ModelParams& params, int k_max, double t);

/// Transform of a finite sequence, order = seq.size().
PowerSeries ztransform_of(const std::vector<double>& seq);

/// Verifies Z[f(k-m)] = w^m F and Z[f(k+m)] = (F - sum_{j<m} f(j) w^j) / w^m
/// coefficient-wise in exact truncated arithmetic.
bool shift_identity_check(const std::vector<double>& seq, int m);

}  // namespace fracpoisson

#endif  // FRACPOISSON_ZTRANS_HPP
