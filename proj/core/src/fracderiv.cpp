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

#include "fracpoisson/fracderiv.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "fracpoisson/errors.hpp"

namespace fracpoisson {

namespace {

constexpr std::size_t kMinPoints = 8;

void check_grid(const TimeGridFn& f) {
  if (f.values.size() < kMinPoints) {
    throw GridTooCoarse("fractional derivative needs at least 8 grid points");
  }
  if (!(f.h > 0) || !std::isfinite(f.h)) throw InvalidParameter("grid step h must be > 0");
}

// h^{-beta} sum_j w_j g(t_{i-j}) for every i.
std::vector<double> grunwald(const std::vector<double>& g, double beta, double h) {
  const std::size_t n = g.size();
  const std::vector<double> w = gl_weights(beta, n);
  const double scale = std::pow(h, -beta);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j <= i; ++j) acc += static_cast<long double>(w[j]) * g[i - j];
    out[i] = static_cast<double>(acc) * scale;
  }
  return out;
}

// Coefficients of (1 - 2uw + w^2)^gamma up to w^{n-1}.
std::vector<long double> gegenbauer_coefficients(long double gamma, long double u, std::size_t n) {
  std::vector<long double> c(n, 0.0L);
  if (n == 0) return c;
  c[0] = 1.0L;
  if (n > 1) c[1] = -2.0L * u * gamma;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    const long double mm = static_cast<long double>(m);
    c[m + 1] = (2.0L * u * (mm - gamma) * c[m] - (mm - 1.0L - 2.0L * gamma) * c[m - 1]) / (mm + 1.0L);
  }
  return c;
}

std::vector<double> convolve(const std::vector<long double>& a, const std::vector<double>& p) {
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * p[k - j];
    out[k] = static_cast<double>(acc);
  }
  return out;
}

}  // namespace

std::vector<double> gl_weights(double beta, std::size_t n) {
  std::vector<double> w(n, 0.0);
  if (n == 0) return w;
  w[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    w[j] = w[j - 1] * (1.0 - (beta + 1.0) / static_cast<double>(j));
  }
  return w;
}

TimeGridFn caputo_derivative(const TimeGridFn& f, double beta) {
  check_grid(f);
  if (!(beta > 0 && beta <= 1)) throw InvalidParameter("caputo_derivative: beta must lie in (0, 1]");
  TimeGridFn out{f.h, {}, 0.0};
  const std::size_t n = f.values.size();
  const auto& v = f.values;
  if (beta == 1.0) {
    out.values.resize(n);
    out.values[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * f.h);
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * f.h);
    out.values[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * f.h);
  } else {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = v[i] - f.f0;
    out.values = grunwald(g, beta, f.h);
    out.values[0] = 0.0;
  }
  out.f0 = out.values[0];
  return out;
}

TimeGridFn caputo_tempered_derivative(const TimeGridFn& f, double beta, double nu) {
  check_grid(f);
  if (!(beta > 0 && beta < 1)) {
    throw InvalidParameter("caputo_tempered_derivative: beta must lie in (0, 1)");
  }
  if (!(nu >= 0) || !std::isfinite(nu)) {
    throw InvalidParameter("caputo_tempered_derivative: nu must be >= 0");
  }
  const std::size_t n = f.values.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(nu * f.t(i)) * f.values[i] - f.f0;
  const std::vector<double> rl = grunwald(g, beta, f.h);
  const double gamma_1mb = std::tgamma(1.0 - beta);
  const double nu_beta = std::pow(nu, beta);
  TimeGridFn out{f.h, std::vector<double>(n, 0.0), 0.0};
  for (std::size_t i = 1; i < n; ++i) {
    const double t = f.t(i);
    const double t_mb = std::pow(t, -beta);
    const double decay = std::exp(-nu * t);
    // D^beta of the constant f0 is f0 t^{-beta} / Gamma(1 - beta).
    const double tempered_rl = decay * (rl[i] + f.f0 * t_mb / gamma_1mb) - nu_beta * f.values[i];
    double tail = t_mb * decay;
    if (nu > 0) tail -= nu_beta * boost::math::tgamma(1.0 - beta, nu * t);
    tail /= gamma_1mb;
    out.values[i] = tempered_rl - f.f0 * tail;
  }
  return out;
}

std::vector<double> fractional_shift(const std::vector<double>& column, double alpha, double mu,
                                     double lambda) {
  if (!(alpha > 0 && alpha <= 1)) throw InvalidParameter("fractional_shift: alpha must lie in (0, 1]");
  if (!(mu >= 0)) throw InvalidParameter("fractional_shift: mu must be >= 0");
  if (!(lambda > 0)) throw InvalidParameter("fractional_shift: lambda must be > 0");
  const std::size_t n = column.size();
  std::vector<long double> a(n, 0.0L);
  if (n == 0) return {};
  const long double al = alpha;
  const long double q = static_cast<long double>(lambda) / (static_cast<long double>(mu) + lambda);
  a[0] = std::pow(static_cast<long double>(mu) + lambda, al);
  for (std::size_t j = 1; j < n; ++j) {
    a[j] = a[j - 1] * (static_cast<long double>(j) - 1.0L - al) / static_cast<long double>(j) * q;
  }
  a[0] -= mu == 0.0 ? 0.0L : std::pow(static_cast<long double>(mu), al);
  return convolve(a, column);
}

std::vector<double> gegenbauer_shift(const std::vector<double>& column, double d, double u) {
  if (!(d > 0)) throw InvalidParameter("gegenbauer_shift: d must be > 0");
  if (!(std::fabs(u) <= 1)) throw InvalidParameter("gegenbauer_shift: |u| must be <= 1");
  return convolve(gegenbauer_coefficients(d, u, column.size()), column);
}

}  // namespace fracpoisson
