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


#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/fracderiv.hpp"
#include "fracpoisson/specfun.hpp"

namespace fracpoisson {
namespace {

TimeGridFn sample(double h, std::size_t n, auto&& f) {
  TimeGridFn g;
  g.h = h;
  g.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.values[i] = f(static_cast<double>(i) * h);
  g.f0 = g.values[0];
  return g;
}

// Caputo derivative from its integral definition, (1/Gamma(1-b)) int_0^t f'(t-x) x^{-b} dx.
// Substituting x = y^{1/(1-b)} removes the kernel singularity.
double caputo_quadrature(auto&& fprime, double beta, double t) {
  boost::math::quadrature::tanh_sinh<double> q;
  const double p = 1 / (1 - beta);
  const double integral =
      q.integrate([&](double y) { return fprime(t - std::pow(y, p)) * p; }, 0.0, std::pow(t, 1 - beta));
  return integral / std::tgamma(1 - beta);
}

TEST(GlWeights, Recurrence) {
  const auto w = gl_weights(0.5, 6);
  ASSERT_EQ(w.size(), 6u);
  EXPECT_EQ(w[0], 1.0);
  EXPECT_DOUBLE_EQ(w[1], -0.5);
  EXPECT_DOUBLE_EQ(w[2], -0.125);
  for (std::size_t j = 1; j < w.size(); ++j) {
    EXPECT_NEAR(w[j], w[j - 1] * (1 - 1.5 / j), 1e-16);
  }
}

TEST(CaputoDerivative, AnnihilatesConstants) {
  const auto d = caputo_derivative(sample(0.01, 200, [](double) { return 3.0; }), 0.5);
  for (double v : d.values) EXPECT_NEAR(v, 0.0, 1e-13);
}

TEST(CaputoDerivative, LinearFunction) {
  const double h = 1.0 / 512;
  const auto d = caputo_derivative(sample(h, 1025, [](double t) { return t; }), 0.5);
  for (std::size_t i = 64; i < d.values.size(); i += 37) {
    const double t = d.t(i);
    const double exact = std::sqrt(t) / std::tgamma(1.5);
    EXPECT_NEAR(d.values[i], exact, 2 * h) << t;
    EXPECT_NEAR(caputo_quadrature([](double) { return 1.0; }, 0.5, t), exact, 1e-10);
  }
}

TEST(CaputoDerivative, SineAgainstQuadrature) {
  const double h = 1.0 / 512;
  const double beta = 0.3;
  const auto d = caputo_derivative(sample(h, 1025, [](double t) { return std::sin(t); }), beta);
  for (std::size_t i = 128; i < d.values.size(); i += 128) {
    const double ref = caputo_quadrature([](double s) { return std::cos(s); }, beta, d.t(i));
    EXPECT_NEAR(d.values[i], ref, 2 * h) << d.t(i);
  }
}

TEST(CaputoDerivative, MittagLefflerEigenfunction) {
  const double h = 1.0 / 1024;
  const double beta = 0.5;
  const auto f = sample(h, 2049, [&](double t) { return mittag_leffler(beta, 1, -std::pow(t, beta)); });
  const auto d = caputo_derivative(f, beta);
  for (std::size_t i = 205; i < d.values.size(); i += 50) {
    EXPECT_NEAR(d.values[i], -f.values[i], 5e-3) << d.t(i);
  }
}

TEST(CaputoDerivative, OrderOneIsCentralDifference) {
  const double h = 0.01;
  const auto d = caputo_derivative(sample(h, 300, [](double t) { return std::sin(t); }), 1.0);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    EXPECT_NEAR(d.values[i], std::cos(d.t(i)), 1e-4) << i;
  }
}

TEST(CaputoDerivative, RejectsCoarseGridAndBadOrder) {
  EXPECT_THROW(caputo_derivative(sample(0.1, 7, [](double t) { return t; }), 0.5), GridTooCoarse);
  EXPECT_THROW(caputo_derivative(sample(0.1, 20, [](double t) { return t; }), 1.5), InvalidParameter);
}

TEST(TemperedCaputo, AnnihilatesConstants) {
  // The exact value is 0. Away from t = 0 the scheme is first order, so halving h
  // halves the error; near t = 0 the kernel singularity limits it to O(h^{1-beta}).
  const auto err = [](double h) {
    const auto n = static_cast<std::size_t>(2 / h) + 1;
    const auto d = caputo_tempered_derivative(sample(h, n, [](double) { return 2.0; }), 0.5, 1);
    double worst = 0;
    for (std::size_t i = 1; i < d.values.size(); ++i) {
      if (d.t(i) >= 0.25) worst = std::max(worst, std::abs(d.values[i]));
    }
    return worst;
  };
  const double coarse = err(1.0 / 256), fine = err(1.0 / 512);
  EXPECT_LT(coarse, 2.0 / 256);
  EXPECT_LT(fine, 0.6 * coarse);
}

TEST(TemperedCaputo, NoTemperingMatchesCaputo) {
  const double h = 1.0 / 256;
  const auto f = sample(h, 513, [](double t) { return t; });
  const auto a = caputo_tempered_derivative(f, 0.5, 0);
  const auto b = caputo_derivative(f, 0.5);
  for (std::size_t i = 1; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 2 * h);
}

TEST(TemperedCaputo, TemperedExponentialEigenfunction) {
  // f = e^{-nu t} t gives e^{-nu t} D^b t - nu^b f - 0 = e^{-nu t} t^{1-b}/Gamma(2-b) - nu^b f.
  const double h = 1.0 / 512, beta = 0.6, nu = 1.5;
  const auto f = sample(h, 1025, [&](double t) { return std::exp(-nu * t) * t; });
  const auto d = caputo_tempered_derivative(f, beta, nu);
  for (std::size_t i = 64; i < d.values.size(); i += 61) {
    const double t = d.t(i);
    const double ref = std::exp(-nu * t) * std::pow(t, 1 - beta) / std::tgamma(2 - beta) -
                       std::pow(nu, beta) * f.values[i];
    EXPECT_NEAR(d.values[i], ref, 4 * h) << t;
  }
}

TEST(FractionalShift, DeltaColumn) {
  const std::vector<double> delta = {1, 0, 0, 0, 0, 0};
  const auto one = fractional_shift(delta, 1, 0, 1);
  EXPECT_NEAR(one[0], 1, 1e-15);
  EXPECT_NEAR(one[1], -1, 1e-15);
  for (int k = 2; k < 6; ++k) EXPECT_NEAR(one[k], 0, 1e-15);
  const auto half = fractional_shift(delta, 0.5, 0, 1);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(half[k], (k % 2 ? -1 : 1) * gen_binomial(0.5, k), 1e-15);
}

TEST(FractionalShift, TemperedAgainstBinomialExpansion) {
  // (mu + lambda(1-B))^a - mu^a on a geometric column, expanded directly.
  const double a = 0.7, mu = 0.4, lambda = 2;
  std::vector<double> col(10);
  for (int k = 0; k < 10; ++k) col[k] = std::pow(0.5, k + 1);
  const auto got = fractional_shift(col, a, mu, lambda);
  for (int k = 0; k < 10; ++k) {
    double ref = -std::pow(mu, a) * col[k];
    for (int j = 0; j <= k; ++j) {
      ref += std::pow(mu + lambda, a - j) * std::pow(-lambda, j) * gen_binomial(a, j) * col[k - j];
    }
    EXPECT_NEAR(got[k], ref, 1e-14) << k;
  }
}

TEST(GegenbauerShift, DeltaGivesGegenbauerPolynomials) {
  const double d = 0.25, u = 0.5;
  std::vector<double> delta(12, 0.0);
  delta[0] = 1;
  const auto got = gegenbauer_shift(delta, d, u);
  // C_n^{(l)}(u) by the three-term recurrence with l = -d.
  const double l = -d;
  std::vector<double> c = {1.0, 2 * l * u};
  for (int n = 2; n < 12; ++n) {
    c.push_back((2 * u * (n + l - 1) * c[n - 1] - (n + 2 * l - 2) * c[n - 2]) / n);
  }
  for (int k = 0; k < 12; ++k) EXPECT_NEAR(got[k], c[k], 1e-15) << k;
  EXPECT_NEAR(got[2], 0.15625, 1e-16);
}

TEST(GegenbauerShift, UnitAngleIsSquaredShift) {
  std::vector<double> col = {0.3, 0.2, 0.1, 0.05, 0.01, 0.0, 0.2};
  const auto a = gegenbauer_shift(col, 0.35, 1);
  const auto b = fractional_shift(col, 0.7, 0, 1);
  for (std::size_t k = 0; k < col.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-15);
}

}  // namespace
}  // namespace fracpoisson
