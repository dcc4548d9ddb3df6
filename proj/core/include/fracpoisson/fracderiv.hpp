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


#ifndef FRACPOISSON_FRACDERIV_HPP
#define FRACPOISSON_FRACDERIV_HPP

#include <cstddef>
#include <vector>

namespace fracpoisson {

/// Samples of f on the uniform grid t_i = i h, i = 0..n-1, with f0 = f(0).
struct TimeGridFn {
  double h = 0.0;
  std::vector<double> values;
  double f0 = 0.0;

  double t(std::size_t i) const { return static_cast<double>(i) * h; }
};

/// Grunwald-Letnikov weights w_j = (-1)^j C(beta, j) for j < n.
std::vector<double> gl_weights(double beta, std::size_t n);

/// Caputo derivative of order beta in (0, 1] on the grid.
///
/// For beta < 1: first-order Grunwald-Letnikov approximation of the
/// Riemann-Liouville derivative of f - f0. beta = 1: central differences
/// (second-order one-sided at the ends). Entry 0 is 0 for beta < 1.
/// Throws GridTooCoarse with fewer than 8 points.
TimeGridFn caputo_derivative(const TimeGridFn& f, double beta);

/// Tempered Caputo derivative
///   e^{-nu t} D^beta[e^{nu t} f](t) - nu^beta f(t) - f0 Pi(t),
/// Pi(t) = (t^{-beta} e^{-nu t} - nu^beta Gamma(1 - beta, nu t)) / Gamma(1 - beta)
/// being the tail of the tempered Levy measure. The Riemann-Liouville part
/// splits off the constant f0, whose derivative is exact, and applies
/// Grunwald-Letnikov to the remainder. Entry 0 is 0.
TimeGridFn caputo_tempered_derivative(const TimeGridFn& f, double beta, double nu);

/// ((mu + lambda (1 - B))^alpha - mu^alpha) applied to P(0..K), with
/// P(k) = 0 for k < 0. Uses the coefficients
/// (mu + lambda)^alpha C(alpha, j) (-q)^j, q = lambda / (mu + lambda).
std::vector<double> fractional_shift(const std::vector<double>& column, double alpha, double mu,
                                     double lambda);

/// (1 - 2uB + B^2)^d applied to P(0..K).
std::vector<double> gegenbauer_shift(const std::vector<double>& column, double d, double u);

}  // namespace fracpoisson

#endif  // FRACPOISSON_FRACDERIV_HPP
