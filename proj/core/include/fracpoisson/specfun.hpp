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

#ifndef FRACPOISSON_SPECFUN_HPP
#define FRACPOISSON_SPECFUN_HPP

#include "fracpoisson/series_config.hpp"

namespace fracpoisson {

/// Generalized binomial coefficient Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1)).
///
/// Uses the reciprocal-gamma convention 1/Gamma(-n) = 0, so the result is
/// exactly 0 when a is a non-negative integer smaller than k. Small k goes
/// through the falling product; large k through log-gamma with sign tracking.
double gen_binomial(double a, int k);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
double pochhammer(double x, int k);

/// Two-parameter Mittag-Leffler function E_{a,b}(z) = sum z^n / Gamma(a n + b).
///
/// Summed in long double first and re-summed in MPFR when the alternating
/// cancellation is too strong for the result to hold ~15 significant digits.
/// Throws NonConvergence when `config.max_terms` is reached.
double mittag_leffler(double a, double b, double z, const SeriesConfig& config = {});

/// Prabhakar function M^c_{a,b}(z) = sum (c)_n / Gamma(a n + b) z^n / n!.
double prabhakar_ml(double a, double b, double c, double z,
                    const SeriesConfig& config = {});

}  // namespace fracpoisson

#endif  // FRACPOISSON_SPECFUN_HPP
