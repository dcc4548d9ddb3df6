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


#ifndef FRACPOISSON_STATS_HPP
#define FRACPOISSON_STATS_HPP

#include <cstdint>
#include <vector>

namespace fracpoisson::stats {

/// Half the l1 distance over the common index range.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;       // unbiased
  double mean_se = 0.0;        // standard error of the mean
  double variance_se = 0.0;    // from the fourth central moment
};

Moments moments(const std::vector<double>& x);
Moments moments(const std::vector<std::int64_t>& x);

struct TestResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Pearson chi-square goodness of fit of integer counts against `probs`
/// (index = value). Cells with expected count below `min_expected` are pooled
/// with their neighbours, and the tail beyond probs.size() forms one cell.
TestResult chi_square_gof(const std::vector<std::int64_t>& counts, const std::vector<double>& probs,
                          double min_expected = 5.0);

/// Two-sample chi-square homogeneity test on integer samples.
TestResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b, double min_expected = 5.0);

}  // namespace fracpoisson::stats

#endif  // FRACPOISSON_STATS_HPP
