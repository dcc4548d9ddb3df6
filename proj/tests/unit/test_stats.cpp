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


#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fracpoisson/stats.hpp"

namespace fracpoisson::stats {
namespace {

TEST(TvDistance, HalfL1) {
  EXPECT_DOUBLE_EQ(tv_distance({0.5, 0.5}, {0.25, 0.75}), 0.25);
  EXPECT_EQ(tv_distance({0.2, 0.8}, {0.2, 0.8}), 0.0);
  EXPECT_DOUBLE_EQ(tv_distance({1.0}, {0.5, 0.5}), 0.25);
}

TEST(Moments, SmallSample) {
  const Moments m = moments(std::vector<double>{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
  EXPECT_NEAR(m.mean_se, std::sqrt(5.0 / 3.0 / 4), 1e-15);
  const Moments mi = moments(std::vector<std::int64_t>{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(mi.mean, 2.5);
}

TEST(KsTwoSample, SameAndShiftedDistributions) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> n(0, 1);
  std::vector<double> a(5000), b(5000), c(5000);
  for (auto& x : a) x = n(gen);
  for (auto& x : b) x = n(gen);
  for (auto& x : c) x = n(gen) + 0.2;
  EXPECT_GT(ks_two_sample(a, b).p_value, 0.01);
  EXPECT_LT(ks_two_sample(a, c).p_value, 1e-6);
}

TEST(ChiSquare, GoodnessOfFit) {
  std::mt19937_64 gen(2);
  std::poisson_distribution<int> pois(3.0);
  std::vector<std::int64_t> counts(20000);
  for (auto& x : counts) x = pois(gen);
  std::vector<double> probs;
  double p = std::exp(-3.0);
  for (int k = 0; k <= 15; ++k) {
    probs.push_back(p);
    p *= 3.0 / (k + 1);
  }
  EXPECT_GT(chi_square_gof(counts, probs).p_value, 0.01);
  std::vector<double> wrong(probs.size());
  p = std::exp(-3.3);
  for (int k = 0; k <= 15; ++k) {
    wrong[k] = p;
    p *= 3.3 / (k + 1);
  }
  EXPECT_LT(chi_square_gof(counts, wrong).p_value, 1e-6);
}

TEST(ChiSquare, TwoSample) {
  std::mt19937_64 gen(3);
  std::poisson_distribution<int> a(2.0), b(2.0), c(2.4);
  std::vector<std::int64_t> x(10000), y(10000), z(10000);
  for (auto& v : x) v = a(gen);
  for (auto& v : y) v = b(gen);
  for (auto& v : z) v = c(gen);
  EXPECT_GT(chi_square_two_sample(x, y).p_value, 0.01);
  EXPECT_LT(chi_square_two_sample(x, z).p_value, 1e-6);
}

}  // namespace
}  // namespace fracpoisson::stats
