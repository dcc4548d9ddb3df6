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

#include <gtest/gtest.h>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/simulate.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/stats.hpp"

namespace fracpoisson {
namespace {

std::vector<double> draws(int n, const RngSpec& spec, auto&& one) {
  Xoshiro256 rng = Xoshiro256::for_stream(spec);
  std::vector<double> out(n);
  for (auto& x : out) x = one(rng);
  return out;
}

TEST(Xoshiro, StreamsAreReproducibleAndDistinct) {
  Xoshiro256 a = Xoshiro256::for_stream({7, 0});
  Xoshiro256 b = Xoshiro256::for_stream({7, 0});
  Xoshiro256 c = Xoshiro256::for_stream({7, 1});
  EXPECT_EQ(a, b);
  EXPECT_NE(a(), c());
  EXPECT_EQ(b(), Xoshiro256::for_stream({7, 0})());
}

TEST(Xoshiro, UniformOpenStaysInside) {
  Xoshiro256 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(SampleStable, HalfOrderIsLevy) {
  // S_{1/2}(1) has CDF erfc(1 / (2 sqrt(x))).
  const auto x = draws(200000, {11, 0}, [](Xoshiro256& r) { return sample_stable(0.5, 1, r); });
  for (double q : {0.25, 1.0, 4.0}) {
    const double p = static_cast<double>(std::count_if(x.begin(), x.end(),
                                                       [q](double v) { return v <= q; })) /
                     x.size();
    const double ref = std::erfc(0.5 / std::sqrt(q));
    EXPECT_NEAR(p, ref, 4 * std::sqrt(ref * (1 - ref) / x.size())) << q;
  }
}

TEST(SampleStable, OrderOneIsDeterministic) {
  Xoshiro256 rng(1);
  EXPECT_EQ(sample_stable(1.0, 2.5, rng), 2.5);
}

TEST(SampleStable, SelfSimilarity) {
  auto a = draws(50000, {5, 0}, [](Xoshiro256& r) { return sample_stable(0.9, 2, r); });
  for (auto& v : a) v /= std::pow(2.0, 1 / 0.9);
  const auto b = draws(50000, {5, 1}, [](Xoshiro256& r) { return sample_stable(0.9, 1, r); });
  EXPECT_GT(stats::ks_two_sample(a, b).p_value, 0.01);
}

TEST(SampleTemperedStable, Moments) {
  const double alpha = 0.6, mu = 1.5, t = 3;
  const auto x = draws(100000, {9, 0},
                       [&](Xoshiro256& r) { return sample_tempered_stable(alpha, mu, t, r); });
  const auto m = stats::moments(x);
  EXPECT_NEAR(m.mean, alpha * std::pow(mu, alpha - 1) * t, 4 * m.mean_se);
  EXPECT_NEAR(m.variance, alpha * (1 - alpha) * std::pow(mu, alpha - 2) * t, 4 * m.variance_se);
}

TEST(SampleTemperedStable, NoTemperingMatchesStable) {
  const auto a = draws(50000, {4, 0}, [](Xoshiro256& r) { return sample_tempered_stable(0.6, 0, 1, r); });
  const auto b = draws(50000, {4, 1}, [](Xoshiro256& r) { return sample_stable(0.6, 1, r); });
  EXPECT_GT(stats::ks_two_sample(a, b).p_value, 0.01);
}

TEST(SampleInverseSubordinator, MeanAndLaplace) {
  const auto y = draws(100000, {2, 0},
                       [](Xoshiro256& r) { return sample_inverse_subordinator(0.5, 0, 1, r); });
  const auto m = stats::moments(y);
  EXPECT_NEAR(m.mean, 1 / std::tgamma(1.5), 4 * m.mean_se);
  std::vector<double> e(y.size());
  std::transform(y.begin(), y.end(), e.begin(), [](double v) { return std::exp(-v); });
  const auto me = stats::moments(e);
  EXPECT_NEAR(me.mean, mittag_leffler(0.5, 1, -1), 4 * me.mean_se);
}

TEST(SampleInverseSubordinator, PositiveAndMonotoneInT) {
  Xoshiro256 a = Xoshiro256::for_stream({8, 0});
  for (int i = 0; i < 1000; ++i) EXPECT_GT(sample_inverse_subordinator(0.7, 1, 1, a), 0.0);
}

TEST(SubordinatorPath, NonDecreasingFromZero) {
  Xoshiro256 rng(12);
  std::vector<double> times;
  for (int i = 0; i <= 200; ++i) times.push_back(0.01 * i);
  const PathGrid path = sample_subordinator_path(0.7, 0.5, times, rng);
  ASSERT_EQ(path.values.size(), times.size());
  EXPECT_EQ(path.values.front(), 0.0);
  EXPECT_TRUE(std::is_sorted(path.values.begin(), path.values.end()));
}

TEST(SampleProcess, PoissonMean) {
  const SampleSet set = sample_process({2, 1, 1, 0, 0}, 1, 100000, {7, 0});
  const auto m = stats::moments(set.counts);
  EXPECT_NEAR(m.mean, 2, 4 * m.mean_se);
}

TEST(SampleProcess, TemperedSfppMoments) {
  const double lambda = 2, alpha = 0.6, mu = 1.5, t = 3;
  const SampleSet set = sample_process({lambda, alpha, 1, mu, 0}, t, 100000, {7, 1});
  const auto m = stats::moments(set.counts);
  const double mean = lambda * alpha * std::pow(mu, alpha - 1) * t;
  const double var = mean + lambda * lambda * alpha * (1 - alpha) * std::pow(mu, alpha - 2) * t;
  EXPECT_NEAR(m.mean, mean, 4 * m.mean_se);
  EXPECT_NEAR(m.variance, var, 4 * m.variance_se);
}

TEST(SampleProcess, MatchesTsfppSeries) {
  const SampleSet set = sample_process({1, 0.7, 0.8, 0, 0}, 1, 100000, {3, 0});
  const auto emp = empirical_pmf(set, 30);
  const PmfTable table = pmf_table(ProcessParams{1, 0.7, 0.8, 0, 0}, 30, {1.0});
  EXPECT_LT(stats::tv_distance(emp, table.columns[0].p), 0.01);
}

TEST(SampleProcess, DeterministicForSameSeed) {
  const ProcessParams p{1, 0.6, 0.7, 0.5, 0.5};
  const SampleSet a = sample_process(p, 1, 20000, {42, 3});
  const SampleSet b = sample_process(p, 1, 20000, {42, 3});
  const SampleSet c = sample_process(p, 1, 20000, {43, 3});
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_NE(a.counts, c.counts);
}

TEST(SampleProcess, RejectsBadArguments) {
  EXPECT_THROW(sample_process({1, 1, 1, 0, 0}, -1, 10, {}), InvalidParameter);
  EXPECT_THROW(sample_process({1, 1.5, 1, 0, 0}, 1, 10, {}), InvalidParameter);
}

TEST(Renewal, ExponentialWaitsArePoisson) {
  const SampleSet set = sample_tfpp_renewal(1, 1, 2, 100000, {6, 0});
  std::vector<double> probs;
  for (int k = 0; k <= 15; ++k) probs.push_back(poisson_pmf(1, k, 2));
  EXPECT_GT(stats::chi_square_gof(set.counts, probs).p_value, 0.01);
}

TEST(Renewal, MatchesTfppSeries) {
  const SampleSet set = sample_tfpp_renewal(1, 0.5, 1, 100000, {6, 1});
  const auto emp = empirical_pmf(set, 40);
  std::vector<double> ref;
  for (int k = 0; k <= 40; ++k) ref.push_back(tfpp_pmf(1, 0.5, k, 1));
  EXPECT_LT(stats::tv_distance(emp, ref), 0.01);
  const double p0 = emp[0];
  const double e = mittag_leffler(0.5, 1, -1);
  EXPECT_NEAR(p0, e, 4 * std::sqrt(e * (1 - e) / set.n));
}

TEST(EmpiricalPmf, DropsMassAboveKmax) {
  SampleSet set;
  set.counts = {0, 1, 1, 5};
  set.n = 4;
  const auto p = empirical_pmf(set, 2);
  EXPECT_EQ(p, (std::vector<double>{0.25, 0.5, 0.0}));
}

TEST(StableDensitySeries, IntegratesLevyDensity) {
  // alpha = 1/2: density (2 sqrt(pi))^{-1} x^{-3/2} e^{-1/(4x)}.
  for (double x : {2.0, 5.0, 10.0}) {
    const double ref = std::exp(-1 / (4 * x)) / (2 * std::sqrt(M_PI) * std::pow(x, 1.5));
    EXPECT_NEAR(stable_density_series(0.5, x), ref, 1e-12) << x;
  }
}

}  // namespace
}  // namespace fracpoisson
