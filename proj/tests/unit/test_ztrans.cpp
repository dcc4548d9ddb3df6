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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/ztrans.hpp"

namespace fracpoisson {
namespace {

using R = OracleReal;
using S = PowerSeries;

constexpr int kOrder = 12;

S one_minus_w() { return S::linear(R(1), R(-1), kOrder); }

double at(const S& s, int k) { return static_cast<double>(s[k]); }

TEST(SeriesPow, IdentityPower) {
  const S p = series_pow(one_minus_w(), R(1));
  EXPECT_EQ(at(p, 0), 1.0);
  EXPECT_EQ(at(p, 1), -1.0);
  for (int k = 2; k < kOrder; ++k) EXPECT_EQ(at(p, k), 0.0);
}

TEST(SeriesPow, SquareRootMatchesBinomialCoefficients) {
  const S p = series_pow(one_minus_w(), R(0.5));
  EXPECT_DOUBLE_EQ(at(p, 1), -0.5);
  EXPECT_DOUBLE_EQ(at(p, 2), -0.125);
  EXPECT_DOUBLE_EQ(at(p, 3), -0.0625);
  for (int k = 0; k < kOrder; ++k) {
    EXPECT_NEAR(at(p, k), gen_binomial(0.5, k) * (k % 2 ? -1 : 1), 1e-16);
  }
}

TEST(SeriesPow, PerfectSquareCollapses) {
  const S quad({R(1), R(-2), R(1), R(0), R(0), R(0), R(0), R(0)});
  const S a = series_pow(quad, R(0.35));
  const S b = series_pow(S::linear(R(1), R(-1), 8), R(0.7));
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(at(a, k), at(b, k), 1e-40);
}

TEST(SeriesPow, SquareOfRootRecoversSeries) {
  const S s({R(2), R("0.3"), R(-1), R("0.25"), R(0), R(1), R(0), R(0)});
  const S root = series_pow(s, R("0.5"));
  const S back = root * root;
  for (int k = 0; k < s.order(); ++k) EXPECT_LT(abs(back[k] - s[k]), R("1e-45"));
}

TEST(SeriesPow, RejectsNonPositiveConstantTerm) {
  EXPECT_THROW(series_pow(S::linear(R(0), R(1), 4), R(0.5)), ZeroConstantTerm);
  EXPECT_THROW(series_pow(S::linear(R(-1), R(1), 4), R(0.5)), ZeroConstantTerm);
}

TEST(SeriesExp, Basics) {
  const S zero = S::constant(R(0), kOrder);
  const S e0 = series_exp(zero);
  EXPECT_EQ(at(e0, 0), 1.0);
  for (int k = 1; k < kOrder; ++k) EXPECT_EQ(at(e0, k), 0.0);
  const S e = series_exp(S::linear(R(0), R(3), kOrder));
  double expect = 1;
  for (int k = 0; k < kOrder; ++k) {
    EXPECT_NEAR(at(e, k), expect, 1e-14 * expect);
    expect *= 3.0 / (k + 1);
  }
}

TEST(SeriesExp, ProductRule) {
  // exp(a) exp(b) = exp(a + b) for s = -(1-w)^{1/2}.
  const S s = R(-1) * series_pow(one_minus_w(), R(0.5));
  const S lhs = series_exp(s) * series_exp(s);
  const S rhs = series_exp(s + s);
  for (int k = 0; k < kOrder; ++k) EXPECT_LT(abs(lhs[k] - rhs[k]), R("1e-45"));
}

TEST(SeriesMlCompose, OrderOneIsExp) {
  const S s = R(-2) * series_pow(one_minus_w(), R(0.6));
  const S a = series_ml_compose(1.0, s);
  const S b = series_exp(s);
  for (int k = 0; k < kOrder; ++k) EXPECT_NEAR(at(a, k), at(b, k), 1e-14);
}

TEST(SeriesMlCompose, ZeroArgument) {
  const S a = series_ml_compose(0.5, S::constant(R(0), kOrder));
  EXPECT_EQ(at(a, 0), 1.0);
  for (int k = 1; k < kOrder; ++k) EXPECT_EQ(at(a, k), 0.0);
}

TEST(SeriesMlCompose, TermwiseConstruction) {
  // E_{1/2}(-(1-w)) = sum_k c_k w^k with c_k = E^{(k)}_{1/2}(-1)/k!, built here
  // from the derivative series sum_n (n)_k (-1)^{n-k} / (k! Gamma(n/2+1)).
  const S a = series_ml_compose(0.5, R(-1) * one_minus_w());
  for (int k = 0; k < 6; ++k) {
    double ref = 0;
    for (int n = k; n < 400; ++n) {
      const double log_mag = std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0) -
                             std::lgamma(k + 1.0) - std::lgamma(0.5 * n + 1);
      ref += ((n - k) % 2 ? -1 : 1) * std::exp(log_mag);
    }
    EXPECT_NEAR(at(a, k), ref, 1e-11) << k;
  }
  EXPECT_NEAR(at(a, 0), mittag_leffler(0.5, 1, -1), 1e-15);
}

TEST(SeriesMlCompose, RejectsBadOrder) {
  EXPECT_THROW(series_ml_compose(1.5, one_minus_w()), InvalidParameter);
}

TEST(ExtractPmf, PoissonMasses) {
  const auto p = extract_pmf(Family::sfpp, ProcessParams{1, 1, 1, 0, 0}, 3, 1.0);
  ASSERT_EQ(p.size(), 4u);
  double fact = 1;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) fact *= k;
    EXPECT_NEAR(static_cast<double>(p[k]), std::exp(-1.0) / fact, 1e-16);
  }
}

TEST(ExtractPmf, SfppReference) {
  const auto p = extract_pmf(ProcessParams{1, 0.7, 1, 0, 0}, 10, 1.0);
  EXPECT_NEAR(static_cast<double>(p[3]), 0.064808094886369088, 1e-17);
  EXPECT_NEAR(static_cast<double>(p[10]), 0.0058909641753275207, 1e-18);
}

TEST(ExtractPmf, GegenbauerCollapse) {
  const auto g = extract_pmf(GegenbauerParams{1, 0.35, 1, 1}, 10, 1.0);
  const auto s = extract_pmf(ProcessParams{1, 0.7, 1, 0, 0}, 10, 1.0);
  for (int k = 0; k <= 10; ++k) EXPECT_LT(abs(g[k] - s[k]), R("1e-35"));
}

TEST(ExtractPmf, AgreesWithSeriesPmf) {
  const auto p = extract_pmf(ProcessParams{1, 0.7, 1, 0.5, 0}, 4, 1.0);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_NEAR(static_cast<double>(p[k]), tempered_sfpp_pmf(1, 0.7, 0.5, k, 1), 1e-12);
  }
}

TEST(ExtractPmf, TemperedTsfppHasNoClosedForm) {
  EXPECT_THROW(extract_pmf(Family::tempered_tsfpp, ProcessParams{1, 0.5, 0.5, 1, 1}, 3, 1.0),
               InvalidParameter);
}

TEST(ZtransformOf, Coefficients) {
  const S f = ztransform_of({0.5, 0.25, 0.125});
  EXPECT_EQ(f.order(), 3);
  EXPECT_EQ(at(f, 1), 0.25);
}

TEST(ShiftIdentity, DeltaSequence) {
  EXPECT_TRUE(shift_identity_check({1, 0, 0, 0, 0, 0}, 1));
}

TEST(ShiftIdentity, PoissonColumn) {
  std::vector<double> col;
  for (int k = 0; k < 12; ++k) col.push_back(poisson_pmf(1, k, 1));
  EXPECT_TRUE(shift_identity_check(col, 2));
}

TEST(ShiftIdentity, RandomSequences) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> seq(10);
    for (auto& x : seq) x = u(gen);
    EXPECT_TRUE(shift_identity_check(seq, 3));
  }
}

}  // namespace
}  // namespace fracpoisson
