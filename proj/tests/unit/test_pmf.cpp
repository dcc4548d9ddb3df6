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


#include <array>
#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/specfun.hpp"

namespace fracpoisson {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

// Reference values regenerated by tests/reference/generate.py (mpmath, 60 digits).
constexpr std::array<double, 11> kSfpp07 = {
    0.36787944117144232, 0.25751560882000961, 0.1287578044100048,  0.064808094886369088,
    0.036513567367270531, 0.023090995450208896, 0.015950005355699434, 0.011735027731459336,
    0.00903717181051838,  0.0072010023495909993, 0.0058909641753275207};

constexpr std::array<std::array<double, 11>, 3> kTsfpp0709 = {{
    {0.58261346700863098, 0.2130381444086885, 0.076262064112432787, 0.033665965031973473,
     0.018405547795237912, 0.011664808016875865, 0.0081265475331200638, 0.0060294702694216146,
     0.0046766211857775953, 0.003748635619647494, 0.0030819262901429737},
    {0.37606602142464202, 0.23967128715959453, 0.12580063044775689, 0.066671251126324466,
     0.038606781627394474, 0.024652248279694187, 0.017060270675550875, 0.012542049828215578,
     0.0096441698148021521, 0.0076724917151814224, 0.0062673814300408473},
    {0.18111547029743393, 0.18308016800022068, 0.14570634181271203, 0.1037006076260386,
     0.071559043039993482, 0.049977441397656087, 0.035992742544504744, 0.026852351107207192,
     0.020709645003693303, 0.016439755750619404, 0.013371326867866486},
}};

// TFPP as the double sum (x^k/k!) sum_r (k+r)!/r! (-x)^r / Gamma(beta(k+r)+1), x = lambda t^beta,
// in 50 digits.
double brute_tfpp(double lambda, double beta, int k, double t, int terms = 300) {
  using boost::multiprecision::pow;
  using boost::multiprecision::tgamma;
  const Big x = Big(lambda) * pow(Big(t), Big(beta));
  Big sum = 0, ratio = 1;  // (k+r)!/(k! r!)
  Big xr = 1;
  for (int r = 0; r < terms; ++r) {
    if (r > 0) {
      ratio = ratio * (k + r) / r;
      xr *= -x;
    }
    sum += ratio * xr / tgamma(Big(beta) * (k + r) + 1);
  }
  return static_cast<double>(sum * pow(x, k));
}

TEST(PoissonPmf, Values) {
  EXPECT_EQ(poisson_pmf(1, 0, 0), 1.0);
  EXPECT_EQ(poisson_pmf(1, 3, 0), 0.0);
  EXPECT_NEAR(poisson_pmf(2, 1, 1), 2 * std::exp(-2.0), 1e-16);
  EXPECT_NEAR(poisson_pmf(1, 10, 1), 1.0137771196302975e-07, 1e-20);
}

TEST(PoissonPmf, RejectsBadArguments) {
  EXPECT_THROW(poisson_pmf(-1, 0, 1), InvalidParameter);
  EXPECT_THROW(poisson_pmf(1, -1, 1), InvalidParameter);
  EXPECT_THROW(poisson_pmf(1, 0, -1), InvalidParameter);
}

TEST(TfppPmf, Reductions) {
  EXPECT_NEAR(tfpp_pmf(1, 1, 3, 2), poisson_pmf(1, 3, 2), 1e-15);
  EXPECT_NEAR(tfpp_pmf(1, 0.5, 0, 1), mittag_leffler(0.5, 1, -1), 1e-14);
}

TEST(TfppPmf, AgainstDoubleSum) {
  constexpr std::array<double, 4> kRef = {0.427583576155807, 0.27321201478389857,
                                          0.15437156137190844, 0.07922696894132675};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(brute_tfpp(1, 0.5, k, 1), kRef[k], 1e-15);
    EXPECT_NEAR(tfpp_pmf(1, 0.5, k, 1), kRef[k], 1e-13);
  }
  for (double t : {0.3, 2.0, 4.0}) {
    for (int k : {0, 1, 5}) {
      EXPECT_NEAR(tfpp_pmf(1.5, 0.7, k, t), brute_tfpp(1.5, 0.7, k, t), 1e-12) << k << ' ' << t;
    }
  }
}

TEST(SfppPmf, Reductions) {
  EXPECT_NEAR(sfpp_pmf(1, 0.5, 0, 2), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(sfpp_pmf(1, 1, 4, 1), poisson_pmf(1, 4, 1), 1e-15);
}

TEST(SfppPmf, AgainstGeneratingFunction) {
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(sfpp_pmf(1, 0.7, k, 1), kSfpp07[k], 1e-13) << k;
}

TEST(TsfppPmf, Reductions) {
  EXPECT_NEAR(tsfpp_pmf(1, 0.6, 0.8, 0, 1), 0.3869485786189769, 1e-14);
  EXPECT_NEAR(tsfpp_pmf(1, 0.6, 1, 2, 1), sfpp_pmf(1, 0.6, 2, 1), 1e-15);
  EXPECT_NEAR(tsfpp_pmf(1, 1, 0.6, 2, 1), tfpp_pmf(1, 0.6, 2, 1), 1e-13);
}

TEST(TsfppPmf, AgainstGeneratingFunction) {
  EXPECT_NEAR(tsfpp_pmf(1, 0.5, 0.5, 1, 1), 0.13660600739194928, 1e-13);
  EXPECT_NEAR(tsfpp_pmf(1, 0.5, 0.5, 3, 1), 0.046275567213148059, 1e-13);
}

TEST(TemperedSfppPmf, Reductions) {
  EXPECT_NEAR(tempered_sfpp_pmf(1, 0.5, 0, 2, 1), sfpp_pmf(1, 0.5, 2, 1), 1e-15);
  EXPECT_NEAR(tempered_sfpp_pmf(2, 0.6, 1, 0, 1), std::exp(-(std::pow(3.0, 0.6) - 1)), 1e-13);
  EXPECT_NEAR(tempered_sfpp_pmf(2, 1, 3, 2, 1), poisson_pmf(2, 2, 1), 1e-15);
}

TEST(TemperedSfppPmf, AgainstGeneratingFunction) {
  constexpr std::array<double, 4> kA = {0.49035334609750874, 0.30393436373863451,
                                        0.12458683608897341, 0.047080217830418324};
  constexpr std::array<double, 4> kB = {0.3933002181292002, 0.30412836798204627,
                                        0.15813754913173121, 0.074281224691230003};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(tempered_sfpp_pmf(1, 0.7, 0.5, k, 1), kA[k], 1e-13) << k;
    EXPECT_NEAR(tempered_sfpp_pmf(2, 0.6, 1, k, 1), kB[k], 1e-13) << k;
  }
}

TEST(TemperedSfppPmf, LargeTemperingUsesClosedForm) {
  // mu well above lambda, where the expansion in mu diverges.
  const double total = [] {
    double s = 0;
    for (int k = 0; k <= 60; ++k) s += tempered_sfpp_pmf(1, 0.6, 5, k, 2);
    return s;
  }();
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(TemperedTsfppPmf, Reductions) {
  EXPECT_NEAR(tempered_tsfpp_pmf(1, 0.6, 0.5, 0, 0, 1, 1), tsfpp_pmf(1, 0.6, 0.5, 1, 1), 1e-13);
  EXPECT_NEAR(tempered_tsfpp_pmf(1, 1, 0.5, 0, 0, 0, 1), mittag_leffler(0.5, 1, -1), 1e-13);
  EXPECT_NEAR(tempered_tsfpp_pmf(1, 0.7, 1, 0.5, 2, 2, 1), tempered_sfpp_pmf(1, 0.7, 0.5, 2, 1),
              1e-15);
}

TEST(TemperedTsfppPmf, AgainstLaplaceInversion) {
  constexpr std::array<double, 4> kA = {0.52066877826591151, 0.24418062748760826,
                                        0.11754930102519425, 0.057307331036886078};
  constexpr std::array<double, 3> kB = {0.36991224016956543, 0.31271147514354197,
                                        0.18005733507709494};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(tempered_tsfpp_pmf(1, 0.6, 0.5, 0.5, 0.5, k, 0.5), kA[k], 1e-12) << k;
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(tempered_tsfpp_pmf(1, 0.7, 0.7, 2, 0.5, k, 1.5), kB[k], 1e-12) << k;
  }
}

TEST(GegenbauerPmf, ClosedFormsAndCollapse) {
  const GegenbauerParams g{1, 0.25, 0.5, 1};
  EXPECT_NEAR(gegenbauer_pmf(g, 0, 2), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(gegenbauer_pmf({1, 0.3, 1, 1}, 2, 1), sfpp_pmf(1, 0.6, 2, 1), 1e-14);
}

TEST(GegenbauerPmf, AgainstGeneratingFunction) {
  constexpr std::array<double, 4> kRef = {0.36787944117144232, 0.09196986029286058,
                                          -0.04598493014643029, -0.062271259573291018};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(gegenbauer_pmf({1, 0.25, 0.5, 1}, k, 1), kRef[k], 1e-13);
}

TEST(GegenbauerTsPmf, Reductions) {
  EXPECT_NEAR(gegenbauer_ts_pmf({1, 0.25, 0.5, 1}, 2, 1), gegenbauer_pmf({1, 0.25, 0.5, 1}, 2, 1),
              1e-15);
  EXPECT_NEAR(gegenbauer_ts_pmf({1, 0.3, 1, 0.5}, 1, 1), tsfpp_pmf(1, 0.6, 0.5, 1, 1), 1e-13);
}

TEST(GegenbauerTsPmf, AgainstGeneratingFunction) {
  constexpr std::array<double, 4> kRef = {0.427583576155807, 0.068303003695974641,
                                          -0.033041154724239873, -0.047108327555958645};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(gegenbauer_ts_pmf({1, 0.25, 0.5, 0.5}, k, 1), kRef[k], 1e-13) << k;
  }
}

TEST(CompositePmf, Values) {
  EXPECT_NEAR(composite_shift_pmf(1, 1, 1, 0, 1), std::exp(-2.0), 1e-15);
  constexpr std::array<double, 4> kA = {0.36787944117144232, 0.18393972058572116,
                                        0.09196986029286058, 0.053649085170835339};
  constexpr std::array<double, 4> kB = {0.13533528323661269, 0.16240233988393522,
                                        0.11774169641585304, 0.073622394080717309};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(composite_shift_pmf(0.5, 0.5, 0.5, k, 1), kA[k], 1e-13) << k;
    EXPECT_NEAR(composite_shift_pmf(1, 0.3, 0.9, k, 1), kB[k], 1e-13) << k;
  }
}

TEST(PmfTable, InitialColumnIsDelta) {
  const PmfTable table = pmf_table(ProcessParams{}, 2, {0.0});
  ASSERT_EQ(table.columns.size(), 1u);
  EXPECT_EQ(table.columns[0].p, (std::vector<double>{1, 0, 0}));
}

TEST(PmfTable, SfppOfOrderOneIsPoisson) {
  const PmfTable table = pmf_table(ProcessParams{1, 1, 1, 0, 0}, 5, {1.0});
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(table.value(k, 0), poisson_pmf(1, k, 1), 1e-15);
}

TEST(PmfTable, TsfppGrid) {
  const std::vector<double> t = {0.5, 1, 2};
  const PmfTable table = pmf_table(ProcessParams{1, 0.7, 0.9, 0, 0}, 10, t);
  EXPECT_EQ(table.family, Family::tsfpp);
  ASSERT_EQ(table.columns.size(), 3u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ASSERT_EQ(table.columns[i].p.size(), 11u);
    ASSERT_EQ(table.columns[i].terms_used.size(), 11u);
    for (int k = 0; k <= 10; ++k) EXPECT_NEAR(table.value(k, i), kTsfpp0709[i][k], 1e-13);
  }
}

TEST(PmfTable, ExplicitFamilyRunsItsOwnSeries) {
  const ModelParams params = ProcessParams{1, 0.6, 0.5, 0, 0};
  const PmfTable a = pmf_table(Family::tempered_tsfpp, params, 6, {1.0});
  const PmfTable b = pmf_table(Family::tsfpp, params, 6, {1.0});
  EXPECT_EQ(a.family, Family::tempered_tsfpp);
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(a.value(k, 0), b.value(k, 0), 1e-13);
  EXPECT_THROW(pmf_table(Family::gegenbauer, params, 3, {1.0}), InvalidParameter);
}

TEST(PmfTable, RejectsUnorderedGrid) {
  EXPECT_THROW(pmf_table(ProcessParams{}, 3, {1.0, 0.5}), InvalidParameter);
  EXPECT_THROW(pmf_table(ProcessParams{}, 3, {1.0, 1.0}), InvalidParameter);
}

TEST(PmfTable, ColumnsSumBelowOne) {
  const PmfTable table = pmf_table(ProcessParams{2, 0.6, 0.7, 0.5, 0.5}, 40, {0.5, 2});
  for (const auto& col : table.columns) {
    double s = 0;
    for (double p : col.p) {
      EXPECT_GE(p, 0.0);
      s += p;
    }
    EXPECT_LE(s, 1.0 + 1e-12);
    EXPECT_GT(s, 0.5);
    EXPECT_FALSE(col.levels.empty());
  }
}

TEST(PmfTable, TermCapRaisesNonConvergence) {
  SeriesConfig config;
  config.max_terms = 4;
  EXPECT_THROW(pmf_table(ProcessParams{1, 0.7, 0.9, 0, 0}, 3, {1.0}, config), NonConvergence);
}

TEST(Classify, PicksSliceFamily) {
  EXPECT_EQ(classify(ProcessParams{1, 1, 1, 0, 0}), Family::poisson);
  EXPECT_EQ(classify(ProcessParams{1, 1, 0.5, 0, 0}), Family::tfpp);
  EXPECT_EQ(classify(ProcessParams{1, 0.5, 1, 0, 0}), Family::sfpp);
  EXPECT_EQ(classify(ProcessParams{1, 0.5, 0.5, 0, 0}), Family::tsfpp);
  EXPECT_EQ(classify(ProcessParams{1, 0.5, 1, 1, 3}), Family::tempered_sfpp);
  EXPECT_EQ(classify(ProcessParams{1, 1, 1, 2, 3}), Family::poisson);
  EXPECT_EQ(classify(ProcessParams{1, 0.5, 0.5, 0, 1}), Family::tempered_tsfpp);
}

TEST(Validate, RejectsOutOfRangeParameters) {
  EXPECT_THROW(ProcessParams({0, 1, 1, 0, 0}).validate(), InvalidParameter);
  EXPECT_THROW(ProcessParams({1, 1.2, 1, 0, 0}).validate(), InvalidParameter);
  EXPECT_THROW(ProcessParams({1, 1, 0, 0, 0}).validate(), InvalidParameter);
  EXPECT_THROW(ProcessParams({1, 1, 1, -1, 0}).validate(), InvalidParameter);
  EXPECT_THROW(GegenbauerParams({1, 0.7, 0.5, 1}).validate(), InvalidParameter);
  EXPECT_THROW(GegenbauerParams({1, 0.25, 1.5, 1}).validate(), InvalidParameter);
  EXPECT_THROW(CompositeParams({1, 0, 1}).validate(), InvalidParameter);
}

}  // namespace
}  // namespace fracpoisson
