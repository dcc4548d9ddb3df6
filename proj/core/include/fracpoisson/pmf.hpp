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


#ifndef FRACPOISSON_PMF_HPP
#define FRACPOISSON_PMF_HPP

#include <string>
#include <vector>

#include "fracpoisson/params.hpp"
#include "fracpoisson/series_config.hpp"

namespace fracpoisson {

// Terms consumed by one nesting level of a (possibly multiple) series.
struct LevelTerms {
  std::string level;
  int max_terms = 0;
};

/// State probabilities P(0..k_max, t) at a single time.
///
/// terms_used[k] is the outer-series length at which entry k met the stopping
/// rule. levels lists the worst-case length of every nested level.
struct PmfColumn {
  double t = 0.0;
  std::vector<double> p;
  std::vector<int> terms_used;
  std::vector<LevelTerms> levels;
  // Decimal digits of the arithmetic that produced the column.
  unsigned working_digits = 0;
};

struct PmfTable {
  ModelParams params;
  Family family = Family::poisson;
  int k_max = 0;
  std::vector<double> t;
  std::vector<PmfColumn> columns;  // one per t

  double value(int k, std::size_t t_index) const { return columns[t_index].p[k]; }
};

double poisson_pmf(double lambda, int k, double t);
double tfpp_pmf(double lambda, double beta, int k, double t, const SeriesConfig& config = {});
double sfpp_pmf(double lambda, double alpha, int k, double t, const SeriesConfig& config = {});
double tsfpp_pmf(double lambda, double alpha, double beta, int k, double t,
                 const SeriesConfig& config = {});

/// Includes the e^{t mu^alpha} factor, so the result is a proper PMF whose
/// generating function is exp(-t((mu + lambda(1-w))^alpha - mu^alpha)).
double tempered_sfpp_pmf(double lambda, double alpha, double mu, int k, double t,
                         const SeriesConfig& config = {});

/// beta = 1 delegates to tempered_sfpp_pmf.
double tempered_tsfpp_pmf(double lambda, double alpha, double beta, double mu, double nu,
                          int k, double t, const SeriesConfig& config = {});

// Ignores params.beta; see gegenbauer_ts_pmf for the time-fractional variant.
double gegenbauer_pmf(const GegenbauerParams& params, int k, double t,
                      const SeriesConfig& config = {});
double gegenbauer_ts_pmf(const GegenbauerParams& params, int k, double t,
                         const SeriesConfig& config = {});

double composite_shift_pmf(double lambda, double alpha1, double alpha2, int k, double t,
                           const SeriesConfig& config = {});

/// P(0..k_max, t) for the family implied by `params` (see classify()).
PmfColumn pmf_column(const ModelParams& params, int k_max, double t,
                     const SeriesConfig& config = {});

/// Columns for every t in `t_grid` (strictly increasing, non-negative).
/// Columns are evaluated in parallel; the result does not depend on the
/// thread count. NonConvergence messages name the failing (k, t).
PmfTable pmf_table(const ModelParams& params, int k_max, const std::vector<double>& t_grid,
                   const SeriesConfig& config = {});

// Evaluates the series of an explicit family. Slice families read only the
// parameters they use, so e.g. tempered_tsfpp with mu = nu = 0 runs the
// quadruple series rather than the TSFPP series.
PmfTable pmf_table(Family family, const ModelParams& params, int k_max,
                   const std::vector<double>& t_grid, const SeriesConfig& config = {});

}  // namespace fracpoisson

#endif  // FRACPOISSON_PMF_HPP
