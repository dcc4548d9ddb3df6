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

#include "fracpoisson/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "fracpoisson/errors.hpp"

namespace fracpoisson::stats {

namespace {

// Kolmogorov distribution survival function Q(lambda).
double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double chi_square_p(double statistic, int dof) {
  if (dof < 1) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Pools adjacent cells left to right until every cell reaches min_expected
// (judged on `weight`); a short last cell merges into its predecessor.
std::vector<std::vector<std::size_t>> pool_cells(const std::vector<double>& weight,
                                                 double min_expected) {
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> current;
  double acc = 0.0;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    current.push_back(i);
    acc += weight[i];
    if (acc >= min_expected) {
      cells.push_back(current);
      current.clear();
      acc = 0.0;
    }
  }
  if (!current.empty()) {
    if (cells.empty()) {
      cells.push_back(current);
    } else {
      cells.back().insert(cells.back().end(), current.begin(), current.end());
    }
  }
  return cells;
}

}  // namespace

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t n = std::min(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::fabs(p[i] - q[i]);
  return 0.5 * sum;
}

Moments moments(const std::vector<double>& x) {
  Moments m;
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) throw InvalidParameter("moments: need at least two samples");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  m.mean = mean;
  m.variance = m2 * n / (n - 1.0);
  m.mean_se = std::sqrt(m.variance / n);
  m.variance_se = std::sqrt(std::max(0.0, (m4 - m2 * m2 * (n - 3.0) / (n - 1.0)) / n));
  return m;
}

Moments moments(const std::vector<std::int64_t>& x) {
  return moments(std::vector<double>(x.begin(), x.end()));
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InvalidParameter("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  const double sq = std::sqrt(ne);
  TestResult r;
  r.statistic = d;
  r.p_value = kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
  return r;
}

TestResult chi_square_gof(const std::vector<std::int64_t>& counts, const std::vector<double>& probs,
                          double min_expected) {
  if (counts.empty() || probs.empty()) throw InvalidParameter("chi_square_gof: empty input");
  const double n = static_cast<double>(counts.size());
  std::vector<double> observed(probs.size() + 1, 0.0);
  for (std::int64_t c : counts) {
    const std::size_t idx = (c >= 0 && static_cast<std::size_t>(c) < probs.size())
                                ? static_cast<std::size_t>(c)
                                : probs.size();
    observed[idx] += 1.0;
  }
  std::vector<double> expected(probs.size() + 1, 0.0);
  double head = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    expected[k] = n * probs[k];
    head += probs[k];
  }
  expected.back() = n * std::max(0.0, 1.0 - head);
  const auto cells = pool_cells(expected, min_expected);
  double stat = 0.0;
  for (const auto& cell : cells) {
    double o = 0.0, e = 0.0;
    for (std::size_t i : cell) {
      o += observed[i];
      e += expected[i];
    }
    if (e > 0) stat += (o - e) * (o - e) / e;
  }
  return {stat, chi_square_p(stat, static_cast<int>(cells.size()) - 1)};
}

TestResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b, double min_expected) {
  if (a.empty() || b.empty()) throw InvalidParameter("chi_square_two_sample: empty sample");
  std::map<std::int64_t, std::pair<double, double>> table;
  for (std::int64_t v : a) table[v].first += 1.0;
  for (std::int64_t v : b) table[v].second += 1.0;
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double n = na + nb;
  std::vector<double> oa, ob, total;
  for (const auto& [value, pair] : table) {
    oa.push_back(pair.first);
    ob.push_back(pair.second);
    total.push_back(pair.first + pair.second);
  }
  // Pool on the smaller expected count of the two rows.
  std::vector<double> weight(total.size());
  for (std::size_t i = 0; i < total.size(); ++i) weight[i] = total[i] * std::min(na, nb) / n;
  const auto cells = pool_cells(weight, min_expected);
  double stat = 0.0;
  for (const auto& cell : cells) {
    double ca = 0.0, cb = 0.0;
    for (std::size_t i : cell) {
      ca += oa[i];
      cb += ob[i];
    }
    const double col = ca + cb;
    const double ea = col * na / n, eb = col * nb / n;
    stat += (ca - ea) * (ca - ea) / ea + (cb - eb) * (cb - eb) / eb;
  }
  return {stat, chi_square_p(stat, static_cast<int>(cells.size()) - 1)};
}

}  // namespace fracpoisson::stats
