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

#ifndef FRACPOISSON_DETAIL_PARTIAL_SUM_HPP
#define FRACPOISSON_DETAIL_PARTIAL_SUM_HPP

#include <cmath>
#include <limits>

#include "fracpoisson/series_config.hpp"

namespace fracpoisson::detail {

/// Compensated running sum with the stagnation stopping rule.
///
/// Tracks the |term| mass alongside the sum; the ratio of the two is the
/// cancellation factor that drives precision escalation.
template <class R>
class PartialSum {
 public:
  explicit PartialSum(const SeriesConfig& config)
      : config_(&config), rel_tol_(config.rel_tol), abs_tol_(config.abs_tol) {}

  // Overrides the stopping tolerances. Sums nested inside a cancelling outer
  // sum use the working epsilon and no absolute floor: their values are later
  // scaled by factors the floor knows nothing about.
  PartialSum(const SeriesConfig& config, const R& rel_tol, const R& abs_tol)
      : config_(&config), rel_tol_(rel_tol), abs_tol_(abs_tol) {}

  void add(const R& term) {
    using std::abs;
    add(term, abs(term));
  }

  // `rounding_mass` is the |.| mass that produced `term`, e.g. |a| + |b| when
  // a pre-combined pair a + b is added.
  void add(const R& term, const R& rounding_mass) {
    using std::abs;
    ++terms_;
    R mag = abs(term);
    mass_ += rounding_mass;
    // Neumaier compensation.
    R next = sum_ + term;
    if (abs(sum_) >= mag) {
      carry_ += (sum_ - next) + term;
    } else {
      carry_ += (term - next) + sum_;
    }
    sum_ = next;
    if (term != 0) started_ = true;
    if (!started_) return;
    R scale = abs(sum_ + carry_);
    if (mag < rel_tol_ * scale + abs_tol_) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
  }

  // Marks a series known to be identically zero (or finite and exhausted).
  void finish() { forced_done_ = true; }

  bool done() const {
    return forced_done_ || small_run_ >= config_->stagnation_window;
  }
  bool exhausted() const { return terms_ >= config_->max_terms; }

  R value() const { return sum_ + carry_; }
  const R& mass() const { return mass_; }
  int terms() const { return terms_; }

 private:
  const SeriesConfig* config_;
  R rel_tol_;
  R abs_tol_;
  R sum_{0};
  R carry_{0};
  R mass_{0};
  int terms_ = 0;
  int small_run_ = 0;
  bool started_ = false;
  bool forced_done_ = false;
};

// Stopping rule for nested sums: the working epsilon (never looser than the
// configured tolerance) and no absolute floor.
template <class R>
PartialSum<R> nested_sum(const SeriesConfig& config) {
  const R eps = std::numeric_limits<R>::epsilon();
  return PartialSum<R>(config, eps < R(config.rel_tol) ? eps : R(config.rel_tol), R(0));
}

}  // namespace fracpoisson::detail

#endif  // FRACPOISSON_DETAIL_PARTIAL_SUM_HPP
