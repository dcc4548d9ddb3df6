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

#ifndef FRACPOISSON_SERIES_CONFIG_HPP
#define FRACPOISSON_SERIES_CONFIG_HPP

namespace fracpoisson {

/// Truncation policy shared by every infinite-series evaluation.
///
/// A series stops once `stagnation_window` consecutive terms satisfy
/// |term| < rel_tol * |partial| + abs_tol. Leading terms that are exactly
/// zero (reciprocal-gamma poles, vanishing falling factorials) do not count
/// toward the window.
struct SeriesConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_terms = 10'000;
  int stagnation_window = 3;

  // Throws InvalidParameter when an invariant is violated.
  void validate() const;
};

}  // namespace fracpoisson

#endif  // FRACPOISSON_SERIES_CONFIG_HPP
