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

#ifndef FRACPOISSON_PARAMS_HPP
#define FRACPOISSON_PARAMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fracpoisson {

/// Parameters of the fractional Poisson family hierarchy.
///
/// alpha is the space order, beta the time order, mu the space tempering
/// and nu the time tempering. (alpha, beta, mu, nu) = (1, 1, 0, 0) is the
/// homogeneous Poisson process with rate lambda.
struct ProcessParams {
  double lambda = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double mu = 0.0;
  double nu = 0.0;

  void validate() const;
};

/// Parameters of the Gegenbauer-type shift equation. u = cos(angle); the
/// angle is never stored. beta < 1 selects the time-fractional variant.
struct GegenbauerParams {
  double lambda = 1.0;
  double d = 0.25;
  double u = 1.0;
  double beta = 1.0;

  void validate() const;
};

/// Two-exponent shift operator lambda[(1-B)^alpha1 + (1-B)^alpha2].
struct CompositeParams {
  double lambda = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;

  void validate() const;
};

using ModelParams = std::variant<ProcessParams, GegenbauerParams, CompositeParams>;

enum class Family {
  poisson,
  tfpp,
  sfpp,
  tsfpp,
  tempered_sfpp,
  tempered_tsfpp,
  gegenbauer,
  gegenbauer_ts,
  composite,
};

// Families whose solutions are probability distributions.
bool is_proper(Family family);

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Picks the family implied by which parameters are non-degenerate.
///
/// alpha = 1 removes the space subordinator regardless of mu, and beta = 1
/// removes the time change regardless of nu.
Family classify(const ProcessParams& params);
Family classify(const ModelParams& params);

void validate(const ModelParams& params);

}  // namespace fracpoisson

#endif  // FRACPOISSON_PARAMS_HPP
