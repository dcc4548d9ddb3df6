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

#include "fracpoisson/params.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/series_config.hpp"

namespace fracpoisson {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InvalidParameter(message);
}

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::poisson, "poisson"},
    {Family::tfpp, "tfpp"},
    {Family::sfpp, "sfpp"},
    {Family::tsfpp, "tsfpp"},
    {Family::tempered_sfpp, "tempered-sfpp"},
    {Family::tempered_tsfpp, "tempered-tsfpp"},
    {Family::gegenbauer, "gegenbauer"},
    {Family::gegenbauer_ts, "gegenbauer-ts"},
    {Family::composite, "composite"},
}};

}  // namespace

void SeriesConfig::validate() const {
  require(rel_tol > 0, "SeriesConfig: rel_tol must be > 0");
  require(abs_tol >= 0, "SeriesConfig: abs_tol must be >= 0");
  require(max_terms >= 1, "SeriesConfig: max_terms must be >= 1");
  require(stagnation_window >= 1, "SeriesConfig: stagnation_window must be >= 1");
}

void ProcessParams::validate() const {
  require(lambda > 0 && std::isfinite(lambda), "lambda must be > 0");
  require(alpha > 0 && alpha <= 1, "alpha must lie in (0, 1]");
  require(beta > 0 && beta <= 1, "beta must lie in (0, 1]");
  require(mu >= 0 && std::isfinite(mu), "mu must be >= 0");
  require(nu >= 0 && std::isfinite(nu), "nu must be >= 0");
}

void GegenbauerParams::validate() const {
  require(lambda > 0 && std::isfinite(lambda), "lambda must be > 0");
  require(d > 0 && d <= 0.5, "d must lie in (0, 1/2]");
  require(std::fabs(u) <= 1, "|u| must be <= 1");
  require(beta > 0 && beta <= 1, "beta must lie in (0, 1]");
}

void CompositeParams::validate() const {
  require(lambda > 0 && std::isfinite(lambda), "lambda must be > 0");
  require(alpha1 > 0 && alpha1 <= 1, "alpha1 must lie in (0, 1]");
  require(alpha2 > 0 && alpha2 <= 1, "alpha2 must lie in (0, 1]");
}

bool is_proper(Family family) {
  switch (family) {
    case Family::gegenbauer:
    case Family::gegenbauer_ts:
    case Family::composite:
      return false;
    default:
      return true;
  }
}

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Family classify(const ProcessParams& p) {
  const bool space = p.alpha < 1;
  const bool time = p.beta < 1;
  const bool space_tempered = space && p.mu > 0;
  const bool time_tempered = time && p.nu > 0;
  if (time) {
    if (space_tempered || time_tempered) return Family::tempered_tsfpp;
    return space ? Family::tsfpp : Family::tfpp;
  }
  if (space_tempered) return Family::tempered_sfpp;
  return space ? Family::sfpp : Family::poisson;
}

Family classify(const ModelParams& params) {
  if (const auto* p = std::get_if<ProcessParams>(&params)) return classify(*p);
  if (const auto* g = std::get_if<GegenbauerParams>(&params)) {
    return g->beta < 1 ? Family::gegenbauer_ts : Family::gegenbauer;
  }
  return Family::composite;
}

void validate(const ModelParams& params) {
  std::visit([](const auto& p) { p.validate(); }, params);
}

}  // namespace fracpoisson
