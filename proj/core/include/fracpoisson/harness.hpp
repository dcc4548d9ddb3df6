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


#ifndef FRACPOISSON_HARNESS_HPP
#define FRACPOISSON_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fracpoisson/series_config.hpp"
#include "fracpoisson/simulate.hpp"

namespace fracpoisson::harness {

enum class Status { pass, fail };

// Side of the threshold on which a metric passes.
enum class Comparison { at_most, at_least };

struct CheckReport {
  std::string check_id;
  Status status = Status::fail;
  double metric = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::at_most;
  std::string details;
  std::optional<RngSpec> seed;
};

struct HarnessConfig {
  std::uint64_t seed = 42;
  // Draw the base seed from std::random_device; the chosen seed is reported.
  bool fresh_seed = false;
  SeriesConfig series;
};

struct CheckInfo {
  std::string id;
  std::string suite;
  // Invariant the check covers, empty for supplementary checks.
  std::string invariant;
  bool stochastic = false;
};

struct CoverageEntry {
  std::string invariant;
  std::string suite;
  std::vector<std::string> checks;
};

// reductions, oracle, montecarlo, moments, governing, identities and all.
const std::vector<std::string>& suite_names();

std::vector<CheckInfo> list_checks(std::string_view suite = "all");

// Static invariant-to-suite audit placed in the report header.
std::vector<CoverageEntry> coverage();

// Throws InvalidParameter for an unknown suite. Check failures and errors
// inside a check are reported, never thrown. Reports are sorted by check_id.
std::vector<CheckReport> run_suite(std::string_view suite, const HarnessConfig& config = {});

CheckReport run_check(std::string_view check_id, const HarnessConfig& config = {});

bool all_passed(const std::vector<CheckReport>& reports);

std::string header_json(std::string_view suite);
std::string to_json(const CheckReport& report);

// Header line followed by one line per report.
void write_jsonl(std::ostream& out, std::string_view suite,
                 const std::vector<CheckReport>& reports);

}  // namespace fracpoisson::harness

#endif  // FRACPOISSON_HARNESS_HPP
