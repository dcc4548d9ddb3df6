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


#ifndef FRACPOISSON_TOOLS_COMMANDS_HPP
#define FRACPOISSON_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracpoisson/params.hpp"

namespace fracpoisson::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // check failures and numerical errors
  kUsage = 2,
  kStall = 3,
};

// Raw parameter flags; unset flags keep the defaults of the selected family.
struct FamilyFlags {
  std::string family;
  std::optional<double> lambda, alpha, beta, mu, nu, d, u, alpha2;
};

struct PmfOptions {
  FamilyFlags flags;
  int k_max = 20;
  std::vector<double> t;
  double tol = 1e-12;
  std::string format = "csv";
  std::string out = "-";
};

struct SimulateOptions {
  FamilyFlags flags;
  double t = 1.0;
  std::size_t n = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::optional<double> grid_dt;
  bool empirical_pmf = false;
  std::string out = "-";
};

struct CheckOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  bool fresh_seed = false;
  std::string out = "-";
};

// Raised for flag combinations that violate a parameter constraint.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ResolvedModel {
  Family family;
  ModelParams params;
  std::vector<std::string> ignored_flags;
};

ResolvedModel resolve(const FamilyFlags& flags);

std::string format_number(double x);

std::string render_pmf(const PmfOptions& options);
std::string render_simulation(const SimulateOptions& options);
std::string render_info();

// Writes to stdout for "-", otherwise to a sibling temporary file renamed into place.
void write_output(const std::string& path, const std::string& data);

}  // namespace fracpoisson::cli

#endif  // FRACPOISSON_TOOLS_COMMANDS_HPP
