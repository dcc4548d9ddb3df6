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


#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fracpoisson/errors.hpp"
#include "fracpoisson/harness.hpp"
#include "fracpoisson/specfun.hpp"

namespace {

using namespace fracpoisson;
using namespace fracpoisson::cli;

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "Model family")->required();
  cmd->add_option("--lambda", f.lambda, "Rate, > 0");
  cmd->add_option("--alpha", f.alpha, "Space order in (0,1]; alpha1 of composite");
  cmd->add_option("--beta", f.beta, "Time order in (0,1]");
  cmd->add_option("--mu", f.mu, "Space tempering, >= 0");
  cmd->add_option("--nu", f.nu, "Time tempering, >= 0");
  cmd->add_option("--d", f.d, "Gegenbauer memory in (0,1/2]");
  cmd->add_option("--u", f.u, "Gegenbauer angle cosine in [-1,1]");
  cmd->add_option("--alpha2", f.alpha2, "Second composite order in (0,1]");
}

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--t: cannot parse '" + item + "' as a number");
    }
  }
  return out;
}

void warn_ignored(const FamilyFlags& flags) {
  for (const auto& name : resolve(flags).ignored_flags) {
    std::cerr << "warning: " << name << " is ignored by family " << flags.family << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Fractional and tempered Poisson process toolkit"};
  app.require_subcommand(1);

  PmfOptions pmf;
  std::string t_list;
  auto* pmf_cmd = app.add_subcommand("pmf", "State probabilities on a time grid");
  add_family_flags(pmf_cmd, pmf.flags);
  pmf_cmd->add_option("--kmax", pmf.k_max, "Largest state")->capture_default_str();
  pmf_cmd->add_option("--t", t_list, "Comma-separated increasing times")->required();
  pmf_cmd->add_option("--tol", pmf.tol, "Relative series tolerance")->capture_default_str();
  pmf_cmd->add_option("--format", pmf.format, "csv or json")->capture_default_str();
  pmf_cmd->add_option("--out", pmf.out, "Output path, - for stdout")->capture_default_str();

  SimulateOptions sim;
  double grid_dt = 0.0;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo draws of N(t)");
  add_family_flags(sim_cmd, sim.flags);
  sim_cmd->add_option("--t", sim.t, "Time")->capture_default_str();
  sim_cmd->add_option("--n", sim.n, "Number of draws")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Generator seed")->capture_default_str();
  sim_cmd->add_option("--stream", sim.stream, "Generator stream")->capture_default_str();
  auto* grid_opt = sim_cmd->add_option("--grid-dt", grid_dt, "Subordinator grid step (default 0.01 t)");
  sim_cmd->add_flag("--empirical-pmf", sim.empirical_pmf, "Emit relative frequencies");
  sim_cmd->add_option("--out", sim.out, "Output path, - for stdout")->capture_default_str();

  double a = 1, b = 1, c = 1, z = 0;
  auto* ml_cmd = app.add_subcommand("ml", "Evaluate the Prabhakar function");
  ml_cmd->add_option("--a", a, "Order a > 0")->required();
  ml_cmd->add_option("--b", b, "Order b > 0")->required();
  ml_cmd->add_option("--c", c, "Power c")->capture_default_str();
  ml_cmd->add_option("--z", z, "Argument")->required();

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run validation suites as JSONL");
  check_cmd->add_option("--suite", check.suite, "Suite name or all")
      ->capture_default_str()
      ->check([](const std::string& s) {
        for (const auto& name : harness::suite_names()) {
          if (name == s) return std::string();
        }
        return s == "all" ? std::string() : "unknown suite '" + s + "'";
      });
  check_cmd->add_option("--seed", check.seed, "Root seed")->capture_default_str();
  check_cmd->add_flag("--fresh-seed", check.fresh_seed, "Seed from the OS entropy source");
  check_cmd->add_option("--out", check.out, "Output path, - for stdout")->capture_default_str();

  auto* info_cmd = app.add_subcommand("info", "Families, flags and background literature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*pmf_cmd) {
      pmf.t = parse_times(t_list);
      warn_ignored(pmf.flags);
      write_output(pmf.out, render_pmf(pmf));
    } else if (*sim_cmd) {
      if (*grid_opt) sim.grid_dt = grid_dt;
      warn_ignored(sim.flags);
      write_output(sim.out, render_simulation(sim));
    } else if (*ml_cmd) {
      write_output("-", format_number(prabhakar_ml(a, b, c, z)) + '\n');
    } else if (*check_cmd) {
      harness::HarnessConfig config;
      config.seed = check.seed;
      config.fresh_seed = check.fresh_seed;
      const auto reports = harness::run_suite(check.suite, config);
      std::ostringstream out;
      harness::write_jsonl(out, check.suite, reports);
      write_output(check.out, out.str());
      return harness::all_passed(reports) ? kOk : kFailure;
    } else if (*info_cmd) {
      write_output("-", render_info());
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SamplingStall& e) {
    std::cerr << "error: sampling stalled: " << e.what() << '\n';
    return kStall;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
