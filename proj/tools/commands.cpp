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


#include "commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/simulate.hpp"

namespace fracpoisson::cli {
namespace {

struct FlagUse {
  bool lambda, alpha, beta, mu, nu, d, u, alpha2;
};

FlagUse uses(Family f) {
  switch (f) {
    case Family::poisson: return {true, false, false, false, false, false, false, false};
    case Family::tfpp: return {true, false, true, false, false, false, false, false};
    case Family::sfpp: return {true, true, false, false, false, false, false, false};
    case Family::tsfpp: return {true, true, true, false, false, false, false, false};
    case Family::tempered_sfpp: return {true, true, false, true, false, false, false, false};
    case Family::tempered_tsfpp: return {true, true, true, true, true, false, false, false};
    case Family::gegenbauer: return {true, false, false, false, false, true, true, false};
    case Family::gegenbauer_ts: return {true, false, true, false, false, true, true, false};
    case Family::composite: return {true, true, false, false, false, false, false, true};
  }
  return {};
}

}  // namespace

ResolvedModel resolve(const FamilyFlags& flags) {
  const auto family = parse_family(flags.family);
  if (!family) throw UsageError("unknown family '" + flags.family + "'");
  ResolvedModel out{*family, ProcessParams{}, {}};
  const FlagUse use = uses(*family);
  auto take = [&](const std::optional<double>& v, bool used, const char* name, double fallback) {
    if (v && !used) out.ignored_flags.push_back(name);
    return used && v ? *v : fallback;
  };
  const double lambda = take(flags.lambda, use.lambda, "--lambda", 1.0);
  const double alpha = take(flags.alpha, use.alpha, "--alpha", 1.0);
  const double beta = take(flags.beta, use.beta, "--beta", 1.0);
  const double mu = take(flags.mu, use.mu, "--mu", 0.0);
  const double nu = take(flags.nu, use.nu, "--nu", 0.0);
  const double d = take(flags.d, use.d, "--d", 0.25);
  const double u = take(flags.u, use.u, "--u", 1.0);
  const double alpha2 = take(flags.alpha2, use.alpha2, "--alpha2", 1.0);
  switch (*family) {
    case Family::gegenbauer:
    case Family::gegenbauer_ts:
      out.params = GegenbauerParams{lambda, d, u, beta};
      break;
    case Family::composite:
      out.params = CompositeParams{lambda, alpha, alpha2};
      break;
    default:
      out.params = ProcessParams{lambda, alpha, beta, mu, nu};
  }
  try {
    validate(out.params);
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
  return out;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string render_pmf(const PmfOptions& o) {
  const ResolvedModel model = resolve(o.flags);
  if (o.k_max < 0) throw UsageError("--kmax must be >= 0");
  if (o.t.empty()) throw UsageError("--t needs at least one time");
  for (std::size_t i = 0; i < o.t.size(); ++i) {
    if (!(o.t[i] >= 0)) throw UsageError("--t values must be >= 0");
    if (i > 0 && !(o.t[i] > o.t[i - 1])) {
      throw UsageError("--t values must be strictly increasing");
    }
  }
  if (!(o.tol > 0 && o.tol < 1)) throw UsageError("--tol must lie in (0, 1)");
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  SeriesConfig config;
  config.rel_tol = o.tol;
  const PmfTable table = pmf_table(model.family, model.params, o.k_max, o.t, config);
  if (o.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const auto& col = table.columns[i];
      for (int k = 0; k <= o.k_max; ++k) {
        rows.push_back({{"k", k}, {"t", table.t[i]}, {"p", col.p[k]},
                        {"terms_used", col.terms_used[k]}});
      }
    }
    return rows.dump(1) + "\n";
  }
  std::string out = "k,t,p,terms_used\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    const auto& col = table.columns[i];
    const std::string t = format_number(table.t[i]);
    for (int k = 0; k <= o.k_max; ++k) {
      out += std::to_string(k) + ',' + t + ',' + format_number(col.p[k]) + ',' +
             std::to_string(col.terms_used[k]) + '\n';
    }
  }
  return out;
}

std::string render_simulation(const SimulateOptions& o) {
  const ResolvedModel model = resolve(o.flags);
  const auto* params = std::get_if<ProcessParams>(&model.params);
  if (params == nullptr) {
    throw UsageError("family " + o.flags.family +
                     " has no subordinator representation to simulate");
  }
  if (!(o.t > 0)) throw UsageError("--t must be > 0");
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const double grid_dt = o.grid_dt.value_or(0.01 * o.t);
  if (!(grid_dt > 0)) throw UsageError("--grid-dt must be > 0");
  const SampleSet set = sample_process(*params, o.t, o.n, RngSpec{o.seed, o.stream}, grid_dt);
  std::ostringstream out;
  out << "# family=" << family_name(model.family) << " lambda=" << format_number(params->lambda)
      << " alpha=" << format_number(params->alpha) << " beta=" << format_number(params->beta)
      << " mu=" << format_number(params->mu) << " nu=" << format_number(params->nu)
      << " t=" << format_number(o.t) << " n=" << o.n << " seed=" << o.seed
      << " stream=" << o.stream << " grid_dt=" << format_number(grid_dt) << '\n';
  if (o.empirical_pmf) {
    std::int64_t top = 0;
    for (auto c : set.counts) top = std::max(top, c);
    const auto pmf = empirical_pmf(set, static_cast<int>(top));
    out << "k,p\n";
    for (std::size_t k = 0; k < pmf.size(); ++k) out << k << ',' << format_number(pmf[k]) << '\n';
  } else {
    out << "count\n";
    for (auto c : set.counts) out << c << '\n';
  }
  return out.str();
}

std::string render_info() {
  return R"(fracpoisson: counting processes driven by fractional and tempered clocks

Families and the flags they read
  poisson         P(k,t) = e^{-lambda t} (lambda t)^k / k!                     --lambda
  tfpp            time change by an inverse stable subordinator, order beta    --lambda --beta
  sfpp            time change by a stable subordinator, order alpha            --lambda --alpha
  tsfpp           stable subordinator composed with an inverse stable one      --lambda --alpha --beta
  tempered-sfpp   tempered stable subordinator, tempering mu                   --lambda --alpha --mu
  tempered-tsfpp  tempered stable composed with inverse tempered stable        --lambda --alpha --beta --mu --nu
  gegenbauer      solution of d/dt P = -lambda^{2d} (1 - 2uB + B^2)^d P        --lambda --d --u
  gegenbauer-ts   Caputo derivative of order beta in place of d/dt             --lambda --d --u --beta
  composite       shift operator (1-B)^{alpha} + (1-B)^{alpha2}                --lambda --alpha --alpha2

Symbols
  alpha, alpha2 in (0,1]   space-fractional order (power of the shift 1-B)
  beta in (0,1]            time-fractional order (Caputo derivative)
  mu, nu >= 0              tempering of the space and time subordinators
  d in (0,1/2], |u| <= 1   Gegenbauer memory and angle parameters
  B                        backward shift, B P(k) = P(k-1)

Background literature
  Laskin (2003)                          fractional Poisson process
  Mainardi, Gorenflo, Scalas (2004)      renewal process with Mittag-Leffler waiting times
  Beghin, Orsingher (2009)               fractional Poisson processes and related random motions
  Meerschaert, Nane, Vellaisamy (2011)   fractional Poisson process as a time-changed Poisson process
  Orsingher, Polito (2012)               space-fractional Poisson process
  Rosinski (2007)                        tempering stable processes
  Prabhakar (1971)                       three-parameter Mittag-Leffler function
  Kanter (1975)                          one-sided stable random variates
  Chambers, Mallows, Stuck (1976)        simulation of stable random variables
  Fulger, Scalas, Germano (2008)         Mittag-Leffler waiting-time variates
  Abate, Valko (2004)                    fixed-Talbot Laplace inversion
  Blackman, Vigna (2021)                 xoshiro256** generator
)";
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << data;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into " + path + ": " + ec.message());
  }
}

}  // namespace fracpoisson::cli
