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


#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/harness.hpp"

namespace fracpoisson::harness {
namespace {

TEST(Registry, CheckIdsAreUniqueAndPrefixedBySuite) {
  const auto checks = list_checks("all");
  std::set<std::string> ids;
  for (const auto& c : checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(c.id.rfind(c.suite + ".", 0), 0u) << c.id;
  }
  std::size_t per_suite = 0;
  for (const auto& s : suite_names()) {
    if (s != "all") per_suite += list_checks(s).size();
  }
  EXPECT_EQ(per_suite, checks.size());
}

TEST(Registry, EveryInvariantIsCoveredBySuiteOwningIt) {
  const auto checks = list_checks("all");
  std::set<std::string> seen;
  for (const auto& entry : coverage()) {
    EXPECT_TRUE(seen.insert(entry.invariant).second) << entry.invariant;
    EXPECT_FALSE(entry.checks.empty()) << entry.invariant;
    for (const auto& id : entry.checks) {
      const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; });
      ASSERT_NE(it, checks.end()) << id;
      EXPECT_EQ(it->suite, entry.suite) << id;
      EXPECT_EQ(it->invariant, entry.invariant) << id;
    }
  }
  for (const auto& c : checks) {
    if (!c.invariant.empty()) EXPECT_TRUE(seen.count(c.invariant)) << c.id;
  }
}

TEST(Registry, UnknownSuiteThrows) {
  EXPECT_THROW(list_checks("nope"), InvalidParameter);
  EXPECT_THROW(run_suite("nope"), InvalidParameter);
}

TEST(RunSuite, ReductionsPass) {
  const auto reports = run_suite("reductions");
  ASSERT_FALSE(reports.empty());
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, Status::pass) << r.check_id << ": " << r.details;
    EXPECT_FALSE(r.seed.has_value());
  }
  EXPECT_TRUE(all_passed(reports));
}

TEST(RunCheck, BinomialIdentity) {
  const CheckReport r = run_check("identities.binomial_identity");
  EXPECT_EQ(r.status, Status::pass) << r.details;
  EXPECT_LE(r.metric, r.threshold);
}

TEST(RunCheck, StochasticChecksAreSeededAndRepeatable) {
  HarnessConfig config;
  config.seed = 1234;
  const CheckReport a = run_check("moments.poisson_mean", config);
  const CheckReport b = run_check("moments.poisson_mean", config);
  ASSERT_TRUE(a.seed.has_value());
  EXPECT_EQ(a.seed->seed, 1234u);
  EXPECT_EQ(a.metric, b.metric);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(RunCheck, FreshSeedIsReported) {
  HarnessConfig config;
  config.fresh_seed = true;
  const CheckReport r = run_check("moments.poisson_mean", config);
  ASSERT_TRUE(r.seed.has_value());
}

TEST(Jsonl, HeaderAndReportSchema) {
  std::ostringstream out;
  const auto reports = run_suite("reductions");
  write_jsonl(out, "reductions", reports);
  std::istringstream in(out.str());
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  const auto header = nlohmann::json::parse(line);
  EXPECT_EQ(header["header"]["suite"], "reductions");
  EXPECT_TRUE(header["header"]["coverage"].is_array());
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"check_id", "status", "metric", "threshold", "pass_if", "details", "seed"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["status"], "pass");
    EXPECT_TRUE(j["seed"].is_null());
    ++n;
  }
  EXPECT_EQ(n, reports.size());
}

}  // namespace
}  // namespace fracpoisson::harness
