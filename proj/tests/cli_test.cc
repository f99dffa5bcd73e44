// Copyright 2026 The manymatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "manymatch/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"
#include "json.hpp"
#include "manymatch/market_io.h"
#include "manymatch/reference_markets.h"

namespace manymatch {
namespace {

using Json = nlohmann::ordered_json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun RunArgs(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("manymatch_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::filesystem::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveFromFile) {
  const std::string path = Write(
      "sect.market", std::string(ReferenceMarkets()[0].text));
  const CliRun run = RunArgs({"solve", path, "--rule", "firm-optimal"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out,
            "rule: firm-optimal\nf1     f2  f3\nw2,w3  w1  w4\nstable: yes\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunArgs({"solve", (dir_ / "missing.market").string(), "--rule",
                 "firm-optimal"})
                .code,
            kExitInput);
  EXPECT_EQ(RunArgs({"solve", Write("bad.market", "firms: a\nworkers a\n"),
                 "--rule", "firm-optimal"})
                .code,
            kExitInput);
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"solve", "builtin:unstable-manipulation", "--bogus"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"solve", "builtin:unstable-manipulation", "--rule", "best"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"manipulate", "builtin:unstable-manipulation", "--agent",
                 "w9", "--rule", "firm-optimal"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"--help"}).code, kExitOk);
}

TEST_F(CliTest, StrictTurnsViolationsIntoExitOne) {
  const std::vector<std::string> manipulate = {
      "manipulate", "builtin:unstable-manipulation", "--agent", "w1",
      "--rule",     "firm-optimal",                  "--report", "f3"};
  EXPECT_EQ(RunArgs(manipulate).code, kExitOk);
  std::vector<std::string> strict = manipulate;
  strict.push_back("--strict");
  EXPECT_EQ(RunArgs(strict).code, kExitViolation);

  EXPECT_EQ(RunArgs({"validate", "builtin:firms-cannot-manipulate"}).code,
            kExitOk);
  EXPECT_EQ(RunArgs({"validate", "builtin:firms-cannot-manipulate", "--strict"})
                .code,
            kExitViolation);
  EXPECT_EQ(RunArgs({"validate", "builtin:firms-cannot-manipulate", "--axiom",
                 "substitutable", "--strict"})
                .code,
            kExitOk);
}

TEST_F(CliTest, VerifyGmtPassesForManipulatingWorker) {
  const CliRun run = RunArgs({"verify-gmt", "builtin:unstable-manipulation",
                          "--rule", "firm-optimal", "--agent", "w1"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(run.out.find("[PASS] target stable under the report"),
            std::string::npos);
  EXPECT_EQ(run.out.find("[FAIL]"), std::string::npos);
  std::size_t passes = 0;
  for (std::size_t at = run.out.find("[PASS]"); at != std::string::npos;
       at = run.out.find("[PASS]", at + 1)) {
    ++passes;
  }
  EXPECT_EQ(passes, 4u);
}

TEST_F(CliTest, VerifyGmtRejectsProfilesWithoutLad) {
  const CliRun run = RunArgs({"verify-gmt", "builtin:firms-cannot-manipulate",
                          "--rule", "worker-optimal"});
  EXPECT_EQ(run.code, kExitInput);
  EXPECT_NE(run.err.find("violates lad"), std::string::npos);
}

TEST_F(CliTest, JsonAndTextAgree) {
  const CliRun text = RunArgs({"enumerate", "builtin:workers-cannot-manipulate"});
  const CliRun json = RunArgs({"--format", "json", "enumerate",
                           "builtin:workers-cannot-manipulate"});
  ASSERT_EQ(json.code, kExitOk);
  const Json doc = Json::parse(json.out);
  EXPECT_EQ(doc["command"], "enumerate");
  EXPECT_EQ(doc["instance"]["firms"], Json::array({"f1", "f2"}));
  const Json& results = doc["results"];
  EXPECT_NE(text.out.find("stable matchings: " +
                          std::to_string(results["count"].get<int>())),
            std::string::npos);
  for (const Json& matching : results["matchings"]) {
    std::string row;
    for (const auto& [firm, workers] : matching.items()) {
      std::string cell;
      for (const Json& w : workers) {
        cell += (cell.empty() ? "" : ",") + w.get<std::string>();
      }
      row += (row.empty() ? "" : "  ") + (cell.empty() ? "∅" : cell);
    }
    EXPECT_NE(text.out.find(row), std::string::npos) << row;
  }
}

TEST_F(CliTest, VerifyGmtJsonCarriesFourAssertions) {
  const CliRun run = RunArgs({"--format", "json", "verify-gmt",
                          "builtin:unstable-manipulation", "--rule",
                          "firm-optimal", "--agent", "w1"});
  ASSERT_EQ(run.code, kExitOk);
  const Json doc = Json::parse(run.out);
  const Json& agent = doc["results"]["agents"][0];
  EXPECT_EQ(agent["pass"], true);
  EXPECT_EQ(agent["checks"][0]["gmt_assertions"],
            Json::array({true, true, true, true}));
  EXPECT_EQ(agent["checks"][0]["report"], "f1");
}

TEST_F(CliTest, ManipulateSearchReportsNoProfitableMisreport) {
  const CliRun run =
      RunArgs({"--format", "json", "manipulate", "builtin:workers-cannot-manipulate",
           "--agent", "w1", "--rule", "firm-optimal", "--exhaustive"});
  ASSERT_EQ(run.code, kExitOk);
  const Json doc = Json::parse(run.out);
  EXPECT_EQ(doc["results"]["search_scope"]["candidates"], 16);
  EXPECT_TRUE(doc["results"]["profitable"].empty());
}

TEST_F(CliTest, ReferenceExamplesMatchGolden) {
  const CliRun run = RunArgs({"paper-examples"});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(run.out, std::string(ReferenceExamplesGolden()) + "golden: match\n");
  EXPECT_EQ(ReferenceExamplesReport(), ReferenceExamplesGolden());
}

TEST_F(CliTest, ReferenceMarketsAreCanonicalText) {
  for (const ReferenceMarket& market : ReferenceMarkets()) {
    EXPECT_EQ(SerializeMarket(ParseMarket(market.text)), market.text)
        << market.key;
  }
}

}  // namespace
}  // namespace manymatch
