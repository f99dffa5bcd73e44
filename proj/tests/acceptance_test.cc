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

// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "manymatch/axioms.h"
#include "manymatch/cli.h"
#include "manymatch/manipulation.h"
#include "manymatch/market_io.h"
#include "manymatch/solver.h"
#include "manymatch/stability.h"
#include "testing/fixtures.h"
#include "testing/market_gen.h"
#include "testing/oracles.h"

namespace manymatch {
namespace {

using testing::Agent;
using testing::PrefOf;
using testing::RowsOf;
using testing::Workers;

constexpr int kCorpusSize = 500;
constexpr StableRule kAllRules[] = {
    StableRule::kFirmOptimal, StableRule::kWorkerOptimal,
    StableRule::kSelectFirst, StableRule::kSelectLast};

// Thrown by Require; carries the failed condition.
struct CriterionFailure {
  std::string what;
};

void Require(bool condition, const std::string& what) {
  if (!condition) throw CriterionFailure{what};
}

struct CorpusEntry {
  testing::ResponsiveMarket market;
  StableSet stable;
};

const std::vector<CorpusEntry>& Corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::mt19937 rng(20261015);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < kCorpusSize; ++i) {
      // Alternate uniform and contested draws; uniform draws alone rarely
      // have more than one stable matching.
      testing::ResponsiveMarket market =
          i % 2 == 0 ? testing::RandomResponsiveMarket(rng, 4, 4, 2)
                     : testing::RandomContestedMarket(rng, 4, 4, 2);
      StableSet stable = EnumerateStable(market.profile);
      out.push_back({std::move(market), std::move(stable)});
    }
    return out;
  }();
  return corpus;
}

std::string Describe(const Profile& profile) {
  return SerializeMarket(testing::WithDefaultNames(profile));
}

void UnstableManipulation() {
  const MarketInstance market = testing::UnstableManipulationMarket();
  const Profile& truth = market.profile();
  Require(ApplyRule(StableRule::kFirmOptimal, truth) ==
              RowsOf(market, {"w2 w3", "w1", "w4"}),
          "firm-optimal matching");
  Require(ApplyRule(StableRule::kWorkerOptimal, truth) ==
              RowsOf(market, {"w1 w3", "w2", "w4"}),
          "worker-optimal matching");
  const AgentId w1 = Agent(market, "w1");
  const ManipulationOutcome outcome =
      EvaluateMisreport(w1, MakeMisreport(PrefOf(market, "w1", "f3")),
                        StableRule::kFirmOptimal, truth);
  const Matching expected = RowsOf(market, {"w3 w4", "w2", "w1"});
  Require(outcome.manipulated == expected, "manipulated matching");
  Require(!outcome.manipulated_stable_under_truth && !IsStable(expected, truth),
          "manipulated matching must be unstable under truth");
  const std::vector<BlockingPair> pairs = BlockingPairs(expected, truth);
  Require(std::find(pairs.begin(), pairs.end(),
                    BlockingPair{Agent(market, "f1"), w1}) != pairs.end(),
          "(f1,w1) blocks");
}

void FirmsCannotManipulate() {
  const MarketInstance market = testing::FirmsCannotManipulateMarket();
  const Profile& truth = market.profile();
  Require(ApplyRule(StableRule::kWorkerOptimal, truth) ==
              RowsOf(market, {"w3 w4", "w1 w2", ""}),
          "worker-optimal matching");
  struct Case {
    const char* firm;
    const char* report;
    std::vector<std::string> rows;
    OrderVerdict verdict;
  };
  const Case cases[] = {
      {"f1", "w1 w2 | w1 | w2", {"", "w1 w4", "w2 w3"},
       OrderVerdict::kWorseStrict},
      {"f2", "w3", {"w3 w4", "", "w1 w2"}, OrderVerdict::kWorseStrict},
      {"f3", "w4", {"w3 w4", "w1 w2", ""}, OrderVerdict::kEqual},
  };
  for (const Case& c : cases) {
    const ManipulationOutcome outcome = EvaluateMisreport(
        Agent(market, c.firm), MakeMisreport(PrefOf(market, c.firm, c.report)),
        StableRule::kWorkerOptimal, truth);
    Require(outcome.manipulated == RowsOf(market, c.rows),
            std::string("matching after ") + c.firm + "'s report");
    Require(outcome.verdict_common == c.verdict,
            std::string("verdict for ") + c.firm + ": got " +
                std::string(VerdictName(outcome.verdict_common)));
  }
  const AxiomReport lad = CheckLad(truth.at(Agent(market, "f1")));
  Require(!lad.holds && lad.witness &&
              lad.witness->larger == Workers(market, "w2 w3 w4") &&
              lad.witness->smaller == Workers(market, "w3 w4"),
          "LAD witness for f1");
}

void WorkersCannotManipulate() {
  const MarketInstance market = testing::WorkersCannotManipulateMarket();
  const Profile& truth = market.profile();
  const StableSet stable = EnumerateStable(truth);
  Require(stable.Contains(RowsOf(market, {"w1 w2", "w3 w4"})) &&
              stable.Contains(RowsOf(market, {"w3 w4", "w1 w2"})),
          "stable set contains both table matchings");
  for (const char* name : {"w1", "w2", "w3", "w4"}) {
    const CounterexampleReport report = GmtCounterexampleCheck(
        truth, StableRule::kFirmOptimal, Agent(market, name), true);
    Require(report.scope.mode == SearchMode::kExhaustive,
            std::string("exhaustive search for ") + name);
    Require(!report.found_profitable(),
            std::string("profitable report for ") + name);
  }
}

void GmtOnCorpus() {
  long applicable = 0;
  for (const CorpusEntry& entry : Corpus()) {
    const Profile& p = entry.market.profile;
    for (const StableRule rule : kAllRules) {
      for (const AgentId a : p.Agents()) {
        const GmtVerification v =
            VerifyGmt(a, rule, p, {.sweep_candidates = true});
        if (!v.applicable) continue;
        ++applicable;
        Require(!v.checks.empty(), "applicable agent without targets");
        for (const GmtTargetCheck& check : v.checks) {
          Require(check.all_pass(),
                  DefaultName(a) + " under " + std::string(RuleName(rule)) +
                      " fails in\n" + Describe(p));
        }
      }
    }
  }
  long contested = 0;
  for (const CorpusEntry& entry : Corpus()) contested += entry.stable.size() > 1;
  Require(applicable > 0, "no applicable agent in the corpus");
  std::printf("       %d markets, %ld with several stable matchings, "
              "%ld applicable agent/rule pairs\n",
              kCorpusSize, contested, applicable);
}

void PartnerCountInvariants() {
  for (const CorpusEntry& entry : Corpus()) {
    Require(!entry.stable.empty(), "empty stable set");
    Require(CheckSamePartnerCounts(entry.stable).holds,
            "partner counts differ in\n" + Describe(entry.market.profile));
    Require(CheckUnderfilledConstancy(entry.stable, entry.market.quotas).holds,
            "underfilled agent changes partners in\n" +
                Describe(entry.market.profile));
  }
}

void DeferredAcceptanceOptimality() {
  for (const CorpusEntry& entry : Corpus()) {
    const Profile& p = entry.market.profile;
    for (const Side side : {Side::kFirm, Side::kWorker}) {
      const Matching mu = DeferredAcceptance(p, side);
      Require(entry.stable.Contains(mu), "DA output not stable");
      Require(SideOptimal(entry.stable, p, side) == mu,
              "DA output is not side-optimal in\n" + Describe(p));
    }
  }
}

void AxiomChecks() {
  const MarketInstance blank = testing::BlankMarket(1, 3);
  const PreferenceRelation independent =
      PrefOf(blank, "f1", "w2 | w1 w3 | w1 | w3");
  Require(CheckSubstitutable(independent).holds, "substitutable fixture");
  Require(!CheckLad(independent).holds, "fixture violating LAD");
  const PreferenceRelation pair_only = PrefOf(blank, "f1", "w1 w2");
  Require(CheckLad(pair_only).holds && !CheckSubstitutable(pair_only).holds,
          "LAD-only fixture");
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const QuotaRanking ranking = testing::RandomQuotaRanking(
        rng, AgentId::Worker(0), 1 + i % 6, 3);
    const PreferenceRelation pref = ResponsivePreference(ranking);
    Require(CheckSubstitutable(pref).holds && CheckLad(pref).holds,
            "responsive relation fails an axiom");
  }
}

void RestrictionAndTruncationStability() {
  for (const CorpusEntry& entry : Corpus()) {
    const Profile& p = entry.market.profile;
    for (const Matching& mu : entry.stable) {
      for (const AgentId a : p.Agents()) {
        const PreferenceRelation& pref = p.at(a);
        const PartnerSet allowed = MatchedSet(mu, a);
        const PreferenceRelation restricted = RestrictPreference(pref, allowed);
        const Side side = pref.partner_side();
        const int universe = p.num_agents(side);
        for (PartnerSet::Mask s = 1; s < (1u << universe); ++s) {
          const PartnerSet set(side, s);
          if (!set.IsSubsetOf(allowed)) {
            Require(!restricted.IsListed(set), "item i");
            continue;
          }
          Require(restricted.IsListed(set) == pref.IsListed(set), "item ii");
          for (PartnerSet::Mask t = 1; t < (1u << universe); ++t) {
            const PartnerSet other(side, t);
            if (!other.IsSubsetOf(allowed) || !pref.IsListed(set) ||
                !pref.IsListed(other)) {
              continue;
            }
            Require((*restricted.Rank(set) < *restricted.Rank(other)) ==
                        (*pref.Rank(set) < *pref.Rank(other)),
                    "item iii");
          }
        }
        const Profile reported = ReplacePreference(p, a, restricted);
        Require(IsStable(mu, reported) && testing::IsStableOracle(mu, reported),
                "stable matching not stable after truncation");
      }
    }
  }
}

void GoldenAndRoundTrip() {
  std::ostringstream out;
  std::ostringstream err;
  Require(RunCli({"paper-examples"}, out, err) == kExitOk,
          "paper-examples: " + err.str());
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 5);
    std::vector<PreferenceRelation> firms;
    std::vector<PreferenceRelation> workers;
    for (int f = 0; f < n; ++f) {
      firms.push_back(testing::RandomRelation(rng, AgentId::Firm(f), m, 8));
    }
    for (int w = 0; w < m; ++w) {
      workers.push_back(testing::RandomRelation(rng, AgentId::Worker(w), n, 8));
    }
    const MarketInstance market =
        testing::WithDefaultNames(Profile(firms, workers));
    const std::string text = SerializeMarket(market);
    Require(ParseMarket(text) == market, "round trip:\n" + text);
  }
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 for no limit
  std::function<void()> run;
};

}  // namespace
}  // namespace manymatch

int main() {
  using namespace manymatch;
  const Criterion criteria[] = {
      {"unstable manipulation market", 1.0, UnstableManipulation},
      {"firms-cannot-manipulate market", 0, FirmsCannotManipulate},
      {"workers-cannot-manipulate market", 10.0, WorkersCannotManipulate},
      {"manipulation construction on random responsive markets", 120.0,
       GmtOnCorpus},
      {"partner-count invariants on the corpus", 0, PartnerCountInvariants},
      {"deferred acceptance is stable and side-optimal", 0,
       DeferredAcceptanceOptimality},
      {"axiom checkers", 0, AxiomChecks},
      {"restriction items and truncation stability", 0,
       RestrictionAndTruncationStability},
      {"golden transcript and format round trip", 0, GoldenAndRoundTrip},
  };
  // Build the shared corpus up front so its cost is not billed to one check.
  Corpus();
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::string detail;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const CriterionFailure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      detail = "took longer than " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("[%s] %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, c.name,
                seconds);
    if (!ok) {
      std::printf("       %s\n", detail.c_str());
      ++failures;
    }
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
