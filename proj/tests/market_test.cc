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

#include "manymatch/market.h"

#include <random>

#include "gtest/gtest.h"
#include "manymatch/errors.h"
#include "manymatch/solver.h"
#include "testing/fixtures.h"
#include "testing/market_gen.h"
#include "testing/oracles.h"

namespace manymatch {
namespace {

using testing::Agent;
using testing::BlankMarket;
using testing::Firms;
using testing::PrefOf;
using testing::RowsOf;
using testing::Workers;

TEST(PartnerSetTest, SetAlgebra) {
  const PartnerSet a = PartnerSet::Of(Side::kWorker, {0, 2});
  const PartnerSet b = PartnerSet::Of(Side::kWorker, {2, 3});
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a.Union(b), PartnerSet::Of(Side::kWorker, {0, 2, 3}));
  EXPECT_EQ(a.Intersect(b), PartnerSet::Of(Side::kWorker, {2}));
  EXPECT_EQ(a.Without(0).With(3), b);
  EXPECT_TRUE(a.Intersect(b).IsSubsetOf(a));
  EXPECT_EQ(a.members(), (std::vector<int>{0, 2}));
  EXPECT_THROW(a.Union(PartnerSet(Side::kFirm, 1)), InvalidArgument);
  EXPECT_THROW(a.With(kMaxAgentsPerSide), InvalidArgument);
}

TEST(PreferenceRelationTest, RejectsMalformedLists) {
  const AgentId f1 = AgentId::Firm(0);
  EXPECT_THROW(PreferenceRelation(f1, {PartnerSet(Side::kWorker)}),
               InvalidArgument);
  EXPECT_THROW(PreferenceRelation(f1, {PartnerSet(Side::kFirm, 1)}),
               InvalidArgument);
  EXPECT_THROW(PreferenceRelation(f1, {PartnerSet(Side::kWorker, 1),
                                       PartnerSet(Side::kWorker, 1)}),
               InvalidArgument);
}

TEST(PreferenceRelationTest, RankPlacesEmptySetAfterListedSets) {
  const MarketInstance market = BlankMarket(1, 3);
  const PreferenceRelation pref = PrefOf(market, "f1", "w2 | w1 w3 | w1");
  EXPECT_EQ(pref.Rank(Workers(market, "w2")), 0);
  EXPECT_EQ(pref.Rank(Workers(market, "w1")), 2);
  EXPECT_EQ(pref.Rank(Workers(market, "")), 3);
  EXPECT_EQ(pref.Rank(Workers(market, "w3")), std::nullopt);
  EXPECT_EQ(pref.Support(), Workers(market, "w1 w2 w3"));
}

TEST(ChoiceTest, FirstListedSubsetWins) {
  const MarketInstance market = BlankMarket(1, 3);
  const PreferenceRelation pref = PrefOf(market, "f1", "w2 | w1 w3 | w1 | w3");
  EXPECT_EQ(Choice(Workers(market, "w1 w2 w3"), pref), Workers(market, "w2"));
  EXPECT_EQ(Choice(Workers(market, "w1 w3"), pref), Workers(market, "w1 w3"));
  EXPECT_EQ(Choice(Workers(market, ""), pref), Workers(market, ""));
  EXPECT_THROW(Choice(PartnerSet(Side::kFirm, 1), pref), InvalidArgument);
}

TEST(ChoiceTest, MatchesOracleAndIsIdempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int universe = 1 + trial % 5;
    const PreferenceRelation pref =
        testing::RandomRelation(rng, AgentId::Firm(0), universe, 12);
    for (PartnerSet::Mask s = 0; s < (1u << universe); ++s) {
      const PartnerSet offered(Side::kWorker, s);
      const PartnerSet chosen = Choice(offered, pref);
      ASSERT_EQ(chosen, testing::ChoiceOracle(offered, pref, universe));
      ASSERT_TRUE(chosen.IsSubsetOf(offered));
      ASSERT_EQ(Choice(chosen, pref), chosen);
    }
  }
}

TEST(MatchingTest, MatchedSetReadsBothSides) {
  const MarketInstance market = testing::UnstableManipulationMarket();
  const Matching firm_optimal = RowsOf(market, {"w2 w3", "w1", "w4"});
  const Matching worker_optimal = RowsOf(market, {"w1 w3", "w2", "w4"});
  EXPECT_EQ(MatchedSet(firm_optimal, Agent(market, "f1")),
            Workers(market, "w2 w3"));
  EXPECT_EQ(MatchedSet(worker_optimal, Agent(market, "w2")),
            Firms(market, "f2"));
  EXPECT_EQ(MatchedSet(Matching(3, 4), Agent(market, "w4")),
            Firms(market, ""));
  EXPECT_EQ(MatchedSet(worker_optimal, Agent(market, "w3")),
            Firms(market, "f1"));
}

TEST(MatchingTest, EdgesRoundTripThroughBothViews) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const int m = 1 + (trial / 4) % 5;
    Matching matching(n, m);
    std::bernoulli_distribution coin(0.4);
    for (int f = 0; f < n; ++f) {
      for (int w = 0; w < m; ++w) {
        if (coin(rng)) matching.Add(f, w);
      }
    }
    const Matching rebuilt = Matching::FromEdges(n, m, matching.Edges());
    ASSERT_EQ(rebuilt, matching);
    for (int f = 0; f < n; ++f) {
      for (int w = 0; w < m; ++w) {
        ASSERT_EQ(matching.Partners(AgentId::Firm(f)).contains(w),
                  matching.Partners(AgentId::Worker(w)).contains(f));
      }
    }
    ASSERT_EQ(Matching::FromFirmRows(m, matching.firm_rows()), matching);
  }
}

TEST(MatchingTest, RejectsOutOfRangeEdges) {
  Matching matching(2, 2);
  EXPECT_THROW(matching.Add(2, 0), InvalidArgument);
  EXPECT_THROW(Matching::FromFirmRows(2, {0b100}), InvalidArgument);
  EXPECT_THROW(MatchedSet(matching, AgentId::Worker(5)), InvalidArgument);
}

TEST(ProfileTest, ReplacePreference) {
  const MarketInstance market = testing::UnstableManipulationMarket();
  const Profile& truth = market.profile();
  const AgentId w1 = Agent(market, "w1");
  EXPECT_EQ(ReplacePreference(truth, w1, truth.at(w1)), truth);

  const Profile misreported =
      ReplacePreference(truth, w1, PrefOf(market, "w1", "f3"));
  EXPECT_EQ(misreported.at(w1), PrefOf(market, "w1", "f3"));
  for (const AgentId other : truth.Agents()) {
    if (other != w1) {
      EXPECT_EQ(misreported.at(other), truth.at(other));
    }
  }
  EXPECT_THROW(ReplacePreference(truth, w1, PrefOf(market, "w2", "f1")),
               InvalidArgument);
}

TEST(ProfileTest, ReplacePreferenceBuildsTruncatedFirmProfile) {
  const MarketInstance market = testing::FirmsCannotManipulateMarket();
  const Profile report = ReplacePreference(
      market.profile(), Agent(market, "f1"),
      PrefOf(market, "f1", "w1 w2 | w1 | w2"));
  EXPECT_EQ(DeferredAcceptance(report, Side::kWorker),
            RowsOf(market, {"", "w1 w4", "w2 w3"}));
}

TEST(MarketInstanceTest, NamesAreUniqueAcrossSides) {
  EXPECT_THROW(MarketInstance({"a"}, {"a"}, Profile::Empty(1, 1)),
               InvalidArgument);
  EXPECT_THROW(MarketInstance({"a", "b"}, {"c"}, Profile::Empty(1, 1)),
               InvalidArgument);
  const MarketInstance market({"acme"}, {"ann"}, Profile::Empty(1, 1));
  EXPECT_EQ(market.Find("ann"), AgentId::Worker(0));
  EXPECT_EQ(market.Find("bob"), std::nullopt);
}

}  // namespace
}  // namespace manymatch
