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

#ifndef MANYMATCH_TESTS_TESTING_FIXTURES_H_
#define MANYMATCH_TESTS_TESTING_FIXTURES_H_

// Name-based shorthands so tests can be written against agent names.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "manymatch/market.h"
#include "manymatch/market_io.h"
#include "manymatch/reference_markets.h"

namespace manymatch::testing {

inline AgentId Agent(const MarketInstance& instance, std::string_view name) {
  return instance.Find(name).value();
}

// Space-separated names, all from one side. "" is the empty set of `side`.
inline PartnerSet SetOf(const MarketInstance& instance, Side side,
                        std::string_view names) {
  PartnerSet set(side);
  std::istringstream in{std::string(names)};
  std::string name;
  while (in >> name) {
    const AgentId agent = Agent(instance, name);
    if (agent.side != side) throw std::invalid_argument("wrong side: " + name);
    set = set.With(agent.index);
  }
  return set;
}

inline PartnerSet Workers(const MarketInstance& instance,
                          std::string_view names) {
  return SetOf(instance, Side::kWorker, names);
}

inline PartnerSet Firms(const MarketInstance& instance,
                        std::string_view names) {
  return SetOf(instance, Side::kFirm, names);
}

inline PreferenceRelation PrefOf(const MarketInstance& instance,
                                 std::string_view agent,
                                 std::string_view list) {
  return ParsePreferenceList(list, Agent(instance, agent), instance);
}

// One entry per firm, each a space-separated worker list.
inline Matching RowsOf(const MarketInstance& instance,
                       const std::vector<std::string>& rows) {
  std::vector<PartnerSet::Mask> masks;
  for (const std::string& row : rows) masks.push_back(Workers(instance, row).mask());
  return Matching::FromFirmRows(instance.profile().num_workers(), masks);
}

// Default-named market with every list empty.
inline MarketInstance BlankMarket(int num_firms, int num_workers) {
  std::vector<std::string> firms;
  std::vector<std::string> workers;
  for (int f = 0; f < num_firms; ++f) firms.push_back(DefaultName(AgentId::Firm(f)));
  for (int w = 0; w < num_workers; ++w) {
    workers.push_back(DefaultName(AgentId::Worker(w)));
  }
  return MarketInstance(firms, workers, Profile::Empty(num_firms, num_workers));
}

inline MarketInstance UnstableManipulationMarket() {
  return LoadReferenceMarket("unstable-manipulation");
}
inline MarketInstance FirmsCannotManipulateMarket() {
  return LoadReferenceMarket("firms-cannot-manipulate");
}
inline MarketInstance WorkersCannotManipulateMarket() {
  return LoadReferenceMarket("workers-cannot-manipulate");
}

}  // namespace manymatch::testing

#endif  // MANYMATCH_TESTS_TESTING_FIXTURES_H_
