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

#ifndef MANYMATCH_SOLVER_H_
#define MANYMATCH_SOLVER_H_

// Generalized deferred acceptance, side-optimal selection over an enumerated
// stable set, the common and Blair orders, and stable matching rules.

#include <optional>
#include <string_view>

#include "manymatch/market.h"
#include "manymatch/stability.h"

namespace manymatch {

enum class OrderVerdict { kBetterStrict, kEqual, kWorseStrict, kIncomparable };

std::string_view VerdictName(OrderVerdict verdict);

// A stable matching rule h. The selectors pick the first or last member of
// the canonically ordered stable set, which in general is neither optimum.
enum class StableRule { kFirmOptimal, kWorkerOptimal, kSelectFirst, kSelectLast };

std::string_view RuleName(StableRule rule);
// Accepts the RuleName spellings; nullopt otherwise.
std::optional<StableRule> ParseRule(std::string_view name);

struct DeferredAcceptanceResult {
  Matching matching;
  int rounds = 0;
  int rejections = 0;
};

// Batch-offer deferred acceptance. Each round every proposer a offers to
// Ch(opposite \ R_a); each receiver keeps its choice among the offers it got
// and rejects the rest, which enter the rejecting proposer's R_a. The loop
// ends on the first round without a new rejection.
//
// Throws PreconditionError naming the first agent whose relation is not
// substitutable.
DeferredAcceptanceResult RunDeferredAcceptance(const Profile& profile,
                                               Side proposing);

inline Matching DeferredAcceptance(const Profile& profile, Side proposing) {
  return RunDeferredAcceptance(profile, proposing).matching;
}

// mu(a) against mu'(a) in a's listed order. Unlisted sets rank below the
// empty set and are incomparable with each other.
OrderVerdict CompareCommon(const Matching& lhs, const Matching& rhs,
                           AgentId agent, const Profile& profile);

// Blair order: lhs is at least as good as rhs for a iff
// mu(a) = Ch(mu(a) u mu'(a)).
OrderVerdict CompareBlair(const Matching& lhs, const Matching& rhs,
                          AgentId agent, const Profile& profile);

// The member of `stable` weakly preferred (common order) to every other
// member by every agent of `side`, if one exists.
std::optional<Matching> SideOptimal(const StableSet& stable,
                                    const Profile& profile, Side side);

// h(profile). Selector rules enumerate the stable set (subject to
// `max_edges`) and throw NoStableMatching when it is empty.
Matching ApplyRule(StableRule rule, const Profile& profile,
                   int max_edges = kDefaultMaxEdges);

}  // namespace manymatch

#endif  // MANYMATCH_SOLVER_H_
