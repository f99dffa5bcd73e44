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

#include "manymatch/solver.h"

#include <bit>
#include <string>
#include <vector>

#include "manymatch/axioms.h"
#include "manymatch/errors.h"

namespace manymatch {
namespace {

using Mask = PartnerSet::Mask;

void RequireSubstitutable(const Profile& profile) {
  for (AgentId a : profile.Agents()) {
    if (!CheckSubstitutable(profile.at(a)).holds) {
      throw PreconditionError(
          "deferred acceptance needs substitutable preferences; " +
          DefaultName(a) + " violates substitutability");
    }
  }
}

}  // namespace

std::string_view VerdictName(OrderVerdict verdict) {
  switch (verdict) {
    case OrderVerdict::kBetterStrict:
      return "better";
    case OrderVerdict::kEqual:
      return "equal";
    case OrderVerdict::kWorseStrict:
      return "worse";
    case OrderVerdict::kIncomparable:
      return "incomparable";
  }
  return "?";
}

std::string_view RuleName(StableRule rule) {
  switch (rule) {
    case StableRule::kFirmOptimal:
      return "firm-optimal";
    case StableRule::kWorkerOptimal:
      return "worker-optimal";
    case StableRule::kSelectFirst:
      return "select-first";
    case StableRule::kSelectLast:
      return "select-last";
  }
  return "?";
}

std::optional<StableRule> ParseRule(std::string_view name) {
  for (StableRule rule :
       {StableRule::kFirmOptimal, StableRule::kWorkerOptimal,
        StableRule::kSelectFirst, StableRule::kSelectLast}) {
    if (RuleName(rule) == name) return rule;
  }
  return std::nullopt;
}

DeferredAcceptanceResult RunDeferredAcceptance(const Profile& profile,
                                               Side proposing) {
  RequireSubstitutable(profile);
  const Side receiving = Opposite(proposing);
  const int num_proposers = profile.num_agents(proposing);
  const int num_receivers = profile.num_agents(receiving);
  const Mask all_receivers =
      num_receivers == 32 ? ~Mask{0} : (Mask{1} << num_receivers) - 1;

  std::vector<Mask> rejected(num_proposers, 0);
  std::vector<Mask> offers(num_proposers, 0);
  std::vector<Mask> held(num_receivers, 0);
  DeferredAcceptanceResult result{Matching(profile.num_firms(),
                                           profile.num_workers())};
  while (true) {
    ++result.rounds;
    for (int p = 0; p < num_proposers; ++p) {
      const PartnerSet available(receiving, all_receivers & ~rejected[p]);
      offers[p] = Choice(available, profile.at({proposing, p})).mask();
    }
    bool new_rejection = false;
    for (int r = 0; r < num_receivers; ++r) {
      Mask received = 0;
      for (int p = 0; p < num_proposers; ++p) {
        if ((offers[p] >> r) & 1u) received |= Mask{1} << p;
      }
      held[r] =
          Choice(PartnerSet(proposing, received), profile.at({receiving, r}))
              .mask();
      for (Mask m = received & ~held[r]; m != 0; m &= m - 1) {
        rejected[std::countr_zero(m)] |= Mask{1} << r;
        ++result.rejections;
        new_rejection = true;
      }
    }
    if (!new_rejection) break;
  }

  for (int p = 0; p < num_proposers; ++p) {
    for (Mask m = offers[p]; m != 0; m &= m - 1) {
      const int r = std::countr_zero(m);
      if (!((held[r] >> p) & 1u)) continue;
      if (proposing == Side::kFirm) {
        result.matching.Add(p, r);
      } else {
        result.matching.Add(r, p);
      }
    }
  }
  return result;
}

OrderVerdict CompareCommon(const Matching& lhs, const Matching& rhs,
                           AgentId agent, const Profile& profile) {
  const PartnerSet a = MatchedSet(lhs, agent);
  const PartnerSet b = MatchedSet(rhs, agent);
  if (a == b) return OrderVerdict::kEqual;
  const PreferenceRelation& pref = profile.at(agent);
  const auto ra = pref.Rank(a);
  const auto rb = pref.Rank(b);
  if (!ra && !rb) return OrderVerdict::kIncomparable;
  if (!rb || (ra && *ra < *rb)) return OrderVerdict::kBetterStrict;
  return OrderVerdict::kWorseStrict;
}

OrderVerdict CompareBlair(const Matching& lhs, const Matching& rhs,
                          AgentId agent, const Profile& profile) {
  const PartnerSet a = MatchedSet(lhs, agent);
  const PartnerSet b = MatchedSet(rhs, agent);
  if (a == b) return OrderVerdict::kEqual;
  const PartnerSet best = Choice(a.Union(b), profile.at(agent));
  if (best == a) return OrderVerdict::kBetterStrict;
  if (best == b) return OrderVerdict::kWorseStrict;
  return OrderVerdict::kIncomparable;
}

std::optional<Matching> SideOptimal(const StableSet& stable,
                                    const Profile& profile, Side side) {
  for (const Matching& candidate : stable) {
    bool dominates = true;
    for (int i = 0; dominates && i < profile.num_agents(side); ++i) {
      for (const Matching& other : stable) {
        const OrderVerdict v =
            CompareCommon(candidate, other, {side, i}, profile);
        if (v != OrderVerdict::kBetterStrict && v != OrderVerdict::kEqual) {
          dominates = false;
          break;
        }
      }
    }
    if (dominates) return candidate;
  }
  return std::nullopt;
}

Matching ApplyRule(StableRule rule, const Profile& profile, int max_edges) {
  switch (rule) {
    case StableRule::kFirmOptimal:
      return DeferredAcceptance(profile, Side::kFirm);
    case StableRule::kWorkerOptimal:
      return DeferredAcceptance(profile, Side::kWorker);
    case StableRule::kSelectFirst:
    case StableRule::kSelectLast: {
      const StableSet stable = EnumerateStable(profile, max_edges);
      if (stable.empty()) {
        throw NoStableMatching("the profile has no stable matching");
      }
      return rule == StableRule::kSelectFirst ? stable.matchings().front()
                                              : stable.matchings().back();
    }
  }
  throw InvalidArgument("unknown rule");
}

}  // namespace manymatch
