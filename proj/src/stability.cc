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

#include "manymatch/stability.h"

#include <algorithm>
#include <bit>
#include <string>

#include "manymatch/errors.h"

namespace manymatch {
namespace {

using Mask = PartnerSet::Mask;

void RequireSameShape(const Matching& matching, const Profile& profile) {
  if (matching.num_firms() != profile.num_firms() ||
      matching.num_workers() != profile.num_workers()) {
    throw InvalidArgument("matching and profile have different dimensions");
  }
}

std::vector<AgentId> AgentsOf(const Matching& matching) {
  std::vector<AgentId> out;
  for (int f = 0; f < matching.num_firms(); ++f) {
    out.push_back(AgentId::Firm(f));
  }
  for (int w = 0; w < matching.num_workers(); ++w) {
    out.push_back(AgentId::Worker(w));
  }
  return out;
}

// Depth-first search over firm rows. A firm's row must be empty or one of
// its listed sets (otherwise the firm blocks), and every worker's partial
// column must stay inside one of its listed sets for the same reason. Leaves
// get the full stability test.
class StableSearch {
 public:
  explicit StableSearch(const Profile& profile)
      : profile_(profile),
        rows_(profile.num_firms(), 0),
        columns_(profile.num_workers(), 0) {
    for (const PreferenceRelation& pref : profile.firm_prefs()) {
      std::vector<Mask> options{0};
      for (const PartnerSet& set : pref.ranked()) {
        if (Choice(set, pref) == set) options.push_back(set.mask());
      }
      row_options_.push_back(std::move(options));
    }
    for (const PreferenceRelation& pref : profile.worker_prefs()) {
      std::vector<Mask> listed;
      for (const PartnerSet& set : pref.ranked()) listed.push_back(set.mask());
      worker_listed_.push_back(std::move(listed));
    }
  }

  std::vector<Matching> Run() {
    Visit(0);
    return std::move(found_);
  }

 private:
  bool ColumnFeasible(int worker) const {
    const Mask column = columns_[worker];
    if (column == 0) return true;
    for (Mask listed : worker_listed_[worker]) {
      if ((column & ~listed) == 0) return true;
    }
    return false;
  }

  void Visit(int firm) {
    if (firm == profile_.num_firms()) {
      Matching candidate =
          Matching::FromFirmRows(profile_.num_workers(), rows_);
      if (IsStable(candidate, profile_)) found_.push_back(std::move(candidate));
      return;
    }
    const Mask firm_bit = Mask{1} << firm;
    for (Mask row : row_options_[firm]) {
      bool feasible = true;
      for (Mask m = row; m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        columns_[w] |= firm_bit;
        if (!ColumnFeasible(w)) feasible = false;
      }
      if (feasible) {
        rows_[firm] = row;
        Visit(firm + 1);
        rows_[firm] = 0;
      }
      for (Mask m = row; m != 0; m &= m - 1) {
        columns_[std::countr_zero(m)] &= ~firm_bit;
      }
    }
  }

  const Profile& profile_;
  std::vector<std::vector<Mask>> row_options_;
  std::vector<std::vector<Mask>> worker_listed_;
  std::vector<Mask> rows_;
  std::vector<Mask> columns_;
  std::vector<Matching> found_;
};

}  // namespace

RationalityCheck IsIndividuallyRational(const Matching& matching,
                                        const Profile& profile) {
  RequireSameShape(matching, profile);
  RationalityCheck out;
  for (AgentId a : profile.Agents()) {
    const PartnerSet assigned = MatchedSet(matching, a);
    if (Choice(assigned, profile.at(a)) != assigned) {
      out.rational = false;
      out.violators.push_back(a);
    }
  }
  return out;
}

std::vector<BlockingPair> BlockingPairs(const Matching& matching,
                                        const Profile& profile) {
  RequireSameShape(matching, profile);
  std::vector<PartnerSet> worker_sets;
  for (int w = 0; w < profile.num_workers(); ++w) {
    worker_sets.push_back(MatchedSet(matching, AgentId::Worker(w)));
  }
  std::vector<BlockingPair> out;
  for (int f = 0; f < profile.num_firms(); ++f) {
    const AgentId firm = AgentId::Firm(f);
    const PartnerSet firm_set = MatchedSet(matching, firm);
    for (int w = 0; w < profile.num_workers(); ++w) {
      if (firm_set.contains(w)) continue;
      const AgentId worker = AgentId::Worker(w);
      if (Choice(firm_set.With(w), profile.at(firm)).contains(w) &&
          Choice(worker_sets[w].With(f), profile.at(worker)).contains(f)) {
        out.push_back({firm, worker});
      }
    }
  }
  return out;
}

bool IsStable(const Matching& matching, const Profile& profile) {
  return IsIndividuallyRational(matching, profile).rational &&
         BlockingPairs(matching, profile).empty();
}

StableSet::StableSet(std::vector<Matching> matchings)
    : matchings_(std::move(matchings)) {
  std::sort(matchings_.begin(), matchings_.end(), CanonicalLess);
  matchings_.erase(std::unique(matchings_.begin(), matchings_.end()),
                   matchings_.end());
}

bool StableSet::Contains(const Matching& matching) const {
  return std::binary_search(matchings_.begin(), matchings_.end(), matching,
                            CanonicalLess);
}

StableSet EnumerateStable(const Profile& profile, int max_edges) {
  const int cap = std::min(max_edges, kHardMaxEdges);
  const int edges = profile.num_firms() * profile.num_workers();
  if (edges > cap) {
    throw UnsupportedSize("stable enumeration over " + std::to_string(edges) +
                          " potential edges exceeds the cap of " +
                          std::to_string(cap) + " (max-edges)");
  }
  return StableSet(StableSearch(profile).Run());
}

ConstancyCheck CheckSamePartnerCounts(const StableSet& stable) {
  if (stable.empty()) {
    throw InvalidArgument("partner-count check needs a nonempty stable set");
  }
  const Matching& first = stable.matchings().front();
  for (AgentId a : AgentsOf(first)) {
    const int count = MatchedSet(first, a).size();
    for (const Matching& other : stable) {
      if (MatchedSet(other, a).size() != count) return {false, a};
    }
  }
  return {};
}

ConstancyCheck CheckUnderfilledConstancy(
    const StableSet& stable, const std::map<AgentId, int>& quotas) {
  if (stable.empty()) return {};
  const Matching& first = stable.matchings().front();
  const std::vector<AgentId> agents = AgentsOf(first);
  for (AgentId a : agents) {
    if (!quotas.contains(a)) {
      throw InvalidArgument("no quota given for " + DefaultName(a));
    }
  }
  for (AgentId a : agents) {
    const int quota = quotas.at(a);
    const bool underfilled =
        std::any_of(stable.begin(), stable.end(), [&](const Matching& mu) {
          return MatchedSet(mu, a).size() < quota;
        });
    if (!underfilled) continue;
    const PartnerSet reference = MatchedSet(first, a);
    for (const Matching& mu : stable) {
      if (MatchedSet(mu, a) != reference) return {false, a};
    }
  }
  return {};
}

}  // namespace manymatch
