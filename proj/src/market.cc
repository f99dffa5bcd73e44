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

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "manymatch/errors.h"

namespace manymatch {
namespace {

PartnerSet::Mask Bit(int index) {
  if (index < 0 || index >= kMaxAgentsPerSide) {
    throw InvalidArgument("agent index " + std::to_string(index) +
                          " outside [0, " +
                          std::to_string(kMaxAgentsPerSide) + ")");
  }
  return PartnerSet::Mask{1} << index;
}

PartnerSet::Mask LowMask(int count) {
  return count >= kMaxAgentsPerSide ? ~PartnerSet::Mask{0}
                                    : (PartnerSet::Mask{1} << count) - 1;
}

}  // namespace

std::string_view SideName(Side side) {
  return side == Side::kFirm ? "firm" : "worker";
}

std::string DefaultName(AgentId agent) {
  return (agent.side == Side::kFirm ? "f" : "w") +
         std::to_string(agent.index + 1);
}

PartnerSet PartnerSet::Of(Side members_side,
                          std::initializer_list<int> members) {
  return Of(members_side, std::vector<int>(members));
}

PartnerSet PartnerSet::Of(Side members_side, const std::vector<int>& members) {
  Mask mask = 0;
  for (int m : members) mask |= Bit(m);
  return PartnerSet(members_side, mask);
}

int PartnerSet::size() const { return std::popcount(mask_); }

bool PartnerSet::contains(int index) const {
  return index >= 0 && index < kMaxAgentsPerSide && (mask_ >> index) & 1u;
}

std::vector<int> PartnerSet::members() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void PartnerSet::RequireSameSide(const PartnerSet& other) const {
  if (side_ != other.side_) {
    throw InvalidArgument("partner sets drawn from different sides");
  }
}

bool PartnerSet::IsSubsetOf(const PartnerSet& other) const {
  RequireSameSide(other);
  return (mask_ & ~other.mask_) == 0;
}

PartnerSet PartnerSet::With(int index) const {
  return PartnerSet(side_, mask_ | Bit(index));
}

PartnerSet PartnerSet::Without(int index) const {
  return PartnerSet(side_, mask_ & ~Bit(index));
}

PartnerSet PartnerSet::Union(const PartnerSet& other) const {
  RequireSameSide(other);
  return PartnerSet(side_, mask_ | other.mask_);
}

PartnerSet PartnerSet::Intersect(const PartnerSet& other) const {
  RequireSameSide(other);
  return PartnerSet(side_, mask_ & other.mask_);
}

PreferenceRelation::PreferenceRelation(AgentId owner,
                                       std::vector<PartnerSet> ranked)
    : owner_(owner), ranked_(std::move(ranked)) {
  if (owner_.index < 0 || owner_.index >= kMaxAgentsPerSide) {
    throw InvalidArgument("owner index out of range");
  }
  std::set<PartnerSet::Mask> seen;
  for (const PartnerSet& entry : ranked_) {
    if (entry.side() != partner_side()) {
      throw InvalidArgument("preference of " + DefaultName(owner_) +
                            " lists a set from its own side");
    }
    if (entry.empty()) {
      throw InvalidArgument("preference of " + DefaultName(owner_) +
                            " lists the empty set explicitly");
    }
    if (!seen.insert(entry.mask()).second) {
      throw InvalidArgument("preference of " + DefaultName(owner_) +
                            " lists the same set twice");
    }
  }
}

std::optional<int> PreferenceRelation::Rank(const PartnerSet& set) const {
  if (set.side() != partner_side()) {
    throw InvalidArgument("rank query with a set from the owner's side");
  }
  if (set.empty()) return static_cast<int>(ranked_.size());
  for (std::size_t i = 0; i < ranked_.size(); ++i) {
    if (ranked_[i].mask() == set.mask()) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool PreferenceRelation::IsListed(const PartnerSet& set) const {
  return !set.empty() && Rank(set).has_value();
}

PartnerSet PreferenceRelation::Support() const {
  PartnerSet::Mask mask = 0;
  for (const PartnerSet& entry : ranked_) mask |= entry.mask();
  return PartnerSet(partner_side(), mask);
}

PartnerSet Choice(const PartnerSet& offered, const PreferenceRelation& pref) {
  if (offered.side() != pref.partner_side()) {
    throw InvalidArgument("choice of " + DefaultName(pref.owner()) +
                          " over a set of its own side");
  }
  for (const PartnerSet& entry : pref.ranked()) {
    if ((entry.mask() & ~offered.mask()) == 0) return entry;
  }
  return PartnerSet(offered.side());
}

Profile::Profile(std::vector<PreferenceRelation> firm_prefs,
                 std::vector<PreferenceRelation> worker_prefs)
    : firm_prefs_(std::move(firm_prefs)),
      worker_prefs_(std::move(worker_prefs)) {
  if (num_firms() > kMaxAgentsPerSide || num_workers() > kMaxAgentsPerSide) {
    throw UnsupportedSize("at most " + std::to_string(kMaxAgentsPerSide) +
                          " agents per side are supported");
  }
  auto check = [](const std::vector<PreferenceRelation>& prefs, Side side,
                  int opposite_count) {
    const PartnerSet::Mask allowed = LowMask(opposite_count);
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      const AgentId expected{side, static_cast<int>(i)};
      if (prefs[i].owner() != expected) {
        throw InvalidArgument("profile slot " + DefaultName(expected) +
                              " holds the relation of " +
                              DefaultName(prefs[i].owner()));
      }
      if ((prefs[i].Support().mask() & ~allowed) != 0) {
        throw InvalidArgument("preference of " + DefaultName(expected) +
                              " names a partner outside the market");
      }
    }
  };
  check(firm_prefs_, Side::kFirm, num_workers());
  check(worker_prefs_, Side::kWorker, num_firms());
}

Profile Profile::Empty(int num_firms, int num_workers) {
  std::vector<PreferenceRelation> firms;
  std::vector<PreferenceRelation> workers;
  for (int f = 0; f < num_firms; ++f) {
    firms.emplace_back(AgentId::Firm(f), std::vector<PartnerSet>{});
  }
  for (int w = 0; w < num_workers; ++w) {
    workers.emplace_back(AgentId::Worker(w), std::vector<PartnerSet>{});
  }
  return Profile(std::move(firms), std::move(workers));
}

const PreferenceRelation& Profile::at(AgentId agent) const {
  if (!IsValidAgent(agent)) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  return agent.side == Side::kFirm ? firm_prefs_[agent.index]
                                   : worker_prefs_[agent.index];
}

std::vector<AgentId> Profile::Agents() const {
  std::vector<AgentId> out;
  for (int f = 0; f < num_firms(); ++f) out.push_back(AgentId::Firm(f));
  for (int w = 0; w < num_workers(); ++w) out.push_back(AgentId::Worker(w));
  return out;
}

bool Profile::IsValidAgent(AgentId agent) const {
  return agent.index >= 0 && agent.index < num_agents(agent.side);
}

Profile ReplacePreference(const Profile& profile, AgentId agent,
                          PreferenceRelation pref) {
  if (pref.owner() != agent) {
    throw InvalidArgument("replacement relation belongs to " +
                          DefaultName(pref.owner()) + ", not " +
                          DefaultName(agent));
  }
  if (!profile.IsValidAgent(agent)) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  std::vector<PreferenceRelation> firms = profile.firm_prefs();
  std::vector<PreferenceRelation> workers = profile.worker_prefs();
  auto& slot = agent.side == Side::kFirm ? firms : workers;
  slot[agent.index] = std::move(pref);
  return Profile(std::move(firms), std::move(workers));
}

Matching::Matching(int num_firms, int num_workers)
    : num_workers_(num_workers) {
  if (num_firms < 0 || num_workers < 0 || num_firms > kMaxAgentsPerSide ||
      num_workers > kMaxAgentsPerSide) {
    throw UnsupportedSize("matching dimensions out of range");
  }
  rows_.assign(num_firms, 0);
}

Matching Matching::FromFirmRows(int num_workers,
                                std::vector<PartnerSet::Mask> rows) {
  Matching out(static_cast<int>(rows.size()), num_workers);
  const PartnerSet::Mask allowed = LowMask(num_workers);
  for (PartnerSet::Mask row : rows) {
    if ((row & ~allowed) != 0) {
      throw InvalidArgument("matching row names a worker outside the market");
    }
  }
  out.rows_ = std::move(rows);
  return out;
}

Matching Matching::FromEdges(int num_firms, int num_workers,
                             const std::vector<std::pair<int, int>>& edges) {
  Matching out(num_firms, num_workers);
  for (const auto& [f, w] : edges) out.Add(f, w);
  return out;
}

void Matching::CheckIndices(int firm, int worker) const {
  if (firm < 0 || firm >= num_firms() || worker < 0 ||
      worker >= num_workers_) {
    throw InvalidArgument("edge (" + std::to_string(firm) + ", " +
                          std::to_string(worker) + ") outside the market");
  }
}

void Matching::Add(int firm, int worker) {
  CheckIndices(firm, worker);
  rows_[firm] |= PartnerSet::Mask{1} << worker;
}

void Matching::Remove(int firm, int worker) {
  CheckIndices(firm, worker);
  rows_[firm] &= ~(PartnerSet::Mask{1} << worker);
}

bool Matching::Contains(int firm, int worker) const {
  CheckIndices(firm, worker);
  return (rows_[firm] >> worker) & 1u;
}

PartnerSet Matching::Partners(AgentId agent) const {
  if (agent.side == Side::kFirm) {
    if (agent.index < 0 || agent.index >= num_firms()) {
      throw InvalidArgument("unknown agent " + DefaultName(agent));
    }
    return PartnerSet(Side::kWorker, rows_[agent.index]);
  }
  if (agent.index < 0 || agent.index >= num_workers_) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  PartnerSet::Mask mask = 0;
  for (int f = 0; f < num_firms(); ++f) {
    if ((rows_[f] >> agent.index) & 1u) mask |= PartnerSet::Mask{1} << f;
  }
  return PartnerSet(Side::kFirm, mask);
}

std::vector<std::pair<int, int>> Matching::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < num_firms(); ++f) {
    for (int w : PartnerSet(Side::kWorker, rows_[f]).members()) {
      out.emplace_back(f, w);
    }
  }
  return out;
}

int Matching::num_edges() const {
  int total = 0;
  for (PartnerSet::Mask row : rows_) total += std::popcount(row);
  return total;
}

PartnerSet MatchedSet(const Matching& matching, AgentId agent) {
  return matching.Partners(agent);
}

bool CanonicalLess(const Matching& lhs, const Matching& rhs) {
  if (lhs.num_firms() != rhs.num_firms() ||
      lhs.num_workers() != rhs.num_workers()) {
    throw InvalidArgument("comparing matchings of different markets");
  }
  // Higher firm indices own the more significant bits.
  for (int f = lhs.num_firms() - 1; f >= 0; --f) {
    const auto a = lhs.firm_rows()[f];
    const auto b = rhs.firm_rows()[f];
    if (a != b) return a < b;
  }
  return false;
}

MarketInstance::MarketInstance(std::vector<std::string> firm_names,
                               std::vector<std::string> worker_names,
                               Profile profile)
    : firm_names_(std::move(firm_names)),
      worker_names_(std::move(worker_names)),
      profile_(std::move(profile)) {
  if (static_cast<int>(firm_names_.size()) != profile_.num_firms() ||
      static_cast<int>(worker_names_.size()) != profile_.num_workers()) {
    throw InvalidArgument("name lists do not match the profile dimensions");
  }
  std::set<std::string> seen;
  for (const auto* names : {&firm_names_, &worker_names_}) {
    for (const std::string& name : *names) {
      if (name.empty()) throw InvalidArgument("empty agent name");
      if (!seen.insert(name).second) {
        throw InvalidArgument("duplicate agent name '" + name + "'");
      }
    }
  }
}

const std::string& MarketInstance::Name(AgentId agent) const {
  if (!profile_.IsValidAgent(agent)) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  return agent.side == Side::kFirm ? firm_names_[agent.index]
                                   : worker_names_[agent.index];
}

std::optional<AgentId> MarketInstance::Find(std::string_view name) const {
  for (std::size_t i = 0; i < firm_names_.size(); ++i) {
    if (firm_names_[i] == name) return AgentId::Firm(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < worker_names_.size(); ++i) {
    if (worker_names_[i] == name) return AgentId::Worker(static_cast<int>(i));
  }
  return std::nullopt;
}

MarketInstance MarketInstance::WithProfile(Profile profile) const {
  return MarketInstance(firm_names_, worker_names_, std::move(profile));
}

}  // namespace manymatch
