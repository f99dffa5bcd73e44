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

#ifndef MANYMATCH_MARKET_H_
#define MANYMATCH_MARKET_H_

// Core value types of the many-to-many market: agents, partner sets,
// list-represented preference relations, profiles and matchings.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace manymatch {

inline constexpr int kMaxAgentsPerSide = 32;

enum class Side : std::uint8_t { kFirm, kWorker };

constexpr Side Opposite(Side side) {
  return side == Side::kFirm ? Side::kWorker : Side::kFirm;
}

std::string_view SideName(Side side);

struct AgentId {
  Side side = Side::kFirm;
  int index = 0;

  static constexpr AgentId Firm(int index) { return {Side::kFirm, index}; }
  static constexpr AgentId Worker(int index) { return {Side::kWorker, index}; }

  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

// "f3" / "w1" style label, used when no instance names are at hand.
std::string DefaultName(AgentId agent);

// A subset of one side of the market, stored as a bitmask. The side is the
// side the members belong to, i.e. the opposite of whoever holds the set.
class PartnerSet {
 public:
  using Mask = std::uint32_t;

  explicit PartnerSet(Side members_side, Mask mask = 0)
      : side_(members_side), mask_(mask) {}

  static PartnerSet Of(Side members_side, std::initializer_list<int> members);
  static PartnerSet Of(Side members_side, const std::vector<int>& members);

  Side side() const { return side_; }
  Mask mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int index) const;
  std::vector<int> members() const;

  bool IsSubsetOf(const PartnerSet& other) const;
  PartnerSet With(int index) const;
  PartnerSet Without(int index) const;
  PartnerSet Union(const PartnerSet& other) const;
  PartnerSet Intersect(const PartnerSet& other) const;

  friend bool operator==(const PartnerSet&, const PartnerSet&) = default;

 private:
  void RequireSameSide(const PartnerSet& other) const;

  Side side_;
  Mask mask_;
};

// Strict order over the acceptable partner sets of one agent, best first.
// Sets that are not listed are unacceptable; the empty set is implicitly
// ranked right after the last listed entry.
class PreferenceRelation {
 public:
  // Throws InvalidArgument on duplicate, empty or wrong-side entries.
  PreferenceRelation(AgentId owner, std::vector<PartnerSet> ranked);

  const AgentId& owner() const { return owner_; }
  const std::vector<PartnerSet>& ranked() const { return ranked_; }
  Side partner_side() const { return Opposite(owner_.side); }

  // Position of `set` in the order: listed entries get their index, the
  // empty set gets ranked().size(), unacceptable sets get nullopt.
  std::optional<int> Rank(const PartnerSet& set) const;
  bool IsListed(const PartnerSet& set) const;

  // Union of all members mentioned by the relation.
  PartnerSet Support() const;

  friend bool operator==(const PreferenceRelation&,
                         const PreferenceRelation&) = default;

 private:
  AgentId owner_;
  std::vector<PartnerSet> ranked_;
};

// Ch(S, pref): the first listed entry contained in S, else the empty set.
PartnerSet Choice(const PartnerSet& offered, const PreferenceRelation& pref);

class Profile {
 public:
  Profile(std::vector<PreferenceRelation> firm_prefs,
          std::vector<PreferenceRelation> worker_prefs);

  // Every agent declares every nonempty set unacceptable.
  static Profile Empty(int num_firms, int num_workers);

  int num_firms() const { return static_cast<int>(firm_prefs_.size()); }
  int num_workers() const { return static_cast<int>(worker_prefs_.size()); }
  int num_agents(Side side) const {
    return side == Side::kFirm ? num_firms() : num_workers();
  }

  const PreferenceRelation& at(AgentId agent) const;
  const std::vector<PreferenceRelation>& firm_prefs() const {
    return firm_prefs_;
  }
  const std::vector<PreferenceRelation>& worker_prefs() const {
    return worker_prefs_;
  }

  // Firms first, then workers.
  std::vector<AgentId> Agents() const;
  bool IsValidAgent(AgentId agent) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<PreferenceRelation> firm_prefs_;
  std::vector<PreferenceRelation> worker_prefs_;
};

// (p_{-a}, pref): a copy of `profile` with the relation of pref.owner()
// replaced.
Profile ReplacePreference(const Profile& profile, AgentId agent,
                          PreferenceRelation pref);

// An arbitrary set of firm-worker edges. The per-agent views are derived
// from the edge set, so w in mu(f) iff f in mu(w) always holds.
class Matching {
 public:
  Matching(int num_firms, int num_workers);

  // rows[f] is the worker mask of firm f.
  static Matching FromFirmRows(int num_workers,
                               std::vector<PartnerSet::Mask> rows);
  static Matching FromEdges(int num_firms, int num_workers,
                            const std::vector<std::pair<int, int>>& edges);

  int num_firms() const { return static_cast<int>(rows_.size()); }
  int num_workers() const { return num_workers_; }

  void Add(int firm, int worker);
  void Remove(int firm, int worker);
  bool Contains(int firm, int worker) const;

  PartnerSet Partners(AgentId agent) const;
  const std::vector<PartnerSet::Mask>& firm_rows() const { return rows_; }
  // (firm, worker) pairs in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;
  int num_edges() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  void CheckIndices(int firm, int worker) const;

  int num_workers_;
  std::vector<PartnerSet::Mask> rows_;
};

// mu(a).
PartnerSet MatchedSet(const Matching& matching, AgentId agent);

// Order by the integer whose bit (f * num_workers + w) is set for each edge.
bool CanonicalLess(const Matching& lhs, const Matching& rhs);

// A market (F, W, profile) with display names for both sides.
class MarketInstance {
 public:
  MarketInstance(std::vector<std::string> firm_names,
                 std::vector<std::string> worker_names, Profile profile);

  const std::vector<std::string>& firm_names() const { return firm_names_; }
  const std::vector<std::string>& worker_names() const {
    return worker_names_;
  }
  const Profile& profile() const { return profile_; }

  const std::string& Name(AgentId agent) const;
  std::optional<AgentId> Find(std::string_view name) const;
  MarketInstance WithProfile(Profile profile) const;

  friend bool operator==(const MarketInstance&,
                         const MarketInstance&) = default;

 private:
  std::vector<std::string> firm_names_;
  std::vector<std::string> worker_names_;
  Profile profile_;
};

}  // namespace manymatch

#endif  // MANYMATCH_MARKET_H_
