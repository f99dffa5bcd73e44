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

#ifndef MANYMATCH_STABILITY_H_
#define MANYMATCH_STABILITY_H_

// Individual rationality, pairwise blocking and stability, plus the
// brute-force stable set enumeration every algorithm is checked against.

#include <map>
#include <optional>
#include <vector>

#include "manymatch/market.h"

namespace manymatch {

// Default cap on num_firms * num_workers for EnumerateStable.
inline constexpr int kDefaultMaxEdges = 25;
// Hard ceiling; the edge-set encoding must fit a 64-bit word.
inline constexpr int kHardMaxEdges = 64;

struct BlockingPair {
  AgentId firm;
  AgentId worker;

  friend auto operator<=>(const BlockingPair&, const BlockingPair&) = default;
};

struct RationalityCheck {
  bool rational = true;
  std::vector<AgentId> violators;  // agents with mu(a) != Ch(mu(a))
};

RationalityCheck IsIndividuallyRational(const Matching& matching,
                                        const Profile& profile);

// All pairs (f, w) with w not in mu(f), w in Ch(mu(f) + w, f) and
// f in Ch(mu(w) + f, w), ordered by firm then worker.
std::vector<BlockingPair> BlockingPairs(const Matching& matching,
                                        const Profile& profile);

bool IsStable(const Matching& matching, const Profile& profile);

// S(profile): all stable matchings, sorted by CanonicalLess.
class StableSet {
 public:
  StableSet() = default;
  // Sorts and deduplicates.
  explicit StableSet(std::vector<Matching> matchings);

  const std::vector<Matching>& matchings() const { return matchings_; }
  std::size_t size() const { return matchings_.size(); }
  bool empty() const { return matchings_.empty(); }
  bool Contains(const Matching& matching) const;

  auto begin() const { return matchings_.begin(); }
  auto end() const { return matchings_.end(); }

 private:
  std::vector<Matching> matchings_;
};

// Exhaustive search over edge sets. Throws UnsupportedSize when
// num_firms * num_workers exceeds `max_edges` (itself capped at
// kHardMaxEdges).
StableSet EnumerateStable(const Profile& profile,
                          int max_edges = kDefaultMaxEdges);

struct ConstancyCheck {
  bool holds = true;
  std::optional<AgentId> witness;
};

// |mu(a)| is the same for every mu in the set, for every agent a.
ConstancyCheck CheckSamePartnerCounts(const StableSet& stable);

// Every agent that is under quota at some stable matching has the same
// partner set at every stable matching. `quotas` must cover every agent.
ConstancyCheck CheckUnderfilledConstancy(const StableSet& stable,
                                         const std::map<AgentId, int>& quotas);

}  // namespace manymatch

#endif  // MANYMATCH_STABILITY_H_
