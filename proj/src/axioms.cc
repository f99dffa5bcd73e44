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

#include "manymatch/axioms.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "manymatch/errors.h"

namespace manymatch {
namespace {

using Mask = PartnerSet::Mask;

PartnerSet RequireSmallSupport(const PreferenceRelation& pref) {
  PartnerSet support = pref.Support();
  if (support.size() > kMaxAxiomUniverse) {
    throw UnsupportedSize("axiom check over " + std::to_string(support.size()) +
                          " partners exceeds the cap of " +
                          std::to_string(kMaxAxiomUniverse));
  }
  return support;
}

// All submasks of `universe`, ascending.
std::vector<Mask> Submasks(Mask universe) {
  std::vector<Mask> out;
  Mask s = 0;
  do {
    out.push_back(s);
    s = (s - universe) & universe;
  } while (s != 0);
  return out;
}

// a strictly preferred to b; unlisted sets rank below everything listed and
// below the empty set.
bool StrictlyBetter(const PreferenceRelation& pref, const PartnerSet& a,
                    const PartnerSet& b) {
  const auto ra = pref.Rank(a);
  const auto rb = pref.Rank(b);
  return ra.has_value() && (!rb.has_value() || *ra < *rb);
}

}  // namespace

std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kSubstitutability:
      return "substitutable";
    case Axiom::kLad:
      return "lad";
    case Axiom::kResponsive:
      return "responsive";
  }
  return "?";
}

AxiomReport CheckSubstitutable(const PreferenceRelation& pref) {
  const PartnerSet support = RequireSmallSupport(pref);
  const Side side = pref.partner_side();
  AxiomReport report{Axiom::kSubstitutability, true, std::nullopt};
  for (Mask s : Submasks(support.mask())) {
    const PartnerSet offered(side, s);
    const PartnerSet chosen = Choice(offered, pref);
    for (int w : chosen.members()) {
      for (int w2 : offered.members()) {
        if (w2 == w) continue;
        const PartnerSet reduced = offered.Without(w2);
        if (!Choice(reduced, pref).contains(w)) {
          report.holds = false;
          report.witness = AxiomWitness{pref.owner(), offered, reduced, w, w2};
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport CheckLad(const PreferenceRelation& pref) {
  const PartnerSet support = RequireSmallSupport(pref);
  const Side side = pref.partner_side();
  AxiomReport report{Axiom::kLad, true, std::nullopt};
  std::vector<Mask> subsets = Submasks(support.mask());
  std::reverse(subsets.begin(), subsets.end());
  for (Mask x : subsets) {
    const PartnerSet larger(side, x);
    const int larger_demand = Choice(larger, pref).size();
    for (int removed : larger.members()) {
      const PartnerSet smaller = larger.Without(removed);
      if (Choice(smaller, pref).size() > larger_demand) {
        report.holds = false;
        report.witness =
            AxiomWitness{pref.owner(), larger, smaller, std::nullopt, removed};
        return report;
      }
    }
  }
  return report;
}

bool WitnessViolates(const AxiomReport& report, const PreferenceRelation& pref,
                     const QuotaRanking* ranking) {
  if (report.holds || !report.witness) return false;
  const AxiomWitness& w = *report.witness;
  if (w.agent != pref.owner()) return false;
  switch (report.axiom) {
    case Axiom::kSubstitutability:
      return w.kept && w.removed && *w.kept != *w.removed &&
             w.larger.contains(*w.kept) && w.larger.contains(*w.removed) &&
             w.smaller == w.larger.Without(*w.removed) &&
             Choice(w.larger, pref).contains(*w.kept) &&
             !Choice(w.smaller, pref).contains(*w.kept);
    case Axiom::kLad:
      return w.smaller.IsSubsetOf(w.larger) &&
             Choice(w.smaller, pref).size() > Choice(w.larger, pref).size();
    case Axiom::kResponsive: {
      if (ranking == nullptr) return false;
      const std::vector<int>& order = ranking->individual_ranking;
      auto rank_of = [&](int who) {
        return static_cast<int>(std::find(order.begin(), order.end(), who) -
                                order.begin());
      };
      const int n = static_cast<int>(order.size());
      if (w.kept && w.removed) {
        // Swapping `removed` out for the better-ranked `kept`.
        return rank_of(*w.kept) < rank_of(*w.removed) &&
               w.larger.contains(*w.removed) && !w.larger.contains(*w.kept) &&
               w.smaller == w.larger.Without(*w.removed).With(*w.kept) &&
               !StrictlyBetter(pref, w.smaller, w.larger);
      }
      if (w.kept) {
        // Adding an acceptable individual below quota.
        return rank_of(*w.kept) < n && w.smaller.size() < ranking->quota &&
               w.larger == w.smaller.With(*w.kept) &&
               !w.smaller.contains(*w.kept) &&
               !StrictlyBetter(pref, w.larger, w.smaller);
      }
      // Acceptability mismatch on w.larger.
      Mask acceptable = 0;
      for (int who : order) acceptable |= Mask{1} << who;
      const bool should_list = !w.larger.empty() &&
                               (w.larger.mask() & ~acceptable) == 0 &&
                               w.larger.size() <= ranking->quota;
      return should_list != pref.IsListed(w.larger);
    }
  }
  return false;
}

PreferenceRelation ResponsivePreference(const QuotaRanking& ranking) {
  const std::vector<int>& order = ranking.individual_ranking;
  if (ranking.quota < 1) throw InvalidArgument("quota must be positive");
  std::set<int> distinct(order.begin(), order.end());
  if (distinct.size() != order.size()) {
    throw InvalidArgument("individual ranking of " +
                          DefaultName(ranking.owner) + " repeats a partner");
  }
  if (static_cast<int>(order.size()) > kMaxAxiomUniverse) {
    throw UnsupportedSize("responsive extension over more than " +
                          std::to_string(kMaxAxiomUniverse) + " partners");
  }
  const Side side = Opposite(ranking.owner.side);
  const int n = static_cast<int>(order.size());
  const int quota = std::min(ranking.quota, n);

  // Subsets of ranking positions, as ascending rank vectors.
  std::vector<std::vector<int>> rank_vectors;
  for (Mask positions = 1; positions < (Mask{1} << n); ++positions) {
    if (std::popcount(positions) > quota) continue;
    std::vector<int> ranks;
    for (Mask m = positions; m != 0; m &= m - 1) {
      ranks.push_back(std::countr_zero(m));
    }
    ranks.resize(quota, n);  // n is the sentinel: worse than every rank.
    rank_vectors.push_back(std::move(ranks));
  }
  std::sort(rank_vectors.begin(), rank_vectors.end());

  std::vector<PartnerSet> ranked;
  ranked.reserve(rank_vectors.size());
  for (const auto& ranks : rank_vectors) {
    PartnerSet set(side);
    for (int r : ranks) {
      if (r < n) set = set.With(order[r]);
    }
    ranked.push_back(set);
  }
  return PreferenceRelation(ranking.owner, std::move(ranked));
}

AxiomReport CheckResponsive(const PreferenceRelation& pref,
                            const QuotaRanking& ranking) {
  if (pref.owner() != ranking.owner) {
    throw InvalidArgument("ranking and relation belong to different agents");
  }
  const Side side = pref.partner_side();
  const std::vector<int>& order = ranking.individual_ranking;
  AxiomReport report{Axiom::kResponsive, true, std::nullopt};
  auto fail = [&](AxiomWitness witness) {
    report.holds = false;
    report.witness = witness;
    return report;
  };

  Mask acceptable = 0;
  for (int who : order) acceptable |= Mask{1} << who;
  const PartnerSet universe(side, acceptable | pref.Support().mask());
  if (universe.size() > kMaxAxiomUniverse) {
    throw UnsupportedSize("responsiveness check universe too large");
  }

  for (Mask s : Submasks(universe.mask())) {
    const PartnerSet set(side, s);
    const bool should_list =
        s != 0 && (s & ~acceptable) == 0 && set.size() <= ranking.quota;
    if (should_list != pref.IsListed(set)) {
      return fail({pref.owner(), set, PartnerSet(side), std::nullopt,
                   std::nullopt});
    }
  }

  for (Mask s : Submasks(acceptable)) {
    const PartnerSet set(side, s);
    if (set.size() > ranking.quota) continue;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int better = order[i];
      if (set.contains(better)) continue;
      if (set.size() < ranking.quota &&
          !StrictlyBetter(pref, set.With(better), set)) {
        return fail({pref.owner(), set.With(better), set, better,
                     std::nullopt});
      }
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const int worse = order[j];
        if (!set.contains(worse)) continue;
        const PartnerSet swapped = set.Without(worse).With(better);
        if (!StrictlyBetter(pref, swapped, set)) {
          return fail({pref.owner(), set, swapped, better, worse});
        }
      }
    }
  }
  return report;
}

}  // namespace manymatch
