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

#ifndef MANYMATCH_AXIOMS_H_
#define MANYMATCH_AXIOMS_H_

// Exhaustive checkers for substitutability, the law of aggregate demand and
// responsiveness, plus the responsive preference generator.

#include <optional>
#include <string_view>
#include <vector>

#include "manymatch/market.h"

namespace manymatch {

// Checkers scan every subset of the relation's support; a support larger
// than this is rejected with UnsupportedSize.
inline constexpr int kMaxAxiomUniverse = 16;

enum class Axiom { kSubstitutability, kLad, kResponsive };

std::string_view AxiomName(Axiom axiom);

// Counterexample to an axiom.
//  - substitutability: kept is in Ch(larger) but not in Ch(smaller), where
//    smaller = larger \ {removed};
//  - LAD: smaller = larger \ {removed} and |Ch(smaller)| > |Ch(larger)|;
//  - responsiveness: the relation orders `larger` and `smaller` against the
//    individual ranking (see CheckResponsive).
struct AxiomWitness {
  AgentId agent;
  PartnerSet larger;
  PartnerSet smaller;
  std::optional<int> kept;
  std::optional<int> removed;
};

// An individual ranking of acceptable partners (best first) plus a quota.
struct QuotaRanking {
  AgentId owner;
  std::vector<int> individual_ranking;
  int quota = 1;
};

struct AxiomReport {
  Axiom axiom = Axiom::kSubstitutability;
  bool holds = true;
  std::optional<AxiomWitness> witness;
};

// Offer sets are scanned in ascending mask order, so the reported witness is
// the numerically smallest violating S'.
AxiomReport CheckSubstitutable(const PreferenceRelation& pref);

// Single-removal scan: X in descending mask order, Y = X \ {x} for ascending
// x. Any violating pair Y c X implies a violating single removal along a
// chain from X down to Y.
AxiomReport CheckLad(const PreferenceRelation& pref);

// Replays a failing report's witness against `pref`; true iff the witness
// really violates the axiom. Responsiveness witnesses also need the ranking
// they were checked against.
bool WitnessViolates(const AxiomReport& report, const PreferenceRelation& pref,
                     const QuotaRanking* ranking = nullptr);

// Responsive extension of `ranking`: all nonempty subsets of the acceptable
// individuals of size <= quota, ordered by their sorted rank vectors padded
// with a sentinel worse than every rank, compared lexicographically.
PreferenceRelation ResponsivePreference(const QuotaRanking& ranking);

// Checks that `pref` is responsive with respect to `ranking`: its acceptable
// sets are exactly the nonempty subsets of acceptable individuals within
// quota, adding an acceptable individual to an under-quota set improves it,
// and swapping a member for a better-ranked outsider improves it.
AxiomReport CheckResponsive(const PreferenceRelation& pref,
                            const QuotaRanking& ranking);

}  // namespace manymatch

#endif  // MANYMATCH_AXIOMS_H_
