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

#ifndef MANYMATCH_MANIPULATION_H_
#define MANYMATCH_MANIPULATION_H_

// Strategic misreports under a stable matching rule: the restriction
// (truncation) operator, the candidate set H_a, evaluation of a misreport
// against the truthful outcome, the constructive manipulation check for
// substitutable + LAD markets, and a misreport search used to show that the
// construction breaks down without LAD.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manymatch/market.h"
#include "manymatch/solver.h"
#include "manymatch/stability.h"

namespace manymatch {

struct AxiomFlags {
  bool substitutable = false;
  bool lad = false;

  friend bool operator==(const AxiomFlags&, const AxiomFlags&) = default;
};

AxiomFlags ComputeAxiomFlags(const PreferenceRelation& pref);

// A reported relation for one agent. Reports are only required to be
// substitutable; the flags record which axioms the report actually meets.
struct Misreport {
  AgentId agent;
  PreferenceRelation reported;
  AxiomFlags flags;
};

Misreport MakeMisreport(PreferenceRelation reported);

struct ManipulationOutcome {
  Matching baseline;                     // h(truth)
  std::optional<Matching> manipulated;   // h(truth_{-a}, report); unset when
  std::string rule_failure;              // the rule failed on the report
  OrderVerdict verdict_common = OrderVerdict::kIncomparable;
  OrderVerdict verdict_blair = OrderVerdict::kIncomparable;
  bool manipulated_stable_under_truth = false;

  bool rule_failed() const { return !manipulated.has_value(); }
};

// pref|_T: keeps the listed sets contained in `allowed`, in their original
// order; everything else becomes unacceptable. With `check_precondition`,
// throws PreconditionError unless allowed = Ch(allowed, pref).
PreferenceRelation RestrictPreference(const PreferenceRelation& pref,
                                      const PartnerSet& allowed,
                                      bool check_precondition = true);

// H_a: stable matchings whose assignment for `agent` is Blair-strictly better
// than h(profile)(agent). Throws NoStableMatching on an empty stable set.
StableSet CandidateSet(AgentId agent, StableRule rule, const Profile& profile,
                       int max_edges = kDefaultMaxEdges);

// The report pref_a|_{mu(a)}. `target` must be stable under `profile`.
Misreport TruncationStrategy(AgentId agent, const Matching& target,
                             const Profile& profile);

// Runs `rule` on (truth_{-a}, report) and judges the result with a's true
// relation.
ManipulationOutcome EvaluateMisreport(AgentId agent, const Misreport& report,
                                      StableRule rule, const Profile& truth,
                                      int max_edges = kDefaultMaxEdges);
// Same, reusing an already computed h(truth).
ManipulationOutcome EvaluateMisreport(AgentId agent, const Misreport& report,
                                      StableRule rule, const Profile& truth,
                                      const Matching& baseline,
                                      int max_edges = kDefaultMaxEdges);

// One truncation towards a target matching mu in H_a.
struct GmtTargetCheck {
  Matching target;
  Misreport misreport;
  ManipulationOutcome outcome;
  bool target_stable_under_report = false;  // mu is stable under the report
  bool rule_selects_target = false;         // h(report)(a) = mu(a)
  bool blair_improvement = false;
  bool common_improvement = false;

  std::array<bool, 4> assertions() const {
    return {target_stable_under_report, rule_selects_target,
            blair_improvement, common_improvement};
  }
  bool all_pass() const {
    return target_stable_under_report && rule_selects_target &&
           blair_improvement && common_improvement;
  }
};

struct GmtVerification {
  AgentId agent;
  StableRule rule = StableRule::kFirmOptimal;
  // False when h(truth)(a) already equals the a-side optimum.
  bool applicable = false;
  Matching baseline;
  std::optional<Matching> side_optimum;
  std::vector<GmtTargetCheck> checks;

  bool all_pass() const;
};

struct GmtOptions {
  // Check every member of H_a instead of only the side optimum.
  bool sweep_candidates = false;
  int max_edges = kDefaultMaxEdges;
};

// Requires every relation in `profile` to be substitutable and satisfy LAD
// (PreconditionError naming the agent and axiom otherwise). When applicable,
// truncates a's relation to mu(a) for the target(s) and checks that mu stays
// stable, that the rule then hands a exactly mu(a), and that this is a strict
// improvement in both the Blair and the common order.
GmtVerification VerifyGmt(AgentId agent, StableRule rule,
                          const Profile& profile, const GmtOptions& options = {});

enum class SearchMode { kExhaustive, kSublists };

std::string_view SearchModeName(SearchMode mode);

// Exhaustive search enumerates every strict list over the opposite side, so
// it is limited to this many opposite agents.
inline constexpr int kMaxExhaustiveOpposite = 3;
// Sublist search covers all 2^L order-preserving sublists of the true list.
inline constexpr int kMaxSublistLength = 16;

struct SearchScope {
  SearchMode mode = SearchMode::kSublists;
  long candidates = 0;                 // lists generated
  long skipped_non_substitutable = 0;  // outside the strategy space
  long evaluated = 0;
  long rule_failures = 0;
};

struct ProfitableReport {
  Misreport misreport;
  ManipulationOutcome outcome;
};

struct CounterexampleReport {
  AgentId agent;
  StableRule rule = StableRule::kFirmOptimal;
  bool applicable = false;
  Matching baseline;
  std::optional<Matching> side_optimum;
  SearchScope scope;
  // Substitutable reports that make a strictly better off in its true order.
  std::vector<ProfitableReport> profitable;
  long blair_profitable = 0;

  bool found_profitable() const { return !profitable.empty(); }
};

// Searches the agent's substitutable misreports for a profitable one.
// Non-applicable agents (already at their side optimum) are reported without
// searching. Throws UnsupportedSize when the chosen mode's cap is exceeded.
CounterexampleReport GmtCounterexampleCheck(const Profile& profile,
                                            StableRule rule, AgentId agent,
                                            bool exhaustive,
                                            int max_edges = kDefaultMaxEdges);

}  // namespace manymatch

#endif  // MANYMATCH_MANIPULATION_H_
