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

#include "manymatch/manipulation.h"

#include <string>
#include <utility>

#include "manymatch/axioms.h"
#include "manymatch/errors.h"

namespace manymatch {
namespace {

StableSet BlairImprovements(AgentId agent, const StableSet& stable,
                            const Matching& baseline, const Profile& profile) {
  std::vector<Matching> out;
  for (const Matching& mu : stable) {
    if (CompareBlair(mu, baseline, agent, profile) ==
        OrderVerdict::kBetterStrict) {
      out.push_back(mu);
    }
  }
  return StableSet(std::move(out));
}

bool AtSideOptimum(AgentId agent, const Matching& baseline,
                   const std::optional<Matching>& optimum) {
  return optimum.has_value() &&
         MatchedSet(baseline, agent) == MatchedSet(*optimum, agent);
}

void RequireSubstitutableAndLad(const Profile& profile) {
  for (AgentId a : profile.Agents()) {
    const PreferenceRelation& pref = profile.at(a);
    for (const AxiomReport& report : {CheckSubstitutable(pref), CheckLad(pref)}) {
      if (!report.holds) {
        throw PreconditionError(
            "the manipulation construction needs substitutable and LAD "
            "preferences; " +
            DefaultName(a) + " violates " + std::string(AxiomName(report.axiom)));
      }
    }
  }
}

// Calls `visit` with every strict list of distinct nonempty subsets of
// `universe` (including the empty list).
template <typename Visit>
void ForEachStrictList(const std::vector<PartnerSet>& subsets,
                       std::vector<PartnerSet>& prefix,
                       std::vector<bool>& used, Visit& visit) {
  visit(prefix);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    prefix.push_back(subsets[i]);
    ForEachStrictList(subsets, prefix, used, visit);
    prefix.pop_back();
    used[i] = false;
  }
}

}  // namespace

AxiomFlags ComputeAxiomFlags(const PreferenceRelation& pref) {
  return {CheckSubstitutable(pref).holds, CheckLad(pref).holds};
}

Misreport MakeMisreport(PreferenceRelation reported) {
  const AxiomFlags flags = ComputeAxiomFlags(reported);
  const AgentId agent = reported.owner();
  return Misreport{agent, std::move(reported), flags};
}

PreferenceRelation RestrictPreference(const PreferenceRelation& pref,
                                      const PartnerSet& allowed,
                                      bool check_precondition) {
  if (allowed.side() != pref.partner_side()) {
    throw InvalidArgument("restriction set of " + DefaultName(pref.owner()) +
                          " drawn from its own side");
  }
  if (check_precondition && Choice(allowed, pref) != allowed) {
    throw PreconditionError("restriction of " + DefaultName(pref.owner()) +
                            " needs T = Ch(T)");
  }
  std::vector<PartnerSet> kept;
  for (const PartnerSet& entry : pref.ranked()) {
    if (entry.IsSubsetOf(allowed)) kept.push_back(entry);
  }
  return PreferenceRelation(pref.owner(), std::move(kept));
}

StableSet CandidateSet(AgentId agent, StableRule rule, const Profile& profile,
                       int max_edges) {
  const StableSet stable = EnumerateStable(profile, max_edges);
  if (stable.empty()) {
    throw NoStableMatching("the profile has no stable matching");
  }
  return BlairImprovements(agent, stable, ApplyRule(rule, profile, max_edges),
                           profile);
}

Misreport TruncationStrategy(AgentId agent, const Matching& target,
                             const Profile& profile) {
  if (!IsStable(target, profile)) {
    throw PreconditionError("truncation target is not stable");
  }
  return MakeMisreport(
      RestrictPreference(profile.at(agent), MatchedSet(target, agent)));
}

ManipulationOutcome EvaluateMisreport(AgentId agent, const Misreport& report,
                                      StableRule rule, const Profile& truth,
                                      int max_edges) {
  return EvaluateMisreport(agent, report, rule, truth,
                           ApplyRule(rule, truth, max_edges), max_edges);
}

ManipulationOutcome EvaluateMisreport(AgentId agent, const Misreport& report,
                                      StableRule rule, const Profile& truth,
                                      const Matching& baseline,
                                      int max_edges) {
  if (report.agent != agent) {
    throw InvalidArgument("misreport belongs to " + DefaultName(report.agent));
  }
  ManipulationOutcome out{.baseline = baseline};
  const Profile reported = ReplacePreference(truth, agent, report.reported);
  try {
    out.manipulated = ApplyRule(rule, reported, max_edges);
  } catch (const PreconditionError& e) {
    out.rule_failure = e.what();
    return out;
  } catch (const NoStableMatching& e) {
    out.rule_failure = e.what();
    return out;
  }
  out.verdict_common = CompareCommon(*out.manipulated, baseline, agent, truth);
  out.verdict_blair = CompareBlair(*out.manipulated, baseline, agent, truth);
  out.manipulated_stable_under_truth = IsStable(*out.manipulated, truth);
  return out;
}

bool GmtVerification::all_pass() const {
  if (!applicable) return true;
  if (checks.empty()) return false;
  for (const GmtTargetCheck& check : checks) {
    if (!check.all_pass()) return false;
  }
  return true;
}

GmtVerification VerifyGmt(AgentId agent, StableRule rule,
                          const Profile& profile, const GmtOptions& options) {
  if (!profile.IsValidAgent(agent)) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  RequireSubstitutableAndLad(profile);
  const StableSet stable = EnumerateStable(profile, options.max_edges);
  if (stable.empty()) {
    throw NoStableMatching("the profile has no stable matching");
  }
  GmtVerification out{.agent = agent,
                      .rule = rule,
                      .baseline = ApplyRule(rule, profile, options.max_edges)};
  out.side_optimum = SideOptimal(stable, profile, agent.side);
  out.applicable = !AtSideOptimum(agent, out.baseline, out.side_optimum);
  if (!out.applicable) return out;

  std::vector<Matching> targets;
  if (options.sweep_candidates || !out.side_optimum) {
    const StableSet candidates =
        BlairImprovements(agent, stable, out.baseline, profile);
    targets = candidates.matchings();
  } else {
    targets.push_back(*out.side_optimum);
  }

  for (const Matching& target : targets) {
    Misreport report = TruncationStrategy(agent, target, profile);
    ManipulationOutcome outcome = EvaluateMisreport(
        agent, report, rule, profile, out.baseline, options.max_edges);
    GmtTargetCheck check{.target = target, .misreport = report, .outcome = outcome};
    const Profile reported = ReplacePreference(profile, agent, report.reported);
    check.target_stable_under_report = IsStable(target, reported);
    check.rule_selects_target =
        !outcome.rule_failed() &&
        MatchedSet(*outcome.manipulated, agent) == MatchedSet(target, agent);
    check.blair_improvement =
        outcome.verdict_blair == OrderVerdict::kBetterStrict;
    check.common_improvement =
        outcome.verdict_common == OrderVerdict::kBetterStrict;
    out.checks.push_back(std::move(check));
  }
  return out;
}

std::string_view SearchModeName(SearchMode mode) {
  return mode == SearchMode::kExhaustive ? "exhaustive" : "sublists";
}

CounterexampleReport GmtCounterexampleCheck(const Profile& profile,
                                            StableRule rule, AgentId agent,
                                            bool exhaustive, int max_edges) {
  if (!profile.IsValidAgent(agent)) {
    throw InvalidArgument("unknown agent " + DefaultName(agent));
  }
  const PreferenceRelation& truth = profile.at(agent);
  const Side opposite = truth.partner_side();
  const int opposite_count = profile.num_agents(opposite);
  if (exhaustive && opposite_count > kMaxExhaustiveOpposite) {
    throw UnsupportedSize(
        "exhaustive misreport search supports at most " +
        std::to_string(kMaxExhaustiveOpposite) + " opposite agents, " +
        DefaultName(agent) + " faces " + std::to_string(opposite_count));
  }
  if (!exhaustive &&
      static_cast<int>(truth.ranked().size()) > kMaxSublistLength) {
    throw UnsupportedSize("sublist search supports true lists of at most " +
                          std::to_string(kMaxSublistLength) + " entries");
  }

  CounterexampleReport out{.agent = agent,
                           .rule = rule,
                           .baseline = ApplyRule(rule, profile, max_edges)};
  const StableSet stable = EnumerateStable(profile, max_edges);
  out.side_optimum = SideOptimal(stable, profile, agent.side);
  out.applicable = !AtSideOptimum(agent, out.baseline, out.side_optimum);
  out.scope.mode = exhaustive ? SearchMode::kExhaustive : SearchMode::kSublists;
  if (!out.applicable) return out;

  auto consider = [&](const std::vector<PartnerSet>& ranked) {
    ++out.scope.candidates;
    PreferenceRelation candidate(agent, ranked);
    if (!CheckSubstitutable(candidate).holds) {
      ++out.scope.skipped_non_substitutable;
      return;
    }
    ++out.scope.evaluated;
    Misreport report = MakeMisreport(std::move(candidate));
    ManipulationOutcome outcome = EvaluateMisreport(
        agent, report, rule, profile, out.baseline, max_edges);
    if (outcome.rule_failed()) {
      ++out.scope.rule_failures;
      return;
    }
    if (outcome.verdict_blair == OrderVerdict::kBetterStrict) {
      ++out.blair_profitable;
    }
    if (outcome.verdict_common == OrderVerdict::kBetterStrict) {
      out.profitable.push_back({std::move(report), std::move(outcome)});
    }
  };

  if (exhaustive) {
    std::vector<PartnerSet> subsets;
    for (PartnerSet::Mask m = 1; m < (PartnerSet::Mask{1} << opposite_count);
         ++m) {
      subsets.emplace_back(opposite, m);
    }
    std::vector<PartnerSet> prefix;
    std::vector<bool> used(subsets.size(), false);
    ForEachStrictList(subsets, prefix, used, consider);
  } else {
    const std::vector<PartnerSet>& full = truth.ranked();
    const std::size_t length = full.size();
    for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << length); ++keep) {
      std::vector<PartnerSet> ranked;
      for (std::size_t i = 0; i < length; ++i) {
        if ((keep >> i) & 1u) ranked.push_back(full[i]);
      }
      consider(ranked);
    }
  }
  return out;
}

}  // namespace manymatch
