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

#include "manymatch/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "manymatch/axioms.h"
#include "manymatch/errors.h"
#include "manymatch/manipulation.h"
#include "manymatch/market_io.h"
#include "manymatch/reference_markets.h"
#include "manymatch/solver.h"
#include "manymatch/stability.h"

namespace manymatch {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kBuiltinPrefix = "builtin:";

// Result of one command: the same data rendered as text and as JSON.
struct Output {
  std::string text;
  Json results = Json::object();
  bool violation = false;
};

// Raised for bad command-line arguments that CLI11 cannot detect itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MarketInstance LoadMarket(const std::string& source) {
  if (source.rfind(kBuiltinPrefix, 0) == 0) {
    return LoadReferenceMarket(source.substr(kBuiltinPrefix.size()));
  }
  return LoadMarketFile(source);
}

AgentId FindAgent(const MarketInstance& instance, const std::string& name) {
  const std::optional<AgentId> agent = instance.Find(name);
  if (!agent) throw UsageError("unknown agent '" + name + "'");
  return *agent;
}

StableRule RequireRule(const std::string& name) {
  const std::optional<StableRule> rule = ParseRule(name);
  if (!rule) throw UsageError("unknown rule '" + name + "'");
  return *rule;
}

std::string Braced(const PartnerSet& set, const MarketInstance& instance) {
  return set.empty() ? FormatSet(set, instance)
                     : "{" + FormatSet(set, instance) + "}";
}

std::string YesNo(bool value) { return value ? "yes" : "no"; }

Json SetJson(const PartnerSet& set, const MarketInstance& instance) {
  Json out = Json::array();
  for (int m : set.members()) out.push_back(instance.Name({set.side(), m}));
  return out;
}

Json MatchingJson(const Matching& matching, const MarketInstance& instance) {
  Json out = Json::object();
  for (int f = 0; f < matching.num_firms(); ++f) {
    out[instance.firm_names()[f]] =
        SetJson(MatchedSet(matching, AgentId::Firm(f)), instance);
  }
  return out;
}

Json InstanceJson(const MarketInstance& instance) {
  return {{"firms", instance.firm_names()},
          {"workers", instance.worker_names()}};
}

std::string PairsText(const std::vector<BlockingPair>& pairs,
                      const MarketInstance& instance) {
  std::string out;
  for (const BlockingPair& p : pairs) {
    if (!out.empty()) out += " ";
    out += "(" + instance.Name(p.firm) + "," + instance.Name(p.worker) + ")";
  }
  return out.empty() ? "none" : out;
}

Json PairsJson(const std::vector<BlockingPair>& pairs,
               const MarketInstance& instance) {
  Json out = Json::array();
  for (const BlockingPair& p : pairs) {
    out.push_back({instance.Name(p.firm), instance.Name(p.worker)});
  }
  return out;
}

// ---- validate --------------------------------------------------------------

Output Validate(const MarketInstance& instance, const std::string& which) {
  std::vector<Axiom> axioms;
  if (which == "substitutable" || which == "all") {
    axioms.push_back(Axiom::kSubstitutability);
  }
  if (which == "lad" || which == "all") axioms.push_back(Axiom::kLad);

  Output out;
  Json reports = Json::array();
  int violations = 0;
  for (AgentId a : instance.profile().Agents()) {
    const PreferenceRelation& pref = instance.profile().at(a);
    for (Axiom axiom : axioms) {
      const AxiomReport report = axiom == Axiom::kLad
                                     ? CheckLad(pref)
                                     : CheckSubstitutable(pref);
      Json entry = {{"agent", instance.Name(a)},
                    {"axiom", AxiomName(axiom)},
                    {"holds", report.holds},
                    {"witness", nullptr}};
      out.text += instance.Name(a) + " " + std::string(AxiomName(axiom)) + ": ";
      if (report.holds) {
        out.text += "holds\n";
      } else {
        ++violations;
        const AxiomWitness& w = *report.witness;
        auto name = [&](std::optional<int> who) -> Json {
          if (!who) return nullptr;
          return instance.Name({w.larger.side(), *who});
        };
        entry["witness"] = {{"larger", SetJson(w.larger, instance)},
                            {"smaller", SetJson(w.smaller, instance)},
                            {"kept", name(w.kept)},
                            {"removed", name(w.removed)}};
        if (axiom == Axiom::kLad) {
          out.text += "violated X=" + Braced(w.larger, instance) +
                      " Y=" + Braced(w.smaller, instance) + "\n";
        } else {
          out.text += "violated S'=" + Braced(w.larger, instance) +
                      " w=" + name(w.kept).get<std::string>() +
                      " w'=" + name(w.removed).get<std::string>() + "\n";
        }
      }
      reports.push_back(std::move(entry));
    }
  }
  out.text += "violations: " + std::to_string(violations) + "\n";
  out.results["axiom_reports"] = std::move(reports);
  out.results["violations"] = violations;
  out.violation = violations > 0;
  return out;
}

// ---- solve / enumerate ------------------------------------------------------

Output Solve(const MarketInstance& instance, StableRule rule, int max_edges) {
  const Matching mu = ApplyRule(rule, instance.profile(), max_edges);
  const bool stable = IsStable(mu, instance.profile());
  Output out;
  out.text = "rule: " + std::string(RuleName(rule)) + "\n" +
             RenderMatching(mu, instance) + "stable: " + YesNo(stable) + "\n";
  out.results["rule"] = RuleName(rule);
  out.results["matchings"] = Json::array({MatchingJson(mu, instance)});
  out.results["stable"] = stable;
  return out;
}

Output Enumerate(const MarketInstance& instance, int max_edges) {
  const StableSet stable = EnumerateStable(instance.profile(), max_edges);
  Output out;
  out.text = "stable matchings: " + std::to_string(stable.size()) + "\n";
  std::vector<std::pair<std::string, Matching>> rows;
  Json matchings = Json::array();
  for (const Matching& mu : stable) {
    rows.emplace_back("#" + std::to_string(rows.size() + 1), mu);
    matchings.push_back(MatchingJson(mu, instance));
  }
  if (!rows.empty()) out.text += RenderMatchingTable(rows, instance);
  out.results["count"] = stable.size();
  out.results["matchings"] = std::move(matchings);
  return out;
}

// ---- manipulate ---------------------------------------------------------------

Json OutcomeJson(const ManipulationOutcome& outcome,
                 const MarketInstance& instance) {
  Json out = {{"baseline", MatchingJson(outcome.baseline, instance)}};
  if (outcome.rule_failed()) {
    out["rule_failure"] = outcome.rule_failure;
    return out;
  }
  out["manipulated"] = MatchingJson(*outcome.manipulated, instance);
  out["verdict_common"] = VerdictName(outcome.verdict_common);
  out["verdict_blair"] = VerdictName(outcome.verdict_blair);
  out["stable_under_truth"] = outcome.manipulated_stable_under_truth;
  out["blocking_pairs_under_truth"] =
      PairsJson(BlockingPairs(*outcome.manipulated, instance.profile()),
                instance);
  return out;
}

Output EvaluateReport(const MarketInstance& instance, AgentId agent,
                      StableRule rule, const std::string& report_text,
                      int max_edges) {
  const Profile& truth = instance.profile();
  const Misreport report =
      MakeMisreport(ParsePreferenceList(report_text, agent, instance));
  const ManipulationOutcome outcome =
      EvaluateMisreport(agent, report, rule, truth, max_edges);

  Output out;
  const std::string& name = instance.Name(agent);
  out.text = "agent: " + name + "\nrule: " + std::string(RuleName(rule)) +
             "\nreport: " + FormatPreference(report.reported, instance) +
             "\nreport axioms: substitutable " +
             YesNo(report.flags.substitutable) + ", lad " +
             YesNo(report.flags.lad) + "\n";
  Json results = {{"agent", name},
                  {"rule", RuleName(rule)},
                  {"report", FormatPreference(report.reported, instance)},
                  {"report_axioms",
                   {{"substitutable", report.flags.substitutable},
                    {"lad", report.flags.lad}}}};
  results["outcome"] = OutcomeJson(outcome, instance);
  if (outcome.rule_failed()) {
    out.text += RenderMatchingTable({{"truth", outcome.baseline}}, instance) +
                "rule failed: " + outcome.rule_failure + "\n";
  } else {
    const Matching& manipulated = *outcome.manipulated;
    out.text +=
        RenderMatchingTable(
            {{"truth", outcome.baseline}, {"report", manipulated}}, instance) +
        name + " gets: " +
        Braced(MatchedSet(outcome.baseline, agent), instance) + " -> " +
        Braced(MatchedSet(manipulated, agent), instance) +
        "\nverdict (common order): " +
        std::string(VerdictName(outcome.verdict_common)) +
        "\nverdict (Blair order): " +
        std::string(VerdictName(outcome.verdict_blair)) +
        "\nstable under truth: " +
        YesNo(outcome.manipulated_stable_under_truth) +
        "\nblocking pairs under truth: " +
        PairsText(BlockingPairs(manipulated, truth), instance) + "\n";
  }
  out.results = std::move(results);
  out.violation = !outcome.rule_failed() &&
                  outcome.verdict_common == OrderVerdict::kBetterStrict;
  return out;
}

Output SearchMisreports(const MarketInstance& instance, AgentId agent,
                        StableRule rule, bool exhaustive, int max_edges) {
  const CounterexampleReport report = GmtCounterexampleCheck(
      instance.profile(), rule, agent, exhaustive, max_edges);
  const std::string& name = instance.Name(agent);
  Output out;
  std::vector<std::pair<std::string, Matching>> rows{
      {"truth", report.baseline}};
  if (report.side_optimum) rows.emplace_back("optimum", *report.side_optimum);
  out.text = "agent: " + name + "\nrule: " + std::string(RuleName(rule)) +
             "\n" + RenderMatchingTable(rows, instance) +
             "applicable: " + YesNo(report.applicable) + "\n";
  Json results = {{"agent", name},
                  {"rule", RuleName(rule)},
                  {"baseline", MatchingJson(report.baseline, instance)},
                  {"side_optimum", report.side_optimum
                                       ? MatchingJson(*report.side_optimum,
                                                      instance)
                                       : Json(nullptr)},
                  {"applicable", report.applicable}};
  if (report.applicable) {
    const SearchScope& s = report.scope;
    out.text += "search: " + std::string(SearchModeName(s.mode)) + ", " +
                std::to_string(s.candidates) + " candidates, " +
                std::to_string(s.evaluated) + " evaluated, " +
                std::to_string(s.skipped_non_substitutable) +
                " skipped (not substitutable), " +
                std::to_string(s.rule_failures) + " rule failures\n" +
                "profitable reports (common order): " +
                std::to_string(report.profitable.size()) + "\n" +
                "profitable reports (Blair order): " +
                std::to_string(report.blair_profitable) + "\n";
    Json profitable = Json::array();
    for (const ProfitableReport& p : report.profitable) {
      const Matching& mu = *p.outcome.manipulated;
      out.text += "  " + FormatPreference(p.misreport.reported, instance) +
                  " -> " + Braced(MatchedSet(mu, agent), instance) +
                  " (stable under truth: " +
                  YesNo(p.outcome.manipulated_stable_under_truth) + ")\n";
      Json entry = OutcomeJson(p.outcome, instance);
      entry["report"] = FormatPreference(p.misreport.reported, instance);
      profitable.push_back(std::move(entry));
    }
    results["search_scope"] = {{"mode", SearchModeName(s.mode)},
                               {"candidates", s.candidates},
                               {"evaluated", s.evaluated},
                               {"skipped_non_substitutable",
                                s.skipped_non_substitutable},
                               {"rule_failures", s.rule_failures}};
    results["profitable"] = std::move(profitable);
    results["blair_profitable"] = report.blair_profitable;
  } else {
    out.text += "not applicable: already at the side optimum\n";
    results["search_scope"] = nullptr;
  }
  out.results = std::move(results);
  out.violation = report.found_profitable();
  return out;
}

// ---- verify-gmt ---------------------------------------------------------------

constexpr std::string_view kAssertionNames[4] = {
    "target stable under the report",
    "rule assigns the target set",
    "Blair-strict improvement",
    "common-order strict improvement",
};

Output VerifyAgents(const MarketInstance& instance, StableRule rule,
                    const std::vector<AgentId>& agents, bool sweep,
                    int max_edges) {
  Output out;
  Json entries = Json::array();
  int applicable = 0;
  int failing = 0;
  for (AgentId agent : agents) {
    const GmtVerification v = VerifyGmt(agent, rule, instance.profile(),
                                        {sweep, max_edges});
    const std::string& name = instance.Name(agent);
    Json entry = {{"agent", name},
                  {"rule", RuleName(rule)},
                  {"applicable", v.applicable},
                  {"baseline", SetJson(MatchedSet(v.baseline, agent), instance)},
                  {"side_optimum",
                   v.side_optimum
                       ? SetJson(MatchedSet(*v.side_optimum, agent), instance)
                       : Json(nullptr)}};
    Json checks = Json::array();
    if (!v.applicable) {
      out.text +=
          "agent " + name + ": not applicable (already at the side optimum)\n";
    } else {
      ++applicable;
      if (!v.all_pass()) ++failing;
      out.text += "agent " + name + ": applicable\n  truth gives " +
                  Braced(MatchedSet(v.baseline, agent), instance);
      if (v.side_optimum) {
        out.text += ", side optimum gives " +
                    Braced(MatchedSet(*v.side_optimum, agent), instance);
      }
      out.text += "\n";
      int index = 0;
      for (const GmtTargetCheck& check : v.checks) {
        const std::string report =
            FormatPreference(check.misreport.reported, instance);
        out.text += "  target " + std::to_string(++index) + ": report \"" +
                    report + "\" aiming at " +
                    Braced(MatchedSet(check.target, agent), instance) + "\n";
        const auto assertions = check.assertions();
        Json flags = Json::array();
        for (std::size_t i = 0; i < assertions.size(); ++i) {
          out.text += std::string("    [") +
                      (assertions[i] ? "PASS" : "FAIL") + "] " +
                      std::string(kAssertionNames[i]) + "\n";
          flags.push_back(assertions[i]);
        }
        checks.push_back(
            {{"target", MatchingJson(check.target, instance)},
             {"report", report},
             {"report_axioms",
              {{"substitutable", check.misreport.flags.substitutable},
               {"lad", check.misreport.flags.lad}}},
             {"outcome", OutcomeJson(check.outcome, instance)},
             {"gmt_assertions", std::move(flags)}});
      }
      if (v.checks.empty()) out.text += "  no candidate targets\n";
    }
    entry["checks"] = std::move(checks);
    entry["pass"] = v.all_pass();
    entries.push_back(std::move(entry));
  }
  out.text += "summary: " + std::to_string(applicable) + " applicable, " +
              std::to_string(failing) + " failing\n";
  out.results["agents"] = std::move(entries);
  out.results["applicable"] = applicable;
  out.results["failing"] = failing;
  out.violation = failing > 0;
  return out;
}

// ---- reference transcript -------------------------------------------------

template <typename Fn>
void RunStep(std::string& text, const std::string& command_line, Fn&& fn) {
  text += "$ manymatch " + command_line + "\n";
  try {
    text += fn().text;
  } catch (const std::exception& e) {
    text += std::string("error: ") + e.what() + "\n";
  }
  text += "\n";
}

// ---- driver ---------------------------------------------------------------

void Emit(std::ostream& out, bool json, const std::string& command,
          const Json& instance, const Output& output) {
  if (json) {
    Json doc = {{"command", command},
                {"instance", instance},
                {"results", output.results}};
    out << doc.dump(2) << "\n";
  } else {
    out << output.text;
  }
}

}  // namespace

std::string ReferenceExamplesReport(int max_edges) {
  std::string text;
  for (const ReferenceMarket& market : ReferenceMarkets()) {
    const MarketInstance instance = ParseMarket(market.text);
    const std::string key = std::string(market.key);
    const std::string src = std::string(kBuiltinPrefix) + key;
    const AgentId f1 = AgentId::Firm(0);
    text += "== " + key + " ==\n" + SerializeMarket(instance) + "\n";
    RunStep(text, "validate " + src,
            [&] { return Validate(instance, "all"); });
    RunStep(text, "solve " + src + " --rule firm-optimal", [&] {
      return Solve(instance, StableRule::kFirmOptimal, max_edges);
    });
    RunStep(text, "solve " + src + " --rule worker-optimal", [&] {
      return Solve(instance, StableRule::kWorkerOptimal, max_edges);
    });
    RunStep(text, "enumerate " + src,
            [&] { return Enumerate(instance, max_edges); });
    if (key == "unstable-manipulation") {
      const AgentId w1 = AgentId::Worker(0);
      RunStep(text,
              "manipulate " + src +
                  " --agent w1 --rule firm-optimal --report \"f3\"",
              [&] {
                return EvaluateReport(instance, w1, StableRule::kFirmOptimal,
                                      "f3", max_edges);
              });
      RunStep(text,
              "verify-gmt " + src + " --rule firm-optimal --agent w1", [&] {
                return VerifyAgents(instance, StableRule::kFirmOptimal, {w1},
                                    false, max_edges);
              });
      RunStep(text, "verify-gmt " + src + " --rule worker-optimal", [&] {
        return VerifyAgents(instance, StableRule::kWorkerOptimal,
                            instance.profile().Agents(), false, max_edges);
      });
    } else if (key == "firms-cannot-manipulate") {
      const std::pair<std::string, std::string> reports[] = {
          {"f1", "w1 w2 | w1 | w2"}, {"f2", "w3"}, {"f3", "w4"}};
      for (const auto& [agent, list] : reports) {
        RunStep(text,
                "manipulate " + src + " --agent " + agent +
                    " --rule worker-optimal --report \"" + list + "\"",
                [&] {
                  return EvaluateReport(instance, FindAgent(instance, agent),
                                        StableRule::kWorkerOptimal, list,
                                        max_edges);
                });
      }
      for (const std::string agent : {"f1", "f2", "f3"}) {
        RunStep(text,
                "manipulate " + src + " --agent " + agent +
                    " --rule worker-optimal",
                [&] {
                  return SearchMisreports(instance, FindAgent(instance, agent),
                                          StableRule::kWorkerOptimal, false,
                                          max_edges);
                });
      }
      RunStep(text, "verify-gmt " + src + " --rule worker-optimal --agent f1",
              [&] {
                return VerifyAgents(instance, StableRule::kWorkerOptimal, {f1},
                                    false, max_edges);
              });
    } else {
      for (const std::string agent : {"w1", "w2", "w3", "w4"}) {
        RunStep(text,
                "manipulate " + src + " --agent " + agent +
                    " --rule firm-optimal --exhaustive",
                [&] {
                  return SearchMisreports(instance, FindAgent(instance, agent),
                                          StableRule::kFirmOptimal, true,
                                          max_edges);
                });
      }
    }
  }
  return text;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Many-to-many matching markets: stability, deferred "
               "acceptance and strategic manipulation",
               "manymatch"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int max_edges = kDefaultMaxEdges;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-edges", max_edges,
                 "Cap on firms x workers for stable-set enumeration")
      ->check(CLI::Range(1, kHardMaxEdges));

  const std::vector<std::string> rule_names = {
      "firm-optimal", "worker-optimal", "select-first", "select-last"};

  std::string file;
  bool strict = false;

  auto* validate = app.add_subcommand("validate", "Check preference axioms");
  std::string axiom = "all";
  validate->add_option("file", file, "Market file")->required();
  validate->add_option("--axiom", axiom, "Axiom to check")
      ->check(CLI::IsMember({"substitutable", "lad", "all"}));
  validate->add_flag("--strict", strict, "Exit 1 on any violation");

  auto* solve = app.add_subcommand("solve", "Apply a stable matching rule");
  std::string rule_name = "firm-optimal";
  solve->add_option("file", file, "Market file")->required();
  solve->add_option("--rule", rule_name, "Stable matching rule")
      ->check(CLI::IsMember(rule_names));

  auto* enumerate =
      app.add_subcommand("enumerate", "List every stable matching");
  enumerate->add_option("file", file, "Market file")->required();

  auto* manipulate = app.add_subcommand(
      "manipulate", "Evaluate one misreport or search for a profitable one");
  std::string agent_name;
  std::string report_text;
  bool exhaustive = false;
  manipulate->add_option("file", file, "Market file")->required();
  manipulate->add_option("--agent", agent_name, "Reporting agent")->required();
  manipulate->add_option("--rule", rule_name, "Stable matching rule")
      ->check(CLI::IsMember(rule_names));
  auto* report_opt = manipulate->add_option(
      "--report", report_text, "Preference list to report, e.g. \"w1 w2 | w1\"");
  manipulate
      ->add_flag("--exhaustive", exhaustive,
                 "Search every strict list over the opposite side")
      ->excludes(report_opt);
  manipulate->add_flag("--strict", strict,
                       "Exit 1 when a profitable report exists");

  auto* verify = app.add_subcommand(
      "verify-gmt", "Check the truncation manipulation for each agent");
  bool all_agents = false;
  bool sweep = false;
  verify->add_option("file", file, "Market file")->required();
  verify->add_option("--rule", rule_name, "Stable matching rule")
      ->check(CLI::IsMember(rule_names));
  auto* agent_opt =
      verify->add_option("--agent", agent_name, "Single agent to check");
  verify->add_flag("--all-agents", all_agents, "Check every agent (default)")
      ->excludes(agent_opt);
  verify->add_flag("--sweep", sweep,
                   "Try every Blair-better stable target, not just the "
                   "side optimum");
  verify->add_flag("--strict", strict, "Exit 1 when any assertion fails");

  auto* reference = app.add_subcommand(
      "paper-examples",
      "Run the built-in reference markets and compare with the golden report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*reference) {
      const std::string report = ReferenceExamplesReport(max_edges);
      const bool match = report == ReferenceExamplesGolden();
      if (json) {
        Json keys = Json::array();
        for (const auto& m : ReferenceMarkets()) keys.push_back(m.key);
        Output output;
        output.results = {{"golden_match", match}, {"report", report}};
        Emit(out, true, "paper-examples", {{"markets", keys}}, output);
      } else {
        out << report << "golden: " << (match ? "match" : "MISMATCH") << "\n";
      }
      if (!match) {
        err << "paper-examples: output differs from the embedded golden\n";
      }
      return match ? kExitOk : kExitViolation;
    }

    const MarketInstance instance = LoadMarket(file);
    const Json instance_json = InstanceJson(instance);
    Output output;
    std::string command;
    if (*validate) {
      command = "validate";
      output = Validate(instance, axiom);
    } else if (*solve) {
      command = "solve";
      output = Solve(instance, RequireRule(rule_name), max_edges);
      output.violation = false;
    } else if (*enumerate) {
      command = "enumerate";
      output = Enumerate(instance, max_edges);
    } else if (*manipulate) {
      command = "manipulate";
      const AgentId agent = FindAgent(instance, agent_name);
      output = report_opt->count() > 0
                   ? EvaluateReport(instance, agent, RequireRule(rule_name),
                                    report_text, max_edges)
                   : SearchMisreports(instance, agent, RequireRule(rule_name),
                                      exhaustive, max_edges);
    } else if (*verify) {
      command = "verify-gmt";
      std::vector<AgentId> agents = instance.profile().Agents();
      if (agent_opt->count() > 0) agents = {FindAgent(instance, agent_name)};
      output = VerifyAgents(instance, RequireRule(rule_name), agents, sweep,
                            max_edges);
    }
    Emit(out, json, command, instance_json, output);
    return strict && output.violation ? kExitViolation : kExitOk;
  } catch (const UsageError& e) {
    err << "manymatch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MarketFormatError& e) {
    err << "manymatch: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "manymatch: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace manymatch
