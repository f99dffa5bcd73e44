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

#include "manymatch/market_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "manymatch/errors.h"

namespace manymatch {
namespace {

constexpr std::string_view kEmptySetGlyph = "∅";

struct Token {
  std::string text;
  int column;  // 1-based
};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits line[begin, end) into whitespace-separated tokens.
std::vector<Token> Tokenize(std::string_view line, std::size_t begin,
                            std::size_t end) {
  std::vector<Token> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && IsSpace(line[i])) ++i;
    if (i == end) break;
    const std::size_t start = i;
    while (i < end && !IsSpace(line[i])) ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MarketInstance Run() {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::size_t stop = nl == std::string_view::npos ? text_.size() : nl;
      ++line_no;
      ParseLine(line_no, text_.substr(pos, stop - pos));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!firms_) throw MarketFormatError(0, 0, "missing 'firms:' line");
    if (!workers_) throw MarketFormatError(0, 0, "missing 'workers:' line");
    return Build();
  }

 private:
  struct PrefLine {
    int line;
    AgentId owner;
    std::vector<std::vector<Token>> alternatives;
  };

  [[noreturn]] static void Fail(int line, int column, const std::string& msg) {
    throw MarketFormatError(line, column, msg);
  }

  void ParseLine(int line_no, std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && IsSpace(line[first])) ++first;
    if (first == line.size()) return;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      Fail(line_no, static_cast<int>(first) + 1, "expected ':'");
    }
    const std::vector<Token> head = Tokenize(line, first, colon);
    if (head.empty()) {
      Fail(line_no, static_cast<int>(first) + 1, "missing keyword before ':'");
    }
    const std::string& keyword = head[0].text;
    if (keyword == "firms" || keyword == "workers") {
      if (head.size() != 1) {
        Fail(line_no, head[1].column, "unexpected token before ':'");
      }
      ParseNames(line_no, keyword == "firms" ? Side::kFirm : Side::kWorker,
                 Tokenize(line, colon + 1, line.size()), head[0].column);
      return;
    }
    if (keyword != "pref") {
      Fail(line_no, head[0].column,
           "expected 'firms:', 'workers:' or 'pref <agent>:'");
    }
    if (head.size() != 2) {
      Fail(line_no, head.size() < 2 ? head[0].column : head[2].column,
           "expected 'pref <agent>:'");
    }
    if (!firms_ || !workers_) {
      Fail(line_no, head[0].column,
           "pref lines must follow the 'firms:' and 'workers:' lines");
    }
    ParsePref(line_no, head[1], line, colon + 1);
  }

  void ParseNames(int line_no, Side side, std::vector<Token> tokens,
                  int column) {
    auto& slot = side == Side::kFirm ? firms_ : workers_;
    if (slot) {
      Fail(line_no, column,
           "duplicate '" + std::string(SideName(side)) + "s:' line");
    }
    if (static_cast<int>(tokens.size()) > kMaxAgentsPerSide) {
      Fail(line_no, column,
           "at most " + std::to_string(kMaxAgentsPerSide) + " " +
               std::string(SideName(side)) + "s are supported");
    }
    std::vector<std::string> names;
    for (const Token& t : tokens) {
      CheckName(line_no, t);
      if (std::find(names.begin(), names.end(), t.text) != names.end()) {
        Fail(line_no, t.column, "duplicate name '" + t.text + "'");
      }
      const auto& other = side == Side::kFirm ? workers_ : firms_;
      if (other && std::find(other->begin(), other->end(), t.text) !=
                       other->end()) {
        Fail(line_no, t.column,
             "name '" + t.text + "' is used on both sides of the market");
      }
      names.push_back(t.text);
    }
    slot = std::move(names);
  }

  void CheckName(int line_no, const Token& t) const {
    if (t.text == kEmptySetGlyph || t.text == "{}") {
      Fail(line_no, t.column, "the empty set is implicit and never listed");
    }
    for (char c : t.text) {
      if (c == '|' || c == ':' || c == ',' || c == '{' || c == '}') {
        Fail(line_no, t.column, "invalid character in name '" + t.text + "'");
      }
    }
  }

  std::optional<AgentId> Lookup(std::string_view name) const {
    for (std::size_t i = 0; i < firms_->size(); ++i) {
      if ((*firms_)[i] == name) return AgentId::Firm(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < workers_->size(); ++i) {
      if ((*workers_)[i] == name) return AgentId::Worker(static_cast<int>(i));
    }
    return std::nullopt;
  }

  void ParsePref(int line_no, const Token& agent_token, std::string_view line,
                 std::size_t begin) {
    const std::optional<AgentId> owner = Lookup(agent_token.text);
    if (!owner) {
      Fail(line_no, agent_token.column,
           "unknown agent '" + agent_token.text + "'");
    }
    if (!seen_owners_.insert(*owner).second) {
      Fail(line_no, agent_token.column,
           "second pref line for '" + agent_token.text + "'");
    }
    PrefLine pref{line_no, *owner, {}};
    const std::vector<Token> all = Tokenize(line, begin, line.size());
    if (!all.empty()) {
      std::size_t seg = begin;
      while (true) {
        const std::size_t bar = line.find('|', seg);
        const std::size_t stop = bar == std::string_view::npos ? line.size()
                                                                : bar;
        std::vector<Token> members = Tokenize(line, seg, stop);
        if (members.empty()) {
          Fail(line_no, static_cast<int>(seg) + 1,
               "empty alternative in the preference of '" + agent_token.text +
                   "'; the empty set is implicit and never listed");
        }
        for (const Token& t : members) CheckName(line_no, t);
        pref.alternatives.push_back(std::move(members));
        if (bar == std::string_view::npos) break;
        seg = bar + 1;
      }
    }
    prefs_.push_back(std::move(pref));
  }

  MarketInstance Build() const {
    std::vector<std::vector<PartnerSet>> ranked_by_agent[2];
    ranked_by_agent[0].assign(firms_->size(), {});
    ranked_by_agent[1].assign(workers_->size(), {});
    for (const PrefLine& pref : prefs_) {
      const Side partner_side = Opposite(pref.owner.side);
      const std::string& owner_name =
          pref.owner.side == Side::kFirm ? (*firms_)[pref.owner.index]
                                         : (*workers_)[pref.owner.index];
      std::set<PartnerSet::Mask> seen;
      auto& ranked = ranked_by_agent[pref.owner.side == Side::kFirm ? 0 : 1]
                                    [pref.owner.index];
      for (const auto& alternative : pref.alternatives) {
        PartnerSet set(partner_side);
        for (const Token& t : alternative) {
          const std::optional<AgentId> member = Lookup(t.text);
          if (!member) {
            Fail(pref.line, t.column,
                 "preference of '" + owner_name + "' names unknown agent '" +
                     t.text + "'");
          }
          if (member->side != partner_side) {
            Fail(pref.line, t.column,
                 "preference of '" + owner_name + "' lists '" + t.text +
                     "', which is not a " +
                     std::string(SideName(partner_side)));
          }
          if (set.contains(member->index)) {
            Fail(pref.line, t.column,
                 "preference of '" + owner_name + "' repeats '" + t.text +
                     "' inside one alternative");
          }
          set = set.With(member->index);
        }
        if (!seen.insert(set.mask()).second) {
          Fail(pref.line, alternative.front().column,
               "duplicate alternative in the preference of '" + owner_name +
                   "'");
        }
        ranked.push_back(set);
      }
    }
    std::vector<PreferenceRelation> firm_prefs;
    std::vector<PreferenceRelation> worker_prefs;
    for (std::size_t i = 0; i < firms_->size(); ++i) {
      firm_prefs.emplace_back(AgentId::Firm(static_cast<int>(i)),
                              ranked_by_agent[0][i]);
    }
    for (std::size_t i = 0; i < workers_->size(); ++i) {
      worker_prefs.emplace_back(AgentId::Worker(static_cast<int>(i)),
                                ranked_by_agent[1][i]);
    }
    return MarketInstance(
        *firms_, *workers_,
        Profile(std::move(firm_prefs), std::move(worker_prefs)));
  }

  std::string_view text_;
  std::optional<std::vector<std::string>> firms_;
  std::optional<std::vector<std::string>> workers_;
  std::set<AgentId> seen_owners_;
  std::vector<PrefLine> prefs_;
};

// Display width of a UTF-8 string, counting code points.
std::size_t DisplayWidth(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string JoinNames(const PartnerSet& set, const MarketInstance& instance,
                      std::string_view separator) {
  std::string out;
  for (int m : set.members()) {
    if (!out.empty()) out += separator;
    out += instance.Name({set.side(), m});
  }
  return out;
}

}  // namespace

MarketFormatError::MarketFormatError(int line, int column,
                                     const std::string& message)
    : std::runtime_error(
          line > 0 ? "line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message
                   : message),
      line_(line),
      column_(column) {}

MarketInstance ParseMarket(std::string_view text) {
  return Parser(text).Run();
}

MarketInstance LoadMarketFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MarketFormatError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMarket(buffer.str());
}

std::string SerializeMarket(const MarketInstance& instance) {
  std::string out = "firms:";
  for (const std::string& name : instance.firm_names()) out += " " + name;
  out += "\nworkers:";
  for (const std::string& name : instance.worker_names()) out += " " + name;
  out += "\n";
  for (AgentId a : instance.profile().Agents()) {
    out += "pref " + instance.Name(a) + ":";
    const auto& ranked = instance.profile().at(a).ranked();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out += i == 0 ? " " : " | ";
      out += JoinNames(ranked[i], instance, " ");
    }
    out += "\n";
  }
  return out;
}

PreferenceRelation ParsePreferenceList(std::string_view text, AgentId owner,
                                       const MarketInstance& instance) {
  // Reuse the document parser on a one-agent document.
  std::string doc = "firms:";
  for (const auto& n : instance.firm_names()) doc += " " + n;
  doc += "\nworkers:";
  for (const auto& n : instance.worker_names()) doc += " " + n;
  doc += "\npref " + instance.Name(owner) + ": ";
  doc += text;
  doc += "\n";
  try {
    return ParseMarket(doc).profile().at(owner);
  } catch (const MarketFormatError& e) {
    // Positions refer to the synthetic document; report the message only.
    std::string message = e.what();
    const std::size_t sep = message.find(": ");
    if (e.line() > 0 && sep != std::string::npos) {
      message = message.substr(sep + 2);
    }
    throw MarketFormatError(0, 0, "preference list: " + message);
  }
}

std::string FormatSet(const PartnerSet& set, const MarketInstance& instance) {
  if (set.empty()) return std::string(kEmptySetGlyph);
  return JoinNames(set, instance, ",");
}

std::string FormatPreference(const PreferenceRelation& pref,
                             const MarketInstance& instance) {
  if (pref.ranked().empty()) return std::string(kEmptySetGlyph);
  std::string out;
  for (const PartnerSet& set : pref.ranked()) {
    if (!out.empty()) out += " | ";
    out += JoinNames(set, instance, " ");
  }
  return out;
}

std::string RenderMatchingTable(
    const std::vector<std::pair<std::string, Matching>>& rows,
    const MarketInstance& instance) {
  const int num_firms = instance.profile().num_firms();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& name : instance.firm_names()) header.push_back(name);
  cells.push_back(header);
  for (const auto& [label, matching] : rows) {
    std::vector<std::string> row{label};
    for (int f = 0; f < num_firms; ++f) {
      row.push_back(FormatSet(MatchedSet(matching, AgentId::Firm(f)), instance));
    }
    cells.push_back(std::move(row));
  }
  const bool labelled = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
    return !r.first.empty();
  });
  std::vector<std::size_t> widths(num_firms + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], DisplayWidth(row[c]));
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = labelled ? 0 : 1; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line.append(widths[c] - DisplayWidth(row[c]) + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string RenderMatching(const Matching& matching,
                           const MarketInstance& instance) {
  return RenderMatchingTable({{"", matching}}, instance);
}

}  // namespace manymatch
