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

#ifndef MANYMATCH_MARKET_IO_H_
#define MANYMATCH_MARKET_IO_H_

// Plain-text market documents and table rendering.
//
//   # comment
//   firms: f1 f2 f3
//   workers: w1 w2 w3 w4
//   pref f1: w2 w3 | w2 w4 | w1
//   pref w1: f1 | f3 | f2
//
// Alternatives are separated by '|', members by whitespace, best first. An
// agent without a pref line (or with nothing after the colon) finds every
// nonempty set unacceptable. The empty set is never written.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "manymatch/market.h"

namespace manymatch {

// Syntax and semantic errors in a market document. line/column are 1-based;
// 0 means the error is not tied to a position.
class MarketFormatError : public std::runtime_error {
 public:
  MarketFormatError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

MarketInstance ParseMarket(std::string_view text);

// Reads and parses a file; a missing file is a MarketFormatError at line 0.
MarketInstance LoadMarketFile(const std::string& path);

// Canonical document: header lines, then one pref line per agent (firms
// first), members of each alternative in index order.
std::string SerializeMarket(const MarketInstance& instance);

// Parses a single preference list ("w1 w2 | w1") for `owner`.
PreferenceRelation ParsePreferenceList(std::string_view text, AgentId owner,
                                       const MarketInstance& instance);

// "w2,w3", or "∅" for the empty set.
std::string FormatSet(const PartnerSet& set, const MarketInstance& instance);
// "w2 w3 | w1", or "∅" for an empty list.
std::string FormatPreference(const PreferenceRelation& pref,
                             const MarketInstance& instance);

// One column per firm with the sorted worker names of each cell. Rows carry
// an optional label in a leading column.
std::string RenderMatchingTable(
    const std::vector<std::pair<std::string, Matching>>& rows,
    const MarketInstance& instance);

std::string RenderMatching(const Matching& matching,
                           const MarketInstance& instance);

}  // namespace manymatch

#endif  // MANYMATCH_MARKET_IO_H_
