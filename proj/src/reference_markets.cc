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

#include "manymatch/reference_markets.h"

#include <string>

#include "manymatch/errors.h"
#include "manymatch/market_io.h"
#include "reference_golden.h"

namespace manymatch {
namespace {

constexpr std::string_view kUnstableManipulation = R"(firms: f1 f2 f3
workers: w1 w2 w3 w4
pref f1: w2 w3 | w2 w4 | w1 w3 | w1 w2 | w1 w4 | w3 w4 | w1 | w2 | w3 | w4
pref f2: w1 | w2
pref f3: w4 | w1
pref w1: f1 | f3 | f2
pref w2: f2 | f1
pref w3: f1 | f3
pref w4: f1 | f3
)";

constexpr std::string_view kFirmsCannotManipulate = R"(firms: f1 f2 f3
workers: w1 w2 w3 w4
pref f1: w1 w2 | w1 | w2 | w3 w4 | w3 | w4
pref f2: w3 | w1 w4 | w4 | w1 w2 | w1 | w2
pref f3: w4 | w2 w3 | w1 w2 | w3 | w1 | w2
pref w1: f2 | f3 | f1
pref w2: f2 | f3 | f1
pref w3: f1 | f3 | f2
pref w4: f1 | f2 | f3
)";

constexpr std::string_view kWorkersCannotManipulate = R"(firms: f1 f2
workers: w1 w2 w3 w4
pref f1: w1 w2 | w1 | w2 | w3 w4 | w3 | w4
pref f2: w3 w4 | w3 | w4 | w1 w2 | w1 | w2
pref w1: f2 | f1
pref w2: f2 | f1
pref w3: f1 | f2
pref w4: f1 | f2
)";

}  // namespace

const std::vector<ReferenceMarket>& ReferenceMarkets() {
  static const std::vector<ReferenceMarket> markets = {
      {"unstable-manipulation", kUnstableManipulation},
      {"firms-cannot-manipulate", kFirmsCannotManipulate},
      {"workers-cannot-manipulate", kWorkersCannotManipulate},
  };
  return markets;
}

MarketInstance LoadReferenceMarket(std::string_view key) {
  for (const ReferenceMarket& market : ReferenceMarkets()) {
    if (market.key == key) return ParseMarket(market.text);
  }
  throw InvalidArgument("unknown reference market '" + std::string(key) + "'");
}

std::string_view ReferenceExamplesGolden() { return kReferenceGolden; }

}  // namespace manymatch
