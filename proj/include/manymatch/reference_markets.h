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

#ifndef MANYMATCH_REFERENCE_MARKETS_H_
#define MANYMATCH_REFERENCE_MARKETS_H_

// Three small markets shipped with the library, used by `paper-examples`,
// the acceptance suite and the tests:
//
//  unstable-manipulation      three firms, four workers; substitutable
//                             preferences. Under the firm-optimal rule w1
//                             gains by declaring only f3 acceptable, and the
//                             resulting matching is blocked by (f1, w1).
//  firms-cannot-manipulate    three firms, four workers; substitutable but
//                             not LAD. Under the worker-optimal rule no firm
//                             reaches its firm-optimal assignment by
//                             truncating.
//  workers-cannot-manipulate  two firms, four workers; substitutable but not
//                             LAD. Under the firm-optimal rule no worker can
//                             profit from any report.

#include <string_view>
#include <vector>

#include "manymatch/market.h"

namespace manymatch {

struct ReferenceMarket {
  std::string_view key;
  std::string_view text;
};

const std::vector<ReferenceMarket>& ReferenceMarkets();

// Throws InvalidArgument for an unknown key.
MarketInstance LoadReferenceMarket(std::string_view key);

// Expected `paper-examples` text report.
std::string_view ReferenceExamplesGolden();

}  // namespace manymatch

#endif  // MANYMATCH_REFERENCE_MARKETS_H_
