// Copyright 2026 The Softgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTGAME_IO_H_
#define SOFTGAME_IO_H_

#include <istream>
#include <string>
#include <variant>

#include "json.hpp"
#include "softgame/game.h"
#include "softgame/scsp.h"
#include "softgame/semiring.h"

namespace softgame {

using Json = nlohmann::ordered_json;

// {"kind": "fuzzy"} or {"kind": {"product": ["weighted", "weighted"]}}.
Semiring SemiringFromJson(const Json& j);
Json SemiringToJson(const Semiring& semiring);

// SCSP files:
//   {"semiring": {...}, "variables": [{"name": "x", "domain": ["a","b"]}],
//    "constraints": [{"scope": ["x","y"], "table": {"a,a": "0.4", ...}}]}
// Table keys join the scoped values with commas; every key must be present.
Scsp ScspFromJson(const Json& j);
Json ScspToJson(const Scsp& problem);

// Game files:
//   {"carrier": {...}, "players": [{"name": "p1", "strategies": [...]}],
//    "neigh": {"p1": ["p2"]}, "payoffs": {"p1": {"c,c": "3", ...}}}
// Payoff keys list the neighbours' strategies in player order, then the
// owner's. Without "neigh" every player neighbours every other.
GraphicalGame GameFromJson(const Json& j);
Json GameToJson(const GraphicalGame& game);

using Document = std::variant<Scsp, GraphicalGame>;

// Dispatches on "players" (game) vs "variables" (problem). All failures,
// including invalid contents, surface as Error(kParseError).
Document ParseDocument(const std::string& text);
Scsp ParseScsp(const std::string& text);
GraphicalGame ParseGame(const std::string& text);

std::string Dump(const Json& j);

}  // namespace softgame

#endif  // SOFTGAME_IO_H_
