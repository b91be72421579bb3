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

#ifndef SOFTGAME_GAME_H_
#define SOFTGAME_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgame/assignment.h"
#include "softgame/semiring.h"
#include "softgame/value.h"

namespace softgame {

struct Player {
  std::string name;
  std::vector<std::string> strategies;

  bool operator==(const Player&) const = default;
};

// Payoffs p_1(s), ..., p_n(s) in player order.
using PayoffVector = std::vector<PrefValue>;

// A graphical game (S_1, ..., S_n, neigh, p_1, ..., p_n, A) with payoffs in a
// linearly ordered carrier.
//
// Player i's payoff table is dense and row-major over its local scope:
// neigh(i) in player order, then i itself last. Neighbourhoods need not be
// symmetric.
class GraphicalGame {
 public:
  // Throws kInvalidGame, kNotLinearlyOrdered or kKindMismatch.
  GraphicalGame(Semiring carrier, std::vector<Player> players,
                std::vector<std::vector<std::size_t>> neighbors,
                std::vector<std::vector<PrefValue>> payoff_tables);

  const Semiring& carrier() const { return carrier_; }
  const std::vector<Player>& players() const { return players_; }
  std::size_t num_players() const { return players_.size(); }
  std::span<const std::size_t> strategy_counts() const { return sizes_; }
  // Sorted neighbour indices of player i.
  std::span<const std::size_t> neighbors(std::size_t i) const { return neighbors_[i]; }
  // neigh(i) in player order followed by i.
  std::span<const std::size_t> local_scope(std::size_t i) const { return scopes_[i]; }
  std::span<const PrefValue> payoff_table(std::size_t i) const { return tables_[i]; }

  // Throws kUnknownPlayer.
  std::size_t PlayerIndex(std::string_view name) const;

  JointAssignment Assign(std::span<const std::string> labels) const;
  JointAssignment Assign(std::string_view compact) const;

  // Canonical extension of p_i: only i's local scope of s is read.
  const PrefValue& Payoff(std::size_t player, const JointAssignment& s) const;
  const PrefValue& Payoff(std::string_view player, const JointAssignment& s) const;
  PayoffVector Payoffs(const JointAssignment& s) const;

  std::string Render(const JointAssignment& s) const;

  bool operator==(const GraphicalGame&) const = default;

 private:
  Semiring carrier_;
  std::vector<Player> players_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<std::size_t>> scopes_;
  std::vector<std::vector<PrefValue>> tables_;
  std::vector<std::size_t> sizes_;
};

// Fully connected neighbourhoods: the strategic-game special case.
std::vector<std::vector<std::size_t>> CompleteNeighbors(std::size_t num_players);

// No player can strictly improve by a unilateral deviation.
bool IsNash(const GraphicalGame& game, const JointAssignment& s);

// The payoff vector of `better` is componentwise >= that of `worse`, with at
// least one strict component.
bool ParetoDominates(const GraphicalGame& game, const JointAssignment& better,
                     const JointAssignment& worse);
bool ParetoLess(const Semiring& carrier, const PayoffVector& worse,
                const PayoffVector& better);

// All enumerations return canonical (lexicographic) order.
std::vector<JointAssignment> EnumerateNash(const GraphicalGame& game);
std::vector<JointAssignment> EnumeratePareto(const GraphicalGame& game);
// Nash equilibria not Pareto dominated by another Nash equilibrium.
std::vector<JointAssignment> EnumerateParetoNash(const GraphicalGame& game);
// Nash equilibria that are Pareto efficient among all joint strategies.
std::vector<JointAssignment> EnumerateNashAndGlobalPareto(const GraphicalGame& game);

}  // namespace softgame

#endif  // SOFTGAME_GAME_H_
