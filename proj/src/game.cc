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

#include "softgame/game.h"

#include <algorithm>
#include <set>

#include "softgame/error.h"
#include "softgame/pareto.h"

namespace softgame {

GraphicalGame::GraphicalGame(Semiring carrier, std::vector<Player> players,
                             std::vector<std::vector<std::size_t>> neighbors,
                             std::vector<std::vector<PrefValue>> payoff_tables)
    : carrier_(std::move(carrier)),
      players_(std::move(players)),
      neighbors_(std::move(neighbors)),
      tables_(std::move(payoff_tables)) {
  if (carrier_.kind() == CarrierKind::kProduct) {
    throw Error(ErrorCode::kNotLinearlyOrdered,
                "payoff carrier must be linearly ordered, got " + carrier_.name());
  }
  const std::size_t n = players_.size();
  if (n < 2) throw Error(ErrorCode::kInvalidGame, "a game needs at least two players");
  if (neighbors_.size() != n || tables_.size() != n) {
    throw Error(ErrorCode::kInvalidGame, "one neighbourhood and payoff table per player");
  }
  std::set<std::string> names;
  for (const auto& p : players_) {
    if (!names.insert(p.name).second) {
      throw Error(ErrorCode::kInvalidGame, "duplicate player '" + p.name + "'");
    }
    if (p.strategies.empty()) {
      throw Error(ErrorCode::kInvalidGame, "player '" + p.name + "' has no strategies");
    }
    if (std::set<std::string>(p.strategies.begin(), p.strategies.end()).size() !=
        p.strategies.size()) {
      throw Error(ErrorCode::kInvalidGame, "player '" + p.name + "' repeats a strategy");
    }
    sizes_.push_back(p.strategies.size());
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& neigh = neighbors_[i];
    std::sort(neigh.begin(), neigh.end());
    neigh.erase(std::unique(neigh.begin(), neigh.end()), neigh.end());
    std::size_t rows = sizes_[i];
    for (std::size_t j : neigh) {
      if (j >= n) throw Error(ErrorCode::kInvalidGame, "neighbour index out of range");
      if (j == i) {
        throw Error(ErrorCode::kInvalidGame,
                    "player '" + players_[i].name + "' is its own neighbour");
      }
      rows *= sizes_[j];
    }
    std::vector<std::size_t> scope = neigh;
    scope.push_back(i);
    scopes_.push_back(std::move(scope));
    if (tables_[i].size() != rows) {
      throw Error(ErrorCode::kInvalidGame,
                  "payoff table of '" + players_[i].name + "' is not total");
    }
    for (const auto& v : tables_[i]) {
      if (!carrier_.Contains(v)) {
        throw Error(ErrorCode::kKindMismatch, "payoff " + ToString(v) + " is not in the " +
                                                  carrier_.name() + " carrier");
      }
    }
  }
}

std::size_t GraphicalGame::PlayerIndex(std::string_view name) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i].name == name) return i;
  }
  throw Error(ErrorCode::kUnknownPlayer, "no player '" + std::string(name) + "'");
}

JointAssignment GraphicalGame::Assign(std::span<const std::string> labels) const {
  if (labels.size() != players_.size()) {
    throw Error(ErrorCode::kInvalidGame, "joint strategy has the wrong number of entries");
  }
  JointAssignment s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& strategies = players_[i].strategies;
    auto it = std::find(strategies.begin(), strategies.end(), labels[i]);
    if (it == strategies.end()) {
      throw Error(ErrorCode::kInvalidGame, "'" + labels[i] + "' is not a strategy of '" +
                                               players_[i].name + "'");
    }
    s.values.push_back(static_cast<std::size_t>(it - strategies.begin()));
  }
  return s;
}

JointAssignment GraphicalGame::Assign(std::string_view compact) const {
  std::vector<std::string> labels;
  for (char c : compact) labels.emplace_back(1, c);
  return Assign(labels);
}

const PrefValue& GraphicalGame::Payoff(std::size_t player, const JointAssignment& s) const {
  return tables_[player][TableIndex(s, scopes_[player], sizes_)];
}

const PrefValue& GraphicalGame::Payoff(std::string_view player,
                                       const JointAssignment& s) const {
  return Payoff(PlayerIndex(player), s);
}

PayoffVector GraphicalGame::Payoffs(const JointAssignment& s) const {
  PayoffVector out;
  out.reserve(players_.size());
  for (std::size_t i = 0; i < players_.size(); ++i) out.push_back(Payoff(i, s));
  return out;
}

std::string GraphicalGame::Render(const JointAssignment& s) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    labels.push_back(players_[i].strategies[s.values[i]]);
  }
  return RenderLabels(labels);
}

std::vector<std::vector<std::size_t>> CompleteNeighbors(std::size_t num_players) {
  std::vector<std::vector<std::size_t>> out(num_players);
  for (std::size_t i = 0; i < num_players; ++i) {
    for (std::size_t j = 0; j < num_players; ++j) {
      if (i != j) out[i].push_back(j);
    }
  }
  return out;
}

bool IsNash(const GraphicalGame& game, const JointAssignment& s) {
  const Semiring& carrier = game.carrier();
  JointAssignment deviation = s;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const PrefValue& current = game.Payoff(i, s);
    for (std::size_t alt = 0; alt < game.strategy_counts()[i]; ++alt) {
      if (alt == s.values[i]) continue;
      deviation.values[i] = alt;
      if (carrier.less(current, game.Payoff(i, deviation))) return false;
    }
    deviation.values[i] = s.values[i];
  }
  return true;
}

bool ParetoLess(const Semiring& carrier, const PayoffVector& worse,
                const PayoffVector& better) {
  bool strict = false;
  for (std::size_t i = 0; i < worse.size(); ++i) {
    if (!carrier.leq(worse[i], better[i])) return false;
    strict = strict || !(worse[i] == better[i]);
  }
  return strict;
}

bool ParetoDominates(const GraphicalGame& game, const JointAssignment& better,
                     const JointAssignment& worse) {
  return ParetoLess(game.carrier(), game.Payoffs(worse), game.Payoffs(better));
}

namespace {

// Pareto-maximal members of `candidates`, compared only against each other.
std::vector<JointAssignment> ParetoMaximal(const GraphicalGame& game,
                                           std::vector<JointAssignment> candidates) {
  std::vector<PayoffVector> vectors;
  vectors.reserve(candidates.size());
  for (const auto& s : candidates) vectors.push_back(game.Payoffs(s));
  std::vector<Semiring> orders(game.num_players(), game.carrier());
  std::vector<JointAssignment> out;
  for (std::size_t i : ParetoFront(vectors, orders)) out.push_back(std::move(candidates[i]));
  return out;
}

}  // namespace

std::vector<JointAssignment> EnumerateNash(const GraphicalGame& game) {
  std::vector<JointAssignment> out;
  for (auto& s : AllAssignments(game.strategy_counts())) {
    if (IsNash(game, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<JointAssignment> EnumeratePareto(const GraphicalGame& game) {
  return ParetoMaximal(game, AllAssignments(game.strategy_counts()));
}

std::vector<JointAssignment> EnumerateParetoNash(const GraphicalGame& game) {
  return ParetoMaximal(game, EnumerateNash(game));
}

std::vector<JointAssignment> EnumerateNashAndGlobalPareto(const GraphicalGame& game) {
  std::vector<JointAssignment> nash = EnumerateNash(game);
  std::vector<JointAssignment> pareto = EnumeratePareto(game);
  std::vector<JointAssignment> out;
  std::set_intersection(nash.begin(), nash.end(), pareto.begin(), pareto.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace softgame
