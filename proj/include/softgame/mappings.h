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

#ifndef SOFTGAME_MAPPINGS_H_
#define SOFTGAME_MAPPINGS_H_

#include <optional>
#include <span>
#include <vector>

#include "softgame/game.h"
#include "softgame/scsp.h"
#include "softgame/semiring.h"

namespace softgame {

// A strictly order preserving map f from a game's payoffs to the
// preferences of one component of a product semiring.
//
//   Identity:       f(r) = r, target = source (a c-semiring).
//   Complement(M):  f(r) = M - r as a weighted cost, for sources whose values
//                   are finite numbers with larger meaning better (utility,
//                   fuzzy, classical as 0/1). Requires M >= every payoff.
class OrderPreservingMap {
 public:
  enum class Rule { kIdentity, kComplement };

  // Throws kNotASemiring when the carrier cannot serve as a target.
  static OrderPreservingMap Identity(const Semiring& carrier);
  static OrderPreservingMap Complement(const Semiring& source, Rational ceiling);

  Rule rule() const { return rule_; }
  const Semiring& source() const { return source_; }
  const Semiring& target() const { return target_; }
  const Rational& ceiling() const { return ceiling_; }

  // Throws kCeilingTooSmall, or kNotOrderPreserving for payoffs that have no
  // finite numeric reading.
  PrefValue Apply(const PrefValue& payoff) const;

  // Checks strict order preservation over every pair of the given payoffs.
  // Throws kNotOrderPreserving naming the violating pair, or
  // kCeilingTooSmall.
  void Validate(std::span<const PrefValue> payoffs) const;

 private:
  OrderPreservingMap(Rule rule, Semiring source, Semiring target, Rational ceiling)
      : rule_(rule), source_(std::move(source)), target_(std::move(target)),
        ceiling_(std::move(ceiling)) {}

  Rule rule_;
  Semiring source_;
  Semiring target_;
  Rational ceiling_;
};

// Greatest finite payoff anywhere in the game, read as a number. Zero for a
// game whose payoffs are all infinite costs.
Rational GreatestPayoff(const GraphicalGame& game);

// One map per player: Identity for classical, fuzzy and weighted carriers;
// Complement(GreatestPayoff) for the utility scale.
std::vector<OrderPreservingMap> DefaultMaps(const GraphicalGame& game);

// One map per player with the given rule; a missing ceiling means
// GreatestPayoff(game).
std::vector<OrderPreservingMap> UniformMaps(const GraphicalGame& game,
                                            OrderPreservingMap::Rule rule,
                                            std::optional<Rational> ceiling = std::nullopt);

// L(P): one player per variable; j is a neighbour of i iff they share a
// constraint; p_i combines exactly the constraints involving x_i.
// Throws kNotLinearlyOrdered or kTooFewVariables.
GraphicalGame LocalMap(const Scsp& problem);

// GL(P): every player is everyone's neighbour and every payoff is the
// preference of the whole solution.
GraphicalGame GlobalMap(const Scsp& problem);

// L'(G): one variable per player over the product of the maps' targets; one
// constraint per player on neigh(i) + {i} (player order) whose tuples are the
// product one except coordinate i = f_i(p_i).
// Throws kNotOrderPreserving, kCeilingTooSmall or kInvalidGame.
Scsp GameToScsp(const GraphicalGame& game, std::span<const OrderPreservingMap> maps);

// H(G): classical problem with one constraint per player on neigh(i) + {i}
// (player order) allowing exactly the tuples where i plays a best response.
Scsp Harden(const GraphicalGame& game);

// All constraints of `soft` plus those of `hard`. When `hard` is classical
// and `soft` is not, hard values are lifted: true -> one, false -> zero.
// Throws kVariableMismatch, kDomainMismatch or kKindMismatch.
Scsp Merge(const Scsp& soft, const Scsp& hard);

}  // namespace softgame

#endif  // SOFTGAME_MAPPINGS_H_
