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

#include "softgame/mappings.h"

#include <algorithm>
#include <set>

#include "softgame/error.h"

namespace softgame {
namespace {

// Finite numeric reading of a payoff, if any.
std::optional<Rational> NumericPayoff(const PrefValue& v) {
  if (v.holds<Truth>()) return Rational(v.as<Truth>().value ? 1 : 0);
  if (v.holds<Fuzzy>()) return v.as<Fuzzy>().level;
  if (v.holds<Utility>()) return v.as<Utility>().amount;
  if (v.holds<Cost>() && !v.as<Cost>().is_infinite()) return *v.as<Cost>().amount;
  return std::nullopt;
}

// Calls fn(full assignment) for every tuple over `scope`, in row-major order.
// Positions outside the scope stay 0.
template <typename Fn>
void ForEachLocalTuple(std::span<const std::size_t> sizes,
                       std::span<const std::size_t> scope, Fn fn) {
  std::vector<std::size_t> scoped_sizes;
  for (std::size_t var : scope) scoped_sizes.push_back(sizes[var]);
  JointAssignment full{std::vector<std::size_t>(sizes.size(), 0)};
  for (const auto& local : AllAssignments(scoped_sizes)) {
    for (std::size_t k = 0; k < scope.size(); ++k) full.values[scope[k]] = local.values[k];
    fn(full);
  }
}

void RequireGameSource(const Scsp& problem) {
  if (problem.semiring().kind() == CarrierKind::kProduct) {
    throw Error(ErrorCode::kNotLinearlyOrdered,
                "games need a linearly ordered carrier, got " + problem.semiring().name());
  }
  if (problem.variables().size() < 2) {
    throw Error(ErrorCode::kTooFewVariables, "a game needs at least two players");
  }
}

std::vector<Player> PlayersOf(const Scsp& problem) {
  std::vector<Player> players;
  for (const auto& v : problem.variables()) players.push_back({v.name, v.domain});
  return players;
}

std::vector<Variable> VariablesOf(const GraphicalGame& game) {
  std::vector<Variable> vars;
  for (const auto& p : game.players()) vars.push_back({p.name, p.strategies});
  return vars;
}

std::vector<std::size_t> SortedScope(std::span<const std::size_t> local_scope) {
  std::vector<std::size_t> scope(local_scope.begin(), local_scope.end());
  std::sort(scope.begin(), scope.end());
  return scope;
}

}  // namespace

OrderPreservingMap OrderPreservingMap::Identity(const Semiring& carrier) {
  if (!carrier.is_c_semiring()) {
    throw Error(ErrorCode::kNotASemiring,
                "identity needs a c-semiring carrier; use complement for " + carrier.name());
  }
  return OrderPreservingMap(Rule::kIdentity, carrier, carrier, 0);
}

OrderPreservingMap OrderPreservingMap::Complement(const Semiring& source, Rational ceiling) {
  if (ceiling < 0) {
    throw Error(ErrorCode::kCeilingTooSmall, "ceiling must be non-negative");
  }
  return OrderPreservingMap(Rule::kComplement, source, Semiring::Weighted(),
                            std::move(ceiling));
}

PrefValue OrderPreservingMap::Apply(const PrefValue& payoff) const {
  if (!source_.Contains(payoff)) {
    throw Error(ErrorCode::kKindMismatch,
                "payoff " + ToString(payoff) + " is not in the " + source_.name() + " carrier");
  }
  if (rule_ == Rule::kIdentity) return payoff;
  std::optional<Rational> r = NumericPayoff(payoff);
  if (!r) {
    throw Error(ErrorCode::kNotOrderPreserving,
                "complement is undefined for " + source_.name() + " payoff " + ToString(payoff));
  }
  if (*r > ceiling_) {
    throw Error(ErrorCode::kCeilingTooSmall, "ceiling " + FormatRational(ceiling_) +
                                                 " is below payoff " + FormatRational(*r));
  }
  return PrefValue::FiniteCost(ceiling_ - *r);
}

void OrderPreservingMap::Validate(std::span<const PrefValue> payoffs) const {
  std::vector<PrefValue> distinct;
  for (const auto& p : payoffs) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  std::vector<PrefValue> images;
  for (const auto& p : distinct) {
    images.push_back(Apply(p));
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (source_.less(distinct[i], distinct[j]) && !target_.less(images[i], images[j])) {
        throw Error(ErrorCode::kNotOrderPreserving,
                    ToString(distinct[i]) + " < " + ToString(distinct[j]) + " but f gives " +
                        ToString(images[i]) + ", " + ToString(images[j]));
      }
    }
  }
}

Rational GreatestPayoff(const GraphicalGame& game) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (const auto& v : game.payoff_table(i)) {
      std::optional<Rational> r = NumericPayoff(v);
      if (r && (!best || *r > *best)) best = r;
    }
  }
  return best.value_or(0);
}

std::vector<OrderPreservingMap> DefaultMaps(const GraphicalGame& game) {
  if (game.carrier().kind() == CarrierKind::kUtility) {
    return UniformMaps(game, OrderPreservingMap::Rule::kComplement);
  }
  return UniformMaps(game, OrderPreservingMap::Rule::kIdentity);
}

std::vector<OrderPreservingMap> UniformMaps(const GraphicalGame& game,
                                            OrderPreservingMap::Rule rule,
                                            std::optional<Rational> ceiling) {
  std::vector<OrderPreservingMap> maps;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (rule == OrderPreservingMap::Rule::kIdentity) {
      maps.push_back(OrderPreservingMap::Identity(game.carrier()));
    } else {
      maps.push_back(
          OrderPreservingMap::Complement(game.carrier(), ceiling.value_or(GreatestPayoff(game))));
    }
  }
  return maps;
}

GraphicalGame LocalMap(const Scsp& problem) {
  RequireGameSource(problem);
  const std::size_t n = problem.variables().size();
  const Semiring& semiring = problem.semiring();

  std::vector<std::vector<std::size_t>> neighbors(n);
  std::vector<std::vector<const SoftConstraint*>> incident(n);
  for (const auto& c : problem.constraints()) {
    for (std::size_t i : c.scope) {
      incident[i].push_back(&c);
      for (std::size_t j : c.scope) {
        if (j != i) neighbors[i].push_back(j);
      }
    }
  }
  std::vector<std::vector<PrefValue>> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& neigh = neighbors[i];
    std::sort(neigh.begin(), neigh.end());
    neigh.erase(std::unique(neigh.begin(), neigh.end()), neigh.end());
    std::vector<std::size_t> scope = neigh;
    scope.push_back(i);
    ForEachLocalTuple(problem.domain_sizes(), scope, [&](const JointAssignment& s) {
      PrefValue payoff = semiring.one();
      for (const SoftConstraint* c : incident[i]) {
        payoff = semiring.times(payoff, problem.ValueAt(*c, s));
      }
      tables[i].push_back(std::move(payoff));
    });
  }
  return GraphicalGame(semiring, PlayersOf(problem), std::move(neighbors), std::move(tables));
}

GraphicalGame GlobalMap(const Scsp& problem) {
  RequireGameSource(problem);
  const std::size_t n = problem.variables().size();
  std::vector<std::vector<std::size_t>> neighbors = CompleteNeighbors(n);
  std::vector<std::vector<PrefValue>> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> scope = neighbors[i];
    scope.push_back(i);
    ForEachLocalTuple(problem.domain_sizes(), scope, [&](const JointAssignment& s) {
      tables[i].push_back(problem.Preference(s));
    });
  }
  return GraphicalGame(problem.semiring(), PlayersOf(problem), std::move(neighbors),
                       std::move(tables));
}

Scsp GameToScsp(const GraphicalGame& game, std::span<const OrderPreservingMap> maps) {
  const std::size_t n = game.num_players();
  if (maps.size() != n) {
    throw Error(ErrorCode::kInvalidGame, "need exactly one order preserving map per player");
  }
  std::vector<Semiring> targets;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(maps[i].source() == game.carrier())) {
      throw Error(ErrorCode::kKindMismatch, "map source " + maps[i].source().name() +
                                                " differs from the game carrier " +
                                                game.carrier().name());
    }
    maps[i].Validate(game.payoff_table(i));
    targets.push_back(maps[i].target());
  }
  Semiring product = Semiring::Product(targets);
  const PrefValue one = product.one();

  std::vector<SoftConstraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    SoftConstraint c{SortedScope(game.local_scope(i)), {}};
    ForEachLocalTuple(game.strategy_counts(), c.scope, [&](const JointAssignment& s) {
      std::vector<PrefValue> items = one.as<Tuple>().items;
      items[i] = maps[i].Apply(game.Payoff(i, s));
      c.table.push_back(PrefValue::MakeTuple(std::move(items)));
    });
    constraints.push_back(std::move(c));
  }
  return Scsp(std::move(product), VariablesOf(game), std::move(constraints));
}

Scsp Harden(const GraphicalGame& game) {
  const Semiring& carrier = game.carrier();
  std::vector<SoftConstraint> constraints;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    SoftConstraint c{SortedScope(game.local_scope(i)), {}};
    ForEachLocalTuple(game.strategy_counts(), c.scope, [&](const JointAssignment& s) {
      const PrefValue& current = game.Payoff(i, s);
      JointAssignment deviation = s;
      bool best_response = true;
      for (std::size_t alt = 0; alt < game.strategy_counts()[i] && best_response; ++alt) {
        deviation.values[i] = alt;
        best_response = !carrier.less(current, game.Payoff(i, deviation));
      }
      c.table.push_back(PrefValue::Bool(best_response));
    });
    constraints.push_back(std::move(c));
  }
  return Scsp(Semiring::Classical(), VariablesOf(game), std::move(constraints));
}

Scsp Merge(const Scsp& soft, const Scsp& hard) {
  const auto& a = soft.variables();
  const auto& b = hard.variables();
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kVariableMismatch, "problems have different numbers of variables");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name) {
      throw Error(ErrorCode::kVariableMismatch,
                  "variable " + std::to_string(i) + " is '" + a[i].name + "' vs '" + b[i].name + "'");
    }
    if (a[i].domain != b[i].domain) {
      throw Error(ErrorCode::kDomainMismatch, "domains of '" + a[i].name + "' differ");
    }
  }
  std::vector<SoftConstraint> constraints = soft.constraints();
  if (hard.semiring() == soft.semiring()) {
    constraints.insert(constraints.end(), hard.constraints().begin(), hard.constraints().end());
  } else if (hard.semiring().kind() == CarrierKind::kClassical) {
    const PrefValue one = soft.semiring().one();
    const PrefValue zero = soft.semiring().zero();
    for (const auto& c : hard.constraints()) {
      SoftConstraint lifted{c.scope, {}};
      for (const auto& v : c.table) lifted.table.push_back(v.as<Truth>().value ? one : zero);
      constraints.push_back(std::move(lifted));
    }
  } else {
    throw Error(ErrorCode::kKindMismatch, "cannot merge " + hard.semiring().name() +
                                              " constraints into a " + soft.semiring().name() +
                                              " problem");
  }
  return Scsp(soft.semiring(), soft.variables(), std::move(constraints));
}

}  // namespace softgame
