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

#include "softgame/io.h"

#include <algorithm>
#include <map>
#include <set>

#include "softgame/error.h"

namespace softgame {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string StringOf(const Json& j, const std::string& what) {
  if (!j.is_string()) Malformed(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> StringList(const Json& j, const std::string& what) {
  if (!j.is_array()) Malformed(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(StringOf(item, what + " entry"));
  return out;
}

Semiring BaseKind(const std::string& kind) {
  if (kind == "classical") return Semiring::Classical();
  if (kind == "fuzzy") return Semiring::Fuzzy();
  if (kind == "weighted") return Semiring::Weighted();
  if (kind == "utility") return Semiring::Utility();
  Malformed("unknown semiring kind '" + kind + "'");
}

PrefValue ValueFromJson(const Semiring& s, const Json& j) {
  if (j.is_string()) return s.Parse(j.get<std::string>());
  if (j.is_boolean()) return s.Parse(j.get<bool>() ? "true" : "false");
  if (j.is_number_integer()) return s.Parse(j.dump());
  Malformed("preference " + j.dump() + " must be a string, boolean or integer");
}

std::string Key(std::span<const std::string> labels) {
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) key += ",";
    key += labels[i];
  }
  return key;
}

// Dense row-major table from a keyed object; rejects missing and extra keys.
std::vector<PrefValue> TableFromJson(const Semiring& s, const Json& j,
                                     const std::vector<const std::vector<std::string>*>& domains,
                                     const std::string& what) {
  if (!j.is_object()) Malformed(what + " must be an object");
  std::vector<std::size_t> sizes;
  for (const auto* d : domains) sizes.push_back(d->size());
  std::vector<PrefValue> table;
  for (const auto& tuple : AllAssignments(sizes)) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < domains.size(); ++k) labels.push_back((*domains[k])[tuple[k]]);
    std::string key = Key(labels);
    if (!j.contains(key)) Malformed(what + " is missing key '" + key + "'");
    table.push_back(ValueFromJson(s, j.at(key)));
  }
  if (j.size() != table.size()) Malformed(what + " has keys outside its scope");
  return table;
}

Json TableToJson(std::span<const PrefValue> table,
                 const std::vector<const std::vector<std::string>*>& domains) {
  std::vector<std::size_t> sizes;
  for (const auto* d : domains) sizes.push_back(d->size());
  Json out = Json::object();
  std::size_t row = 0;
  for (const auto& tuple : AllAssignments(sizes)) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < domains.size(); ++k) labels.push_back((*domains[k])[tuple[k]]);
    out[Key(labels)] = ToString(table[row++]);
  }
  return out;
}

template <typename Fn>
auto AsParseError(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

Semiring SemiringFromJson(const Json& j) {
  const Json& kind = Field(j, "kind");
  if (kind.is_string()) return BaseKind(kind.get<std::string>());
  if (kind.is_object() && kind.contains("product")) {
    std::vector<Semiring> components;
    for (const auto& name : StringList(kind.at("product"), "product component")) {
      components.push_back(BaseKind(name));
    }
    return AsParseError([&] { return Semiring::Product(std::move(components)); });
  }
  Malformed("unknown semiring kind " + kind.dump());
}

Json SemiringToJson(const Semiring& semiring) {
  if (semiring.kind() != CarrierKind::kProduct) return Json{{"kind", semiring.name()}};
  Json parts = Json::array();
  for (const auto& c : semiring.components()) parts.push_back(c.name());
  return Json{{"kind", Json{{"product", parts}}}};
}

Scsp ScspFromJson(const Json& j) {
  return AsParseError([&] {
    Semiring semiring = SemiringFromJson(Field(j, "semiring"));
    std::vector<Variable> variables;
    std::map<std::string, std::size_t> index;
    const Json& vars = Field(j, "variables");
    if (!vars.is_array()) Malformed("'variables' must be an array");
    for (const auto& v : vars) {
      Variable var{StringOf(Field(v, "name"), "variable name"),
                   StringList(Field(v, "domain"), "domain")};
      index.emplace(var.name, variables.size());
      variables.push_back(std::move(var));
    }
    std::vector<SoftConstraint> constraints;
    const Json& cons = j.contains("constraints") ? j.at("constraints") : Json::array();
    if (!cons.is_array()) Malformed("'constraints' must be an array");
    for (const auto& c : cons) {
      SoftConstraint constraint;
      std::vector<const std::vector<std::string>*> domains;
      for (const auto& name : StringList(Field(c, "scope"), "scope")) {
        auto it = index.find(name);
        if (it == index.end()) Malformed("scope names unknown variable '" + name + "'");
        constraint.scope.push_back(it->second);
        domains.push_back(&variables[it->second].domain);
      }
      constraint.table = TableFromJson(semiring, Field(c, "table"), domains, "constraint table");
      constraints.push_back(std::move(constraint));
    }
    return Scsp(std::move(semiring), std::move(variables), std::move(constraints));
  });
}

Json ScspToJson(const Scsp& problem) {
  Json out;
  out["semiring"] = SemiringToJson(problem.semiring());
  Json vars = Json::array();
  for (const auto& v : problem.variables()) {
    vars.push_back(Json{{"name", v.name}, {"domain", v.domain}});
  }
  out["variables"] = vars;
  Json cons = Json::array();
  for (const auto& c : problem.constraints()) {
    Json scope = Json::array();
    std::vector<const std::vector<std::string>*> domains;
    for (std::size_t var : c.scope) {
      scope.push_back(problem.variables()[var].name);
      domains.push_back(&problem.variables()[var].domain);
    }
    cons.push_back(Json{{"scope", scope}, {"table", TableToJson(c.table, domains)}});
  }
  out["constraints"] = cons;
  return out;
}

GraphicalGame GameFromJson(const Json& j) {
  return AsParseError([&] {
    Semiring carrier = SemiringFromJson(Field(j, "carrier"));
    std::vector<Player> players;
    std::map<std::string, std::size_t> index;
    const Json& ps = Field(j, "players");
    if (!ps.is_array()) Malformed("'players' must be an array");
    for (const auto& p : ps) {
      Player player{StringOf(Field(p, "name"), "player name"),
                    StringList(Field(p, "strategies"), "strategies")};
      index.emplace(player.name, players.size());
      players.push_back(std::move(player));
    }
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) Malformed("unknown player '" + name + "'");
      return it->second;
    };

    std::vector<std::vector<std::size_t>> neighbors(players.size());
    if (j.contains("neigh")) {
      const Json& neigh = j.at("neigh");
      if (!neigh.is_object()) Malformed("'neigh' must be an object");
      for (const auto& [name, list] : neigh.items()) {
        std::size_t i = lookup(name);
        for (const auto& other : StringList(list, "neighbour list")) {
          neighbors[i].push_back(lookup(other));
        }
        std::sort(neighbors[i].begin(), neighbors[i].end());
        neighbors[i].erase(std::unique(neighbors[i].begin(), neighbors[i].end()),
                           neighbors[i].end());
      }
    } else {
      neighbors = CompleteNeighbors(players.size());
    }

    const Json& payoffs = Field(j, "payoffs");
    if (!payoffs.is_object()) Malformed("'payoffs' must be an object");
    for (const auto& [name, table] : payoffs.items()) lookup(name);
    std::vector<std::vector<PrefValue>> tables;
    for (std::size_t i = 0; i < players.size(); ++i) {
      std::vector<const std::vector<std::string>*> domains;
      for (std::size_t k : neighbors[i]) {
        if (k >= players.size()) Malformed("bad neighbour");
        domains.push_back(&players[k].strategies);
      }
      domains.push_back(&players[i].strategies);
      const std::string what = "payoff table of '" + players[i].name + "'";
      tables.push_back(TableFromJson(carrier, Field(payoffs, players[i].name.c_str()), domains, what));
    }
    return GraphicalGame(std::move(carrier), std::move(players), std::move(neighbors),
                         std::move(tables));
  });
}

Json GameToJson(const GraphicalGame& game) {
  Json out;
  out["carrier"] = SemiringToJson(game.carrier());
  Json players = Json::array();
  for (const auto& p : game.players()) {
    players.push_back(Json{{"name", p.name}, {"strategies", p.strategies}});
  }
  out["players"] = players;
  Json neigh = Json::object();
  Json payoffs = Json::object();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    Json names = Json::array();
    for (std::size_t k : game.neighbors(i)) names.push_back(game.players()[k].name);
    neigh[game.players()[i].name] = names;
    std::vector<const std::vector<std::string>*> domains;
    for (std::size_t k : game.local_scope(i)) domains.push_back(&game.players()[k].strategies);
    payoffs[game.players()[i].name] = TableToJson(game.payoff_table(i), domains);
  }
  out["neigh"] = neigh;
  out["payoffs"] = payoffs;
  return out;
}

Document ParseDocument(const std::string& text) {
  Json j = AsParseError([&] { return Json::parse(text); });
  if (j.is_object() && j.contains("players")) return GameFromJson(j);
  if (j.is_object() && j.contains("variables")) return ScspFromJson(j);
  Malformed("neither a problem (\"variables\") nor a game (\"players\")");
}

Scsp ParseScsp(const std::string& text) {
  Document doc = ParseDocument(text);
  if (auto* p = std::get_if<Scsp>(&doc)) return std::move(*p);
  Malformed("expected a soft constraint problem, got a game");
}

GraphicalGame ParseGame(const std::string& text) {
  Document doc = ParseDocument(text);
  if (auto* g = std::get_if<GraphicalGame>(&doc)) return std::move(*g);
  Malformed("expected a game, got a soft constraint problem");
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace softgame
