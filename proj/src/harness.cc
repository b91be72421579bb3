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

#include "softgame/harness.h"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "softgame/error.h"
#include "softgame/mappings.h"

namespace softgame {
namespace {

constexpr std::string_view kVariableNames[] = {"x", "y", "z", "w"};
constexpr std::string_view kValueLabels[] = {"a", "b", "c"};

const std::vector<std::string_view>& PropertyOrder() {
  static const std::vector<std::string_view> order = {
      kNashLocal,    kParetoLocal,   kSolutionsNashLocal, kNashGlobal,
      kParetoGlobal, kInversePareto, kMergedParetoNash};
  return order;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t remainder = (0 - n) % n;  // 2^64 mod n
    while (true) {
      std::uint64_t draw = engine_();
      if (remainder == 0 || draw < 0 - remainder) return draw % n;
    }
  }

  bool Bernoulli(const Rational& p) {
    auto num = static_cast<std::uint64_t>(boost::multiprecision::numerator(p));
    auto den = static_cast<std::uint64_t>(boost::multiprecision::denominator(p));
    return Below(den) < num;
  }

  const PrefValue& Pick(const std::vector<PrefValue>& pool) { return pool[Below(pool.size())]; }

 private:
  std::mt19937_64 engine_;
};

Semiring FamilySemiring(Family family) {
  switch (family) {
    case Family::kClassical: return Semiring::Classical();
    case Family::kFuzzy:
    case Family::kGameFuzzy: return Semiring::Fuzzy();
    case Family::kWeighted:
    case Family::kGameWeighted: return Semiring::Weighted();
  }
  return Semiring::Fuzzy();
}

std::vector<std::string> Labels(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(kValueLabels[i]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DrawEdges(Rng& rng, const GeneratorConfig& c) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < c.num_vars; ++i) {
    for (std::size_t j = i + 1; j < c.num_vars; ++j) {
      if (rng.Bernoulli(c.density)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

template <typename Render>
std::vector<std::string> RenderAll(const std::vector<JointAssignment>& items, Render render) {
  std::vector<std::string> out;
  for (const auto& s : items) out.push_back(render(s));
  return out;
}

template <typename Render>
PropertyResult Compare(std::string_view property, const std::vector<JointAssignment>& left,
                       const std::vector<JointAssignment>& right, bool equality,
                       Render render) {
  PropertyResult r{std::string(property), Outcome::kPass, RenderAll(left, render),
                   RenderAll(right, render), {}};
  auto missing = [](const std::vector<JointAssignment>& from,
                    const std::vector<JointAssignment>& in) -> std::optional<JointAssignment> {
    for (const auto& s : from) {
      if (!std::binary_search(in.begin(), in.end(), s)) return s;
    }
    return std::nullopt;
  };
  std::optional<JointAssignment> witness = missing(left, right);
  if (!witness && equality) witness = missing(right, left);
  if (witness) {
    r.outcome = Outcome::kFail;
    r.witness = render(*witness);
  }
  return r;
}

PropertyResult Skipped(std::string_view property) {
  return PropertyResult{std::string(property), Outcome::kSkip, {}, {}, {}};
}

std::vector<JointAssignment> Assignments(const std::vector<RankedSolution>& ranked) {
  std::vector<JointAssignment> out;
  for (const auto& r : ranked) out.push_back(r.assignment);
  return out;
}

void CheckGame(const GraphicalGame& game, std::vector<PropertyResult>& results) {
  auto render = [&](const JointAssignment& s) { return game.Render(s); };
  const std::vector<OrderPreservingMap> maps = DefaultMaps(game);
  const Scsp inverse = GameToScsp(game, maps);
  results.push_back(Compare(kInversePareto, Assignments(EnumerateOptimal(inverse)),
                            EnumeratePareto(game), true, render));

  const std::vector<JointAssignment> nash = EnumerateNash(game);
  const PrefValue zero = inverse.semiring().zero();
  bool all_nash_zero = !nash.empty();
  for (const auto& s : nash) all_nash_zero = all_nash_zero && inverse.Preference(s) == zero;
  if (all_nash_zero) {
    results.push_back(Skipped(kMergedParetoNash));
    return;
  }
  const Scsp merged = Merge(inverse, Harden(game));
  std::vector<JointAssignment> above_zero;
  for (const auto& r : EnumerateOptimal(merged)) {
    if (!(r.preference == zero)) above_zero.push_back(r.assignment);
  }
  results.push_back(
      Compare(kMergedParetoNash, above_zero, EnumerateParetoNash(game), true, render));
}

void CheckProblem(const Scsp& problem, std::vector<PropertyResult>& results) {
  const Semiring& semiring = problem.semiring();
  if (semiring.kind() == CarrierKind::kProduct || problem.variables().size() < 2) return;
  auto render = [&](const JointAssignment& s) { return problem.Render(s); };
  const std::vector<RankedSolution> ranked = EnumerateOptimal(problem);
  const std::vector<JointAssignment> optimal = Assignments(ranked);
  const GraphicalGame local = LocalMap(problem);

  if (semiring.kind() == CarrierKind::kWeighted) {
    // x is not strictly monotonic at infinity, the weighted zero.
    if (ranked.front().preference == semiring.zero()) {
      results.push_back(Skipped(kNashLocal));
      results.push_back(Skipped(kParetoLocal));
    } else {
      results.push_back(Compare(kNashLocal, optimal, EnumerateNash(local), false, render));
      results.push_back(Compare(kParetoLocal, optimal, EnumeratePareto(local), false, render));
    }
  }
  if (semiring.kind() == CarrierKind::kClassical) {
    if (IsConsistent(problem)) {
      std::vector<JointAssignment> solutions;
      for (const auto& r : ranked) {
        if (r.preference == semiring.one()) solutions.push_back(r.assignment);
      }
      results.push_back(
          Compare(kSolutionsNashLocal, solutions, EnumerateNash(local), false, render));
    } else {
      results.push_back(Skipped(kSolutionsNashLocal));
    }
  }
  const GraphicalGame global = GlobalMap(problem);
  results.push_back(Compare(kNashGlobal, optimal, EnumerateNash(global), false, render));
  results.push_back(Compare(kParetoGlobal, optimal, EnumeratePareto(global), true, render));
  CheckGame(local, results);
}

bool StillFails(const Scsp& problem, const std::string& property) {
  for (const auto& r : CheckInstance(problem)) {
    if (r.property == property && r.outcome == Outcome::kFail) return true;
  }
  return false;
}

// Greedy one-at-a-time constraint deletion preserving the failure.
Scsp Shrink(Scsp problem, const std::string& property) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < problem.constraints().size(); ++k) {
      std::vector<SoftConstraint> fewer = problem.constraints();
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      Scsp candidate(problem.semiring(), problem.variables(), std::move(fewer));
      if (StillFails(candidate, property)) {
        problem = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return problem;
}

struct InstanceOutcome {
  std::vector<PropertyResult> results;
  bool optimal_not_nash_local = false;
  std::vector<Failure> failures;
};

InstanceOutcome RunInstance(const GeneratorConfig& base, std::size_t index) {
  GeneratorConfig config = base;
  config.seed = base.seed + index;
  InstanceOutcome out;
  if (IsGameFamily(config.family)) {
    GraphicalGame game = GenerateGame(config);
    out.results = CheckInstance(game);
    for (const auto& r : out.results) {
      if (r.outcome == Outcome::kFail) {
        out.failures.push_back({index, config.seed, r, GameToJson(game)});
      }
    }
    return out;
  }
  Scsp problem = GenerateScsp(config);
  out.results = CheckInstance(problem);
  out.optimal_not_nash_local = OptimalNotNashLocal(problem).has_value();
  for (const auto& r : out.results) {
    if (r.outcome != Outcome::kFail) continue;
    Scsp small = Shrink(problem, r.property);
    PropertyResult shrunk = r;
    for (const auto& again : CheckInstance(small)) {
      if (again.property == r.property) shrunk = again;
    }
    out.failures.push_back({index, config.seed, shrunk, ScspToJson(small)});
  }
  return out;
}

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kSkip: return "skip";
  }
  return "?";
}

std::string JoinSet(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kClassical: return "classical";
    case Family::kFuzzy: return "fuzzy";
    case Family::kWeighted: return "weighted";
    case Family::kGameFuzzy: return "game-fuzzy";
    case Family::kGameWeighted: return "game-weighted";
  }
  return "?";
}

Family ParseFamily(std::string_view name) {
  for (Family f : {Family::kClassical, Family::kFuzzy, Family::kWeighted, Family::kGameFuzzy,
                   Family::kGameWeighted}) {
    if (FamilyName(f) == name) return f;
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown family '" + std::string(name) + "'");
}

bool IsGameFamily(Family family) {
  return family == Family::kGameFuzzy || family == Family::kGameWeighted;
}

void ValidateConfig(const GeneratorConfig& config) {
  if (config.num_vars < 2 || config.num_vars > 4) {
    throw Error(ErrorCode::kInvalidConfig, "num_vars must be in 2..4");
  }
  if (config.domain_size < 2 || config.domain_size > 3) {
    throw Error(ErrorCode::kInvalidConfig, "domain_size must be in 2..3");
  }
  if (config.density <= 0 || config.density > 1) {
    throw Error(ErrorCode::kInvalidConfig, "density must be in (0, 1]");
  }
  if (boost::multiprecision::denominator(config.density) >
      std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidConfig, "density denominator is too large");
  }
}

std::vector<PrefValue> ValuePool(Family family) {
  std::vector<PrefValue> pool;
  switch (FamilySemiring(family).kind()) {
    case CarrierKind::kClassical:
      pool = {PrefValue::Bool(false), PrefValue::Bool(true)};
      break;
    case CarrierKind::kFuzzy:
      for (int k = 0; k <= 10; ++k) pool.push_back(PrefValue::FuzzyLevel(Rational(k, 10)));
      break;
    default:
      for (int k = 0; k <= 10; ++k) pool.push_back(PrefValue::FiniteCost(k));
      pool.push_back(PrefValue::InfiniteCost());
      break;
  }
  return pool;
}

Scsp GenerateScsp(const GeneratorConfig& config) {
  ValidateConfig(config);
  if (IsGameFamily(config.family)) {
    throw Error(ErrorCode::kInvalidConfig, "game families generate games, not problems");
  }
  Rng rng(config.seed);
  const std::vector<PrefValue> pool = ValuePool(config.family);
  std::vector<Variable> variables;
  for (std::size_t i = 0; i < config.num_vars; ++i) {
    variables.push_back({std::string(kVariableNames[i]), Labels(config.domain_size)});
  }
  std::vector<SoftConstraint> constraints;
  const std::size_t d = config.domain_size;
  for (auto [i, j] : DrawEdges(rng, config)) {
    SoftConstraint c{{i, j}, {}};
    for (std::size_t k = 0; k < d * d; ++k) c.table.push_back(rng.Pick(pool));
    constraints.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < config.num_vars; ++i) {
    if (!rng.Bernoulli(Rational(1, 2))) continue;
    SoftConstraint c{{i}, {}};
    for (std::size_t k = 0; k < d; ++k) c.table.push_back(rng.Pick(pool));
    constraints.push_back(std::move(c));
  }
  if (config.family == Family::kClassical && !constraints.empty()) {
    const PrefValue& first = constraints.front().table.front();
    bool uniform = true;
    for (const auto& c : constraints) {
      for (const auto& v : c.table) uniform = uniform && v == first;
    }
    if (uniform) {
      auto& c = constraints[rng.Below(constraints.size())];
      auto& v = c.table[rng.Below(c.table.size())];
      v = PrefValue::Bool(!v.as<Truth>().value);
    }
  }
  return Scsp(FamilySemiring(config.family), std::move(variables), std::move(constraints));
}

GraphicalGame GenerateGame(const GeneratorConfig& config) {
  ValidateConfig(config);
  if (!IsGameFamily(config.family)) {
    throw Error(ErrorCode::kInvalidConfig, "problem families generate problems, not games");
  }
  Rng rng(config.seed);
  const std::vector<PrefValue> pool = ValuePool(config.family);
  std::vector<Player> players;
  for (std::size_t i = 0; i < config.num_vars; ++i) {
    players.push_back({std::string(kVariableNames[i]), Labels(config.domain_size)});
  }
  std::vector<std::vector<std::size_t>> neighbors(config.num_vars);
  for (auto [i, j] : DrawEdges(rng, config)) {
    neighbors[i].push_back(j);
    neighbors[j].push_back(i);
  }
  std::vector<std::vector<PrefValue>> tables(config.num_vars);
  for (std::size_t i = 0; i < config.num_vars; ++i) {
    std::sort(neighbors[i].begin(), neighbors[i].end());
    std::size_t rows = config.domain_size;
    for (std::size_t k = 0; k < neighbors[i].size(); ++k) rows *= config.domain_size;
    for (std::size_t k = 0; k < rows; ++k) tables[i].push_back(rng.Pick(pool));
  }
  return GraphicalGame(FamilySemiring(config.family), std::move(players), std::move(neighbors),
                       std::move(tables));
}

std::vector<PropertyResult> CheckInstance(const Document& instance) {
  std::vector<PropertyResult> results;
  if (const auto* game = std::get_if<GraphicalGame>(&instance)) {
    CheckGame(*game, results);
  } else {
    CheckProblem(std::get<Scsp>(instance), results);
  }
  return results;
}

std::optional<JointAssignment> OptimalNotNashLocal(const Scsp& problem) {
  const GraphicalGame local = LocalMap(problem);
  for (const auto& r : EnumerateOptimal(problem)) {
    if (!IsNash(local, r.assignment)) return r.assignment;
  }
  return std::nullopt;
}

const PropertyTally* VerificationReport::Tally(std::string_view property) const {
  for (const auto& t : tallies) {
    if (t.property == property) return &t;
  }
  return nullptr;
}

VerificationReport VerifyAll(const GeneratorConfig& config, std::size_t count,
                             std::size_t workers) {
  ValidateConfig(config);
  if (count == 0) throw Error(ErrorCode::kInvalidConfig, "count must be positive");
  workers = std::clamp<std::size_t>(workers, 1, count);

  std::vector<InstanceOutcome> outcomes(count);
  std::vector<std::string> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < count; k += workers) outcomes[k] = RunInstance(config, k);
        } catch (const std::exception& e) {
          errors[w] = e.what();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  VerificationReport report;
  report.config = config;
  report.count = count;
  for (auto property : PropertyOrder()) report.tallies.push_back({std::string(property)});
  for (auto& outcome : outcomes) {
    for (const auto& r : outcome.results) {
      for (auto& t : report.tallies) {
        if (t.property != r.property) continue;
        if (r.outcome == Outcome::kPass) ++t.passed;
        if (r.outcome == Outcome::kFail) ++t.failed;
        if (r.outcome == Outcome::kSkip) ++t.skipped;
      }
    }
    if (outcome.optimal_not_nash_local) ++report.optimal_not_nash_local;
    for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
  }
  std::erase_if(report.tallies, [](const PropertyTally& t) {
    return t.passed + t.failed + t.skipped == 0;
  });
  return report;
}

std::string FormatReport(const VerificationReport& report) {
  std::ostringstream out;
  const GeneratorConfig& c = report.config;
  out << "generator: " << kGeneratorAlgorithm << "\n";
  out << "family: " << FamilyName(c.family) << "  seed: " << c.seed
      << "  count: " << report.count << "  vars: " << c.num_vars
      << "  domain: " << c.domain_size << "  density: " << FormatRational(c.density) << "\n";
  for (const auto& t : report.tallies) {
    out << "property " << t.property << ": passed " << t.passed << ", failed " << t.failed
        << ", skipped " << t.skipped << "\n";
  }
  if (!IsGameFamily(c.family)) {
    out << "instances with an optimal solution that is not nash in L(P): "
        << report.optimal_not_nash_local << "\n";
  }
  out << "failures: " << report.failures.size() << "\n";
  for (const auto& f : report.failures) {
    out << "failure: instance " << f.index << " (seed " << f.seed << ") " << f.result.property
        << " witness " << f.result.witness << "\n";
    out << "  left: " << JoinSet(f.result.left) << "\n";
    out << "  right: " << JoinSet(f.result.right) << "\n";
    out << "  instance: " << f.instance.dump() << "\n";
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json ReportToJson(const VerificationReport& report) {
  const GeneratorConfig& c = report.config;
  Json out;
  out["generator"] = std::string(kGeneratorAlgorithm);
  out["config"] = Json{{"family", std::string(FamilyName(c.family))},
                       {"seed", c.seed},
                       {"count", report.count},
                       {"vars", c.num_vars},
                       {"domain", c.domain_size},
                       {"density", FormatRational(c.density)}};
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    tallies.push_back(Json{{"property", t.property},
                           {"passed", t.passed},
                           {"failed", t.failed},
                           {"skipped", t.skipped}});
  }
  out["properties"] = tallies;
  if (!IsGameFamily(c.family)) out["optimal_not_nash_local"] = report.optimal_not_nash_local;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"index", f.index},
                            {"seed", f.seed},
                            {"property", f.result.property},
                            {"outcome", std::string(OutcomeName(f.result.outcome))},
                            {"witness", f.result.witness},
                            {"left", f.result.left},
                            {"right", f.result.right},
                            {"instance", f.instance}});
  }
  out["failures"] = failures;
  out["ok"] = report.ok();
  return out;
}

}  // namespace softgame
