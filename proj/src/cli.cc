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

#include "softgame/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "softgame/error.h"
#include "softgame/harness.h"
#include "softgame/io.h"
#include "softgame/mappings.h"

namespace softgame {
namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string mapping;
  std::string output;
  std::string f_rule;
  std::string ceiling;
  bool json = false;

  std::string family = "fuzzy";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t vars = 3;
  std::size_t domain = 2;
  std::string density = "1/2";
  std::size_t jobs = 1;
  std::string replay;

  std::string kind;
  std::vector<std::string> sample;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void WriteOutput(const Options& opts, const std::string& text, std::ostream& out) {
  if (opts.output.empty() || opts.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(opts.output);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write '" + opts.output + "'");
  file << text;
}

Json NamedAssignment(const std::vector<std::string>& names,
                     const std::vector<std::vector<std::string>>& labels,
                     const JointAssignment& s) {
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = labels[i][s.values[i]];
  return out;
}

std::string RenderVector(const PayoffVector& v) {
  return ToString(PrefValue::MakeTuple(v));
}

int Solve(const Options& opts, std::istream& in, std::ostream& out) {
  Scsp problem = ParseScsp(ReadInput(opts.inputs.at(0), in));
  std::vector<RankedSolution> optimal = EnumerateOptimal(problem);
  if (opts.json) {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> labels;
    for (const auto& v : problem.variables()) {
      names.push_back(v.name);
      labels.push_back(v.domain);
    }
    Json rows = Json::array();
    for (const auto& r : optimal) {
      rows.push_back(Json{{"assignment", NamedAssignment(names, labels, r.assignment)},
                          {"preference", ToString(r.preference)}});
    }
    out << Dump(rows);
    return kExitOk;
  }
  for (const auto& r : optimal) {
    out << problem.Render(r.assignment) << " : " << ToString(r.preference) << "\n";
  }
  return kExitOk;
}

int GameQuery(const std::string& verb, const Options& opts, std::istream& in,
              std::ostream& out) {
  GraphicalGame game = ParseGame(ReadInput(opts.inputs.at(0), in));
  std::vector<JointAssignment> result;
  if (verb == "nash") result = EnumerateNash(game);
  if (verb == "pareto") result = EnumeratePareto(game);
  if (verb == "pareto-nash") result = EnumerateParetoNash(game);
  if (verb == "nash-pareto-intersect") result = EnumerateNashAndGlobalPareto(game);
  if (opts.json) {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> labels;
    for (const auto& p : game.players()) {
      names.push_back(p.name);
      labels.push_back(p.strategies);
    }
    Json rows = Json::array();
    for (const auto& s : result) {
      Json payoffs = Json::array();
      for (const auto& v : game.Payoffs(s)) payoffs.push_back(ToString(v));
      rows.push_back(Json{{"assignment", NamedAssignment(names, labels, s)},
                          {"payoffs", payoffs}});
    }
    out << Dump(rows);
    return kExitOk;
  }
  for (const auto& s : result) {
    out << game.Render(s) << " : " << RenderVector(game.Payoffs(s)) << "\n";
  }
  return kExitOk;
}

int Map(const Options& opts, std::istream& in, std::ostream& out) {
  const std::string& name = opts.mapping;
  if (name == "merge") {
    Scsp soft = ParseScsp(ReadInput(opts.inputs.at(0), in));
    Scsp hard = ParseScsp(ReadInput(opts.inputs.at(1), in));
    WriteOutput(opts, Dump(ScspToJson(Merge(soft, hard))), out);
    return kExitOk;
  }
  if (name == "local" || name == "global") {
    Scsp problem = ParseScsp(ReadInput(opts.inputs.at(0), in));
    GraphicalGame game = name == "local" ? LocalMap(problem) : GlobalMap(problem);
    WriteOutput(opts, Dump(GameToJson(game)), out);
    return kExitOk;
  }
  GraphicalGame game = ParseGame(ReadInput(opts.inputs.at(0), in));
  if (name == "harden") {
    WriteOutput(opts, Dump(ScspToJson(Harden(game))), out);
    return kExitOk;
  }
  std::vector<OrderPreservingMap> maps;
  if (opts.f_rule.empty()) {
    maps = DefaultMaps(game);
  } else {
    std::optional<Rational> ceiling;
    if (!opts.ceiling.empty()) ceiling = ParseRational(opts.ceiling);
    auto rule = opts.f_rule == "identity" ? OrderPreservingMap::Rule::kIdentity
                                          : OrderPreservingMap::Rule::kComplement;
    maps = UniformMaps(game, rule, ceiling);
  }
  WriteOutput(opts, Dump(ScspToJson(GameToScsp(game, maps))), out);
  return kExitOk;
}

int Verify(const Options& opts, std::istream& in, std::ostream& out) {
  if (!opts.replay.empty()) {
    Document instance = ParseDocument(ReadInput(opts.replay, in));
    bool failed = false;
    Json rows = Json::array();
    for (const auto& r : CheckInstance(instance)) {
      std::string outcome = r.outcome == Outcome::kPass   ? "pass"
                            : r.outcome == Outcome::kFail ? "fail"
                                                          : "skip";
      failed = failed || r.outcome == Outcome::kFail;
      if (opts.json) {
        rows.push_back(Json{{"property", r.property}, {"outcome", outcome},
                            {"witness", r.witness}, {"left", r.left}, {"right", r.right}});
      } else {
        out << "property " << r.property << ": " << outcome;
        if (!r.witness.empty()) out << " witness " << r.witness;
        out << "\n";
      }
    }
    if (opts.json) out << Dump(rows);
    return failed ? kExitDomainError : kExitOk;
  }
  GeneratorConfig config;
  config.family = ParseFamily(opts.family);
  config.seed = opts.seed;
  config.num_vars = opts.vars;
  config.domain_size = opts.domain;
  try {
    config.density = ParseRational(opts.density);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  VerificationReport report = VerifyAll(config, opts.count, opts.jobs);
  out << (opts.json ? Dump(ReportToJson(report)) : FormatReport(report));
  return report.ok() ? kExitOk : kExitDomainError;
}

Semiring KindFromText(const std::string& text) {
  Json j;
  if (text.rfind("product(", 0) == 0 && text.back() == ')') {
    Json parts = Json::array();
    std::stringstream body(text.substr(8, text.size() - 9));
    for (std::string part; std::getline(body, part, ',');) {
      part.erase(0, part.find_first_not_of(' '));
      part.erase(part.find_last_not_of(' ') + 1);
      parts.push_back(part);
    }
    j["kind"] = Json{{"product", parts}};
  } else {
    j["kind"] = text;
  }
  return SemiringFromJson(j);
}

int CheckSemiring(const Options& opts, std::ostream& out) {
  Semiring semiring = KindFromText(opts.kind);
  std::vector<PrefValue> sample;
  for (const auto& text : opts.sample) sample.push_back(semiring.Parse(text));
  std::vector<AxiomViolation> violations = CheckAxioms(semiring, sample);
  std::optional<MonotonicityVerdict> verdict;
  std::string monotonic_error;
  try {
    verdict = IsStrictlyMonotonic(semiring, sample);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotLinearlyOrdered) throw;
    monotonic_error = std::string(e.name());
  }
  auto witness_text = [](const std::vector<PrefValue>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + ToString(w[i]);
    return s;
  };

  if (opts.json) {
    Json j;
    j["semiring"] = semiring.name();
    Json v = Json::array();
    for (const auto& a : violations) {
      Json w = Json::array();
      for (const auto& x : a.witness) w.push_back(ToString(x));
      v.push_back(Json{{"axiom", a.axiom}, {"witness", w}});
    }
    j["violations"] = v;
    if (verdict) {
      j["strictly_monotonic"] = verdict->strictly_monotonic;
      if (verdict->counterexample) {
        const auto& [a, b, c] = *verdict->counterexample;
        j["counterexample"] = Json{{"a", ToString(a)}, {"b", ToString(b)}, {"c", ToString(c)}};
      }
    } else {
      j["strictly_monotonic"] = monotonic_error;
    }
    out << Dump(j);
  } else {
    out << "semiring: " << semiring.name() << "\n";
    if (violations.empty()) out << "axioms: ok\n";
    for (const auto& a : violations) {
      out << "axiom violated: " << a.axiom << " witness " << witness_text(a.witness) << "\n";
    }
    if (!verdict) {
      out << "strictly monotonic: " << monotonic_error << "\n";
    } else if (verdict->strictly_monotonic) {
      out << "strictly monotonic: true\n";
    } else {
      const auto& [a, b, c] = *verdict->counterexample;
      out << "strictly monotonic: false (a=" << ToString(a) << ", b=" << ToString(b)
          << ", c=" << ToString(c) << ")\n";
    }
  }
  return violations.empty() ? kExitOk : kExitDomainError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Soft constraint problems, graphical games and the mappings between them",
               "softgame"};
  app.require_subcommand(1);
  Options opts;

  auto* solve = app.add_subcommand("solve", "Print the optimal solutions of a problem");
  solve->add_option("file", opts.inputs, "Problem file, or - for stdin")->required()->expected(1);
  solve->add_flag("--json", opts.json, "Emit JSON");

  const std::pair<const char*, const char*> verbs[] = {
      {"nash", "Print the pure Nash equilibria of a game"},
      {"pareto", "Print the Pareto efficient joint strategies of a game"},
      {"pareto-nash", "Print the Nash equilibria not dominated by another equilibrium"},
      {"nash-pareto-intersect", "Print the Nash equilibria that are Pareto efficient"},
  };
  for (const auto& [verb, description] : verbs) {
    auto* sub = app.add_subcommand(verb, description);
    sub->add_option("file", opts.inputs, "Game file, or - for stdin")->required()->expected(1);
    sub->add_flag("--json", opts.json, "Emit JSON");
  }

  auto* map = app.add_subcommand("map", "Transform a problem or game");
  map->add_option("mapping", opts.mapping, "local, global, inverse, harden or merge")
      ->required()
      ->check(CLI::IsMember({"local", "global", "inverse", "harden", "merge"}));
  map->add_option("files", opts.inputs, "Input file(s); merge takes soft then hard")
      ->required()
      ->expected(1, 2);
  map->add_option("--f", opts.f_rule, "Order preserving map for inverse")
      ->check(CLI::IsMember({"identity", "complement"}));
  map->add_option("--ceiling", opts.ceiling, "Complement ceiling M (rational)");
  map->add_option("-o,--output", opts.output, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the mapping theorems on random instances");
  verify->add_option("--family", opts.family,
                     "classical, fuzzy, weighted, game-fuzzy or game-weighted");
  verify->add_option("--seed", opts.seed, "First instance seed");
  verify->add_option("--count", opts.count, "Number of instances");
  verify->add_option("--vars", opts.vars, "Variables or players (2..4)");
  verify->add_option("--domain", opts.domain, "Domain size (2..3)");
  verify->add_option("--density", opts.density, "Probability a pair is linked");
  verify->add_option("--jobs", opts.jobs, "Worker threads");
  verify->add_option("--replay", opts.replay, "Check a single serialized instance");
  verify->add_flag("--json", opts.json, "Emit JSON");

  auto* check = app.add_subcommand("check-semiring", "Check axioms and strict monotonicity");
  check->add_option("kind", opts.kind, "classical, fuzzy, weighted or product(k1,k2,...)")
      ->required();
  check->add_option("--sample", opts.sample, "Sample value (repeatable)");
  check->add_flag("--json", opts.json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  // Verb-flag compatibility, before touching any input.
  if (map->parsed()) {
    const bool two_inputs = opts.mapping == "merge";
    if (opts.inputs.size() != (two_inputs ? 2u : 1u)) {
      err << "error: map " << opts.mapping << " takes " << (two_inputs ? "two inputs" : "one input")
          << "\n";
      return kExitParseError;
    }
    if ((!opts.f_rule.empty() || !opts.ceiling.empty()) && opts.mapping != "inverse") {
      err << "error: --f and --ceiling only apply to map inverse\n";
      return kExitParseError;
    }
    if (!opts.ceiling.empty() && opts.f_rule != "complement") {
      err << "error: --ceiling requires --f complement\n";
      return kExitParseError;
    }
  }

  try {
    if (solve->parsed()) return Solve(opts, in, out);
    if (map->parsed()) return Map(opts, in, out);
    if (verify->parsed()) return Verify(opts, in, out);
    if (check->parsed()) return CheckSemiring(opts, out);
    for (const auto* sub : app.get_subcommands()) return GameQuery(sub->get_name(), opts, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? kExitParseError : kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace softgame
