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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Goldens are timed individually; the property sweep is timed as a
// whole; determinism runs the real executable twice and compares bytes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "softgame/game.h"
#include "softgame/harness.h"
#include "softgame/io.h"
#include "softgame/mappings.h"
#include "softgame/scsp.h"
#include "softgame/semiring.h"

namespace softgame {
namespace {

using Clock = std::chrono::steady_clock;
using Strings = std::vector<std::string>;

// Pinned limits.
constexpr double kGoldenLimitSeconds = 1.0;
constexpr double kSweepLimitSeconds = 60.0;
constexpr std::size_t kInstancesPerFamily = 1000;

class Ledger {
 public:
  void Record(const std::string& id, bool pass, const std::string& text) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << " " << text << std::endl;
    ++total_;
    if (!pass) failed_.push_back(id);
  }
  int Finish() const {
    std::cout << "\n" << (total_ - failed_.size()) << "/" << total_ << " criteria passed";
    if (!failed_.empty()) {
      std::cout << "; failed:";
      for (const auto& id : failed_) std::cout << " " << id;
    }
    std::cout << std::endl;
    return failed_.empty() ? 0 : 1;
  }

 private:
  std::size_t total_ = 0;
  Strings failed_;
};

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Ms(double seconds) { return std::to_string(static_cast<long>(seconds * 1000)) + " ms"; }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string Data(const std::string& name) { return std::string(SOFTGAME_DATA_DIR) + "/" + name; }
Scsp LoadScsp(const std::string& name) { return ParseScsp(ReadFile(Data(name))); }
GraphicalGame LoadGame(const std::string& name) { return ParseGame(ReadFile(Data(name))); }

template <typename Labeled>
Strings Rendered(const Labeled& owner, const std::vector<JointAssignment>& xs) {
  Strings out;
  for (const auto& s : xs) out.push_back(owner.Render(s));
  return out;
}

Strings OptimalLabels(const Scsp& p) {
  Strings out;
  for (const auto& r : EnumerateOptimal(p)) out.push_back(p.Render(r.assignment));
  return out;
}

Strings Solved(const Scsp& p) {
  Strings out;
  for (const auto& r : EnumerateOptimal(p)) {
    out.push_back(p.Render(r.assignment) + " : " + ToString(r.preference));
  }
  return out;
}

PrefValue ConstraintValue(const Scsp& p, std::size_t k, const JointAssignment& s) {
  const SoftConstraint& c = p.constraints()[k];
  return c.table[TableIndex(s, c.scope, p.domain_sizes())];
}

std::string Join(const Strings& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

bool Contains(const Strings& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Passes only if the body holds and finishes within the golden limit.
void Golden(Ledger& ledger, const std::string& id, const std::string& name,
            const std::function<std::string(bool&)>& body) {
  Clock::time_point start = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("threw ") + e.what();
  }
  double seconds = SecondsSince(start);
  ok = ok && seconds < kGoldenLimitSeconds;
  ledger.Record(id, ok, name + ": " + detail + " (" + Ms(seconds) + ")");
}

void Goldens(Ledger& ledger) {
  Golden(ledger, "1.1", "fuzzy example", [](bool& ok) {
    Scsp p = LoadScsp("fuzzy_basic.json");
    GraphicalGame g = LocalMap(p);
    Strings opt = Solved(p);
    Strings nash = Rendered(g, EnumerateNash(g));
    ok = opt == Strings{"bbb : 0.5"} && nash == Strings{"aaa", "bbb"};
    return "optimal " + Join(opt) + ", Nash(L) " + Join(nash);
  });
  Golden(ledger, "1.2", "fuzzy example with four optima", [](bool& ok) {
    Scsp p = LoadScsp("fuzzy_four_optima.json");
    GraphicalGame g = LocalMap(p);
    Strings opt = OptimalLabels(p);
    Strings nash = Rendered(g, EnumerateNash(g));
    ok = opt == Strings{"aab", "abb", "bab", "bbb"} && nash == Strings{"aab", "bbb"};
    return "optimal " + Join(opt) + ", Nash(L) " + Join(nash);
  });
  Golden(ledger, "1.3", "weighted single-constraint example", [](bool& ok) {
    Scsp p = LoadScsp("weighted_single.json");
    GraphicalGame g = LocalMap(p);
    Strings opt = OptimalLabels(p);
    Strings nash = Rendered(g, EnumerateNash(g));
    OrderPreservingMap display =
        OrderPreservingMap::Complement(Semiring::Weighted(), Rational(10));
    Strings shown;
    for (const char* s : {"aa", "ab", "ba", "bb"}) {
      PayoffVector payoffs = g.Payoffs(g.Assign(s));
      PrefValue x = display.Apply(payoffs[0]);
      ok = ok && display.Apply(payoffs[1]) == x;
      shown.push_back(std::string(s) + "=" + ToString(x));
    }
    ok = ok && opt == Strings{"bb"} && nash == Strings{"aa", "bb"} &&
         shown == Strings{"aa=7", "ab=0", "ba=0", "bb=9"};
    return "optimal " + Join(opt) + ", Nash(L) " + Join(nash) + ", payoffs complemented at 10 " +
           Join(shown);
  });
  Golden(ledger, "1.4", "classical CSPs", [](bool& ok) {
    Scsp first = LoadScsp("csp_inconsistent.json");
    GraphicalGame g1 = LocalMap(first);
    Strings opt1 = Solved(first);
    bool baa_optimal = Contains(opt1, "baa : false");
    bool baa_nash = IsNash(g1, g1.Assign("baa"));
    Scsp second = LoadScsp("csp_consistent.json");
    GraphicalGame g2 = LocalMap(second);
    Strings nash2 = Rendered(g2, EnumerateNash(g2));
    Strings opt2 = OptimalLabels(second);
    bool c1 = IsConsistent(first);
    bool c2 = IsConsistent(second);
    ok = !c1 && baa_optimal && !baa_nash && c2 && Contains(nash2, "aaa") &&
         Contains(nash2, "bbb") && !Contains(opt2, "bbb");
    return std::string("first consistent=") + (c1 ? "yes" : "no") +
           ", baa optimal at false=" + (baa_optimal ? "yes" : "no") +
           ", baa in Nash(L)=" + (baa_nash ? "yes" : "no") + "; second consistent=" +
           (c2 ? "yes" : "no") + ", optimal " + Join(opt2) + ", Nash(L) " + Join(nash2);
  });
  Golden(ledger, "1.5", "weighted example with unary constraints", [](bool& ok) {
    Scsp p = LoadScsp("weighted_pareto.json");
    GraphicalGame g = LocalMap(p);
    Strings pareto = Rendered(g, EnumeratePareto(g));
    Strings opt = OptimalLabels(p);
    ok = pareto == Strings{"aa", "bb"} && opt == Strings{"aa"};
    return "Pareto(L) " + Join(pareto) + ", optimal " + Join(opt);
  });
  Golden(ledger, "1.6", "prisoner's dilemma", [](bool& ok) {
    GraphicalGame g = LoadGame("prisoners_dilemma.json");
    Strings nash = Rendered(g, EnumerateNash(g));
    Strings pareto = Rendered(g, EnumeratePareto(g));
    Strings both = Rendered(g, EnumerateNashAndGlobalPareto(g));
    Strings pne = Rendered(g, EnumerateParetoNash(g));
    std::vector<OrderPreservingMap> maps =
        UniformMaps(g, OrderPreservingMap::Rule::kComplement, Rational(10));
    Scsp inverse = GameToScsp(g, maps);
    Strings c1;
    Strings c2;
    for (const char* s : {"cc", "cn", "nc", "nn"}) {
      c1.push_back(ToString(ConstraintValue(inverse, 0, inverse.Assign(s))));
      c2.push_back(ToString(ConstraintValue(inverse, 1, inverse.Assign(s))));
    }
    Strings inverse_opt = Solved(inverse);
    Strings merged_opt = Solved(Merge(inverse, Harden(g)));
    ok = nash == Strings{"nn"} && pareto == Strings{"cc", "cn", "nc"} && both.empty() &&
         pne == Strings{"nn"} && c1 == Strings{"[7, 0]", "[10, 0]", "[6, 0]", "[9, 0]"} &&
         c2 == Strings{"[0, 7]", "[0, 6]", "[0, 10]", "[0, 9]"} &&
         inverse_opt == Strings{"cc : [7, 7]", "cn : [10, 6]", "nc : [6, 10]"} &&
         merged_opt == Strings{"nn : [9, 9]"};
    return "Nash " + Join(nash) + ", Pareto " + Join(pareto) + ", Nash and Pareto " + Join(both) +
           ", Pareto-efficient Nash " + Join(pne) + ", c1 " + Join(c1) + ", c2 " + Join(c2) +
           ", optimal(L') " + Join(inverse_opt) + ", optimal(merged) " + Join(merged_opt);
  });
}

struct Shape {
  std::size_t vars;
  std::size_t domain;
  std::size_t count;
};

// Six shapes summing to kInstancesPerFamily instances per family.
std::vector<Shape> SweepShapes() {
  std::vector<Shape> shapes;
  std::size_t index = 0;
  for (std::size_t vars = 2; vars <= 4; ++vars) {
    for (std::size_t domain = 2; domain <= 3; ++domain, ++index) {
      std::size_t count = kInstancesPerFamily / 6 + (index < kInstancesPerFamily % 6 ? 1 : 0);
      shapes.push_back({vars, domain, count});
    }
  }
  return shapes;
}

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string first_failure;
};

void PropertySweep(Ledger& ledger) {
  const std::vector<Family> families = {Family::kClassical, Family::kFuzzy, Family::kWeighted,
                                        Family::kGameFuzzy, Family::kGameWeighted};
  // property -> family -> tally
  std::map<std::string, std::map<std::string, Tally>> tallies;
  std::size_t fuzzy_strictness = 0;
  std::size_t instances = 0;
  Clock::time_point start = Clock::now();
  for (Family family : families) {
    std::string fname(FamilyName(family));
    std::uint64_t seed = 1;
    for (const Shape& shape : SweepShapes()) {
      GeneratorConfig config;
      config.seed = seed++;
      config.family = family;
      config.num_vars = shape.vars;
      config.domain_size = shape.domain;
      VerificationReport report = VerifyAll(config, shape.count);
      instances += shape.count;
      if (family == Family::kFuzzy) fuzzy_strictness += report.optimal_not_nash_local;
      for (const PropertyTally& t : report.tallies) {
        Tally& agg = tallies[t.property][fname];
        agg.passed += t.passed;
        agg.failed += t.failed;
        agg.skipped += t.skipped;
      }
      for (const Failure& f : report.failures) {
        Tally& agg = tallies[f.result.property][fname];
        if (!agg.first_failure.empty()) continue;
        agg.first_failure = "vars=" + std::to_string(shape.vars) +
                            " domain=" + std::to_string(shape.domain) +
                            " seed=" + std::to_string(config.seed) +
                            " index=" + std::to_string(f.index) + " witness " + f.result.witness;
      }
    }
  }
  double seconds = SecondsSince(start);

  const std::vector<std::pair<std::string_view, std::string>> lines = {
      {kNashLocal, "optimal solutions are Nash equilibria of L(P)"},
      {kParetoLocal, "optimal solutions are Pareto optimal in L(P)"},
      {kSolutionsNashLocal, "solutions of consistent classical CSPs are Nash equilibria of L(P)"},
      {kNashGlobal, "optimal solutions are Nash equilibria of GL(P)"},
      {kParetoGlobal, "optimal solutions equal the Pareto optima of GL(P)"},
      {kInversePareto, "optimal solutions of L'(G) equal the Pareto optima of G"},
      {kMergedParetoNash, "optimal solutions of the merged problem equal the Pareto-efficient Nash"},
  };
  int sub = 1;
  for (const auto& [property, description] : lines) {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string detail;
    std::string witness;
    for (const auto& [fname, t] : tallies[std::string(property)]) {
      if (t.passed + t.failed == 0) continue;
      passed += t.passed;
      failed += t.failed;
      detail += (detail.empty() ? "" : ", ") + fname + " " + std::to_string(t.passed) + "/" +
                std::to_string(t.failed) + "/" + std::to_string(t.skipped);
      if (witness.empty() && !t.first_failure.empty()) witness = fname + " " + t.first_failure;
    }
    std::string text = std::string(property) + ": " + description +
                       " (pass/fail/skip by family: " + detail + ")";
    if (!witness.empty()) text += "; first failure: " + witness;
    ledger.Record("2." + std::to_string(sub++), failed == 0 && passed > 0, text);
  }
  ledger.Record("2." + std::to_string(sub++), fuzzy_strictness >= 1,
                "fuzzy instances with an optimal solution outside Nash(L): " +
                    std::to_string(fuzzy_strictness) + " (need at least 1)");
  std::ostringstream limit;
  limit << kSweepLimitSeconds;
  ledger.Record("2." + std::to_string(sub++), seconds < kSweepLimitSeconds,
                "property sweep runtime: " + std::to_string(instances) + " instances in " +
                    Ms(seconds) + " (limit " + limit.str() + " s)");
}

std::vector<PrefValue> Values(const Semiring& semiring, const Strings& texts) {
  std::vector<PrefValue> out;
  for (const auto& t : texts) out.push_back(semiring.Parse(t));
  return out;
}

std::string Triple(const MonotonicityVerdict& v) {
  if (!v.counterexample) return "none";
  const auto& c = *v.counterexample;
  return "a=" + ToString(c[0]) + ", b=" + ToString(c[1]) + ", c=" + ToString(c[2]);
}

void SemiringChecks(Ledger& ledger) {
  const std::vector<Semiring> semirings = {
      Semiring::Classical(), Semiring::Fuzzy(), Semiring::Weighted(),
      Semiring::Product({Semiring::Fuzzy(), Semiring::Weighted()})};
  int sub = 1;
  for (const Semiring& s : semirings) {
    std::vector<PrefValue> sample = CanonicalSample(s);
    std::vector<AxiomViolation> found = CheckAxioms(s, sample);
    std::string text = "c-semiring axioms hold for " + s.name() + " on " +
                       std::to_string(sample.size()) + " sample values";
    if (!found.empty()) text += "; violated: " + found.front().axiom;
    ledger.Record("3." + std::to_string(sub++), found.empty(), text);
  }

  Semiring weighted = Semiring::Weighted();
  MonotonicityVerdict w = IsStrictlyMonotonic(weighted, Values(weighted, {"1", "3", "10"}));
  MonotonicityVerdict wc = IsStrictlyMonotonic(weighted, {});
  ledger.Record("3." + std::to_string(sub++), w.strictly_monotonic && wc.strictly_monotonic,
                std::string("weighted is strictly monotonic on {1, 3, 10} and its canonical "
                            "finite sample: ") +
                    (w.strictly_monotonic && wc.strictly_monotonic ? "true" : "false"));

  Semiring fuzzy = Semiring::Fuzzy();
  MonotonicityVerdict f = IsStrictlyMonotonic(fuzzy, Values(fuzzy, {"0.2", "0.5", "0.8"}));
  bool f_ok = !f.strictly_monotonic && f.counterexample &&
              (*f.counterexample)[0] == fuzzy.Parse("0.5") &&
              (*f.counterexample)[1] == fuzzy.Parse("0.8") &&
              (*f.counterexample)[2] == fuzzy.Parse("0.2");
  ledger.Record("3." + std::to_string(sub++), f_ok,
                "fuzzy is not strictly monotonic on {0.2, 0.5, 0.8}: counterexample " + Triple(f));

  Semiring classical = Semiring::Classical();
  MonotonicityVerdict c = IsStrictlyMonotonic(classical, {});
  bool c_ok = !c.strictly_monotonic && c.counterexample &&
              (*c.counterexample)[2] == classical.zero();
  ledger.Record("3." + std::to_string(sub++), c_ok,
                "classical is not strictly monotonic: counterexample " + Triple(c));
}

struct Run {
  int status = -1;
  std::string out;
  bool operator==(const Run&) const = default;
};

Run Shell(const std::string& command) {
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, n);
  int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

std::string Quote(const std::string& s) { return "'" + s + "'"; }

void Determinism(Ledger& ledger, const std::filesystem::path& scratch) {
  const std::string cli = Quote(SOFTGAME_CLI_PATH);
  auto data = [](const char* name) { return Quote(Data(name)); };
  const std::string pd = data("prisoners_dilemma.json");
  const std::string inv = Quote((scratch / "inverse.json").string());
  const std::string hard = Quote((scratch / "hard.json").string());

  Strings commands;
  for (const char* f : {"fuzzy_basic.json", "fuzzy_four_optima.json", "weighted_single.json",
                        "weighted_pareto.json", "csp_inconsistent.json", "csp_consistent.json"}) {
    commands.push_back(cli + " solve " + data(f));
    commands.push_back(cli + " solve --json " + data(f));
    for (const char* m : {"local", "global"}) {
      commands.push_back(cli + " map " + m + " " + data(f));
      commands.push_back(cli + " map " + m + " " + data(f) + " | " + cli + " nash -");
      commands.push_back(cli + " map " + m + " " + data(f) + " | " + cli + " pareto --json -");
    }
  }
  for (const char* verb : {"nash", "pareto", "pareto-nash", "nash-pareto-intersect"}) {
    commands.push_back(cli + " " + verb + " " + pd);
    commands.push_back(cli + " " + verb + " --json " + pd);
  }
  commands.push_back(cli + " map inverse " + pd);
  commands.push_back(cli + " map inverse --f complement --ceiling 10 " + pd + " | " + cli +
                     " solve -");
  commands.push_back(cli + " map harden " + pd);
  commands.push_back(cli + " map inverse --f complement --ceiling 10 " + pd + " -o " + inv +
                     " && " + cli + " map harden " + pd + " -o " + hard + " && " + cli +
                     " map merge " + inv + " " + hard + " && cat " + inv + " " + hard);
  for (const char* kind : {"classical", "fuzzy", "weighted", "product(fuzzy,weighted)"}) {
    commands.push_back(cli + " check-semiring " + Quote(kind));
    commands.push_back(cli + " check-semiring --json " + Quote(kind));
  }
  for (const char* family : {"classical", "fuzzy", "weighted", "game-fuzzy", "game-weighted"}) {
    commands.push_back(cli + " verify --family " + family + " --seed 5 --count 40");
  }

  std::size_t differing = 0;
  std::size_t crashed = 0;  // signalled, or rejected as a usage error
  std::string first;
  for (const std::string& command : commands) {
    Run a = Shell(command);
    Run b = Shell(command);
    if (a.status < 0 || a.status == 2) ++crashed;
    if (!(a == b)) {
      ++differing;
      if (first.empty()) first = command;
    }
  }
  std::string text = "CLI output is byte-identical across reruns: " +
                     std::to_string(commands.size() - differing) + "/" +
                     std::to_string(commands.size()) + " commands, " + std::to_string(crashed) +
                     " exiting abnormally";
  if (!first.empty()) text += "; first differing: " + first;
  ledger.Record("4.1", differing == 0 && crashed == 0, text);

  std::size_t checked = 0;
  differing = 0;
  first.clear();
  for (const char* family : {"classical", "fuzzy", "weighted", "game-fuzzy", "game-weighted"}) {
    for (const char* format : {"", " --json"}) {
      std::string base = cli + " verify --family " + family +
                         " --seed 11 --count 150 --vars 3 --domain 3" + format + " --jobs ";
      Run reference = Shell(base + "1");
      for (const char* jobs : {"2", "4", "8"}) {
        ++checked;
        if (!(Shell(base + jobs) == reference) || reference.out.empty()) {
          ++differing;
          if (first.empty()) first = base + jobs;
        }
      }
    }
  }
  text = "verify reports are byte-identical for --jobs 2/4/8 against --jobs 1: " +
         std::to_string(checked - differing) + "/" + std::to_string(checked);
  if (!first.empty()) text += "; first differing: " + first;
  ledger.Record("4.2", differing == 0, text);

  checked = 0;
  differing = 0;
  for (Family family : {Family::kFuzzy, Family::kWeighted, Family::kGameWeighted}) {
    GeneratorConfig config;
    config.seed = 23;
    config.family = family;
    config.num_vars = 4;
    config.domain_size = 2;
    auto render = [](const VerificationReport& r) {
      return FormatReport(r) + Dump(ReportToJson(r));
    };
    std::string reference = render(VerifyAll(config, 200, 1));
    for (std::size_t workers : {2, 3, 8}) {
      ++checked;
      if (render(VerifyAll(config, 200, workers)) != reference) ++differing;
    }
  }
  ledger.Record("4.3", differing == 0,
                "in-process verification reports are identical across 2/3/8 workers: " +
                    std::to_string(checked - differing) + "/" + std::to_string(checked));
}

}  // namespace
}  // namespace softgame

int main() {
  using namespace softgame;
  Ledger ledger;
  std::filesystem::path scratch =
      std::filesystem::temp_directory_path() / ("softgame_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(scratch);
  Goldens(ledger);
  PropertySweep(ledger);
  SemiringChecks(ledger);
  Determinism(ledger, scratch);
  std::filesystem::remove_all(scratch);
  return ledger.Finish();
}
