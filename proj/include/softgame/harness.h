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

#ifndef SOFTGAME_HARNESS_H_
#define SOFTGAME_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softgame/io.h"

namespace softgame {

enum class Family { kClassical, kFuzzy, kWeighted, kGameFuzzy, kGameWeighted };

std::string_view FamilyName(Family family);
// Throws kInvalidConfig for unknown names.
Family ParseFamily(std::string_view name);
bool IsGameFamily(Family family);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  Family family = Family::kFuzzy;
  std::size_t num_vars = 3;     // 2..4
  std::size_t domain_size = 2;  // 2..3
  Rational density = Rational(1, 2);  // (0, 1]
};

// Throws kInvalidConfig.
void ValidateConfig(const GeneratorConfig& config);

// Fuzzy: tenths 0..1. Weighted: 0..10 and inf, uniformly (inf w.p. 1/12).
// Classical: false, true.
std::vector<PrefValue> ValuePool(Family family);

// One line per fact; written into every report header.
inline constexpr std::string_view kGeneratorAlgorithm =
    "mt19937_64(seed); uniform_below(n) rejects draws >= 2^64 - (2^64 mod n) "
    "and returns draw mod n; bernoulli(p/q) = uniform_below(q) < p; "
    "instance k of a run uses seed + k";

// Deterministic instances. Problems: variables x,y,z,w with domains a,b,c;
// for each pair i<j a binary constraint with probability `density`, then
// for each variable a unary constraint with probability 1/2; tables filled
// row-major from the pool. Games: the same neighbour draw, then payoff
// tables in player order. Throws kInvalidConfig (also for the wrong kind of
// family).
Scsp GenerateScsp(const GeneratorConfig& config);
GraphicalGame GenerateGame(const GeneratorConfig& config);

// Property identifiers, in report order.
inline constexpr std::string_view kNashLocal = "a-optimal-in-nash-local";
inline constexpr std::string_view kParetoLocal = "a-optimal-in-pareto-local";
inline constexpr std::string_view kSolutionsNashLocal = "b-solutions-in-nash-local";
inline constexpr std::string_view kNashGlobal = "c-optimal-in-nash-global";
inline constexpr std::string_view kParetoGlobal = "c-optimal-equals-pareto-global";
inline constexpr std::string_view kInversePareto = "d-inverse-optimal-equals-pareto";
inline constexpr std::string_view kMergedParetoNash = "e-merged-optimal-equals-pareto-nash";

enum class Outcome { kPass, kFail, kSkip };

struct PropertyResult {
  std::string property;
  Outcome outcome = Outcome::kPass;
  // The two compared sets, rendered, and the first assignment breaking the
  // relation (empty unless failed).
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::string witness;
};

// Every property applicable to the instance. Problems: (a) on weighted
// problems whose optimum is finite, (b) on consistent classical problems,
// (c) on every problem, (d) and (e) on L(P). Games: (d) and (e). Property
// (e) is skipped when Nash equilibria exist but all of them map to the
// product zero.
std::vector<PropertyResult> CheckInstance(const Document& instance);

// An optimal solution of the problem that is not a Nash equilibrium of
// L(P), if one exists.
std::optional<JointAssignment> OptimalNotNashLocal(const Scsp& problem);

struct PropertyTally {
  std::string property;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct Failure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  PropertyResult result;
  // The failing instance after greedy constraint deletion (problems only).
  Json instance;
};

struct VerificationReport {
  GeneratorConfig config;
  std::size_t count = 0;
  std::vector<PropertyTally> tallies;
  // Problems with an optimal solution that is not Nash in L(P).
  std::size_t optimal_not_nash_local = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  const PropertyTally* Tally(std::string_view property) const;
};

// Generates `count` instances (seeds config.seed .. seed + count - 1) and
// checks them on `workers` threads. The report does not depend on the
// worker count. Throws kInvalidConfig.
VerificationReport VerifyAll(const GeneratorConfig& config, std::size_t count,
                             std::size_t workers = 1);

std::string FormatReport(const VerificationReport& report);
Json ReportToJson(const VerificationReport& report);

}  // namespace softgame

#endif  // SOFTGAME_HARNESS_H_
