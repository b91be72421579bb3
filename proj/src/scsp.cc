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

#include "softgame/scsp.h"

#include <algorithm>
#include <set>

#include "softgame/error.h"
#include "softgame/pareto.h"

namespace softgame {

Scsp::Scsp(Semiring semiring, std::vector<Variable> variables,
           std::vector<SoftConstraint> constraints)
    : semiring_(std::move(semiring)),
      variables_(std::move(variables)),
      constraints_(std::move(constraints)) {
  if (!semiring_.is_c_semiring()) {
    throw Error(ErrorCode::kNotASemiring,
                semiring_.name() + " cannot be the semiring of a problem");
  }
  std::set<std::string> names;
  for (const auto& v : variables_) {
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::kInvalidProblem, "duplicate variable '" + v.name + "'");
    }
    if (v.domain.empty()) {
      throw Error(ErrorCode::kInvalidProblem, "variable '" + v.name + "' has an empty domain");
    }
    std::set<std::string> labels(v.domain.begin(), v.domain.end());
    if (labels.size() != v.domain.size()) {
      throw Error(ErrorCode::kInvalidProblem,
                  "variable '" + v.name + "' has duplicate domain values");
    }
    sizes_.push_back(v.domain.size());
  }
  for (const auto& c : constraints_) {
    std::set<std::size_t> seen;
    std::size_t rows = 1;
    for (std::size_t var : c.scope) {
      if (var >= variables_.size()) {
        throw Error(ErrorCode::kInvalidProblem, "constraint scope names a missing variable");
      }
      if (!seen.insert(var).second) {
        throw Error(ErrorCode::kInvalidProblem,
                    "constraint scope repeats '" + variables_[var].name + "'");
      }
      rows *= sizes_[var];
    }
    if (c.table.size() != rows) {
      throw Error(ErrorCode::kInvalidProblem, "constraint table is not total over its scope");
    }
    for (const auto& v : c.table) {
      if (!semiring_.Contains(v)) {
        throw Error(ErrorCode::kKindMismatch,
                    "table value " + ToString(v) + " is not in the " + semiring_.name() +
                        " carrier");
      }
    }
  }
}

std::size_t Scsp::VariableIndex(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw Error(ErrorCode::kUnknownVariable, "no variable '" + std::string(name) + "'");
}

JointAssignment Scsp::Assign(std::span<const std::string> labels) const {
  if (labels.size() != variables_.size()) {
    throw Error(ErrorCode::kInvalidProblem, "assignment has the wrong number of values");
  }
  JointAssignment s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& domain = variables_[i].domain;
    auto it = std::find(domain.begin(), domain.end(), labels[i]);
    if (it == domain.end()) {
      throw Error(ErrorCode::kInvalidProblem, "'" + labels[i] + "' is not in the domain of '" +
                                                  variables_[i].name + "'");
    }
    s.values.push_back(static_cast<std::size_t>(it - domain.begin()));
  }
  return s;
}

JointAssignment Scsp::Assign(std::string_view compact) const {
  std::vector<std::string> labels;
  for (char c : compact) labels.emplace_back(1, c);
  return Assign(labels);
}

std::vector<std::string> Scsp::Project(const JointAssignment& s,
                                       std::span<const std::string> scope) const {
  std::vector<std::string> out;
  for (const auto& name : scope) {
    std::size_t var = VariableIndex(name);
    out.push_back(variables_[var].domain[s.values[var]]);
  }
  return out;
}

const PrefValue& Scsp::ValueAt(const SoftConstraint& c, const JointAssignment& s) const {
  return c.table[TableIndex(s, c.scope, sizes_)];
}

PrefValue Scsp::Preference(const JointAssignment& s) const {
  PrefValue result = semiring_.one();
  for (const auto& c : constraints_) result = semiring_.times(result, ValueAt(c, s));
  return result;
}

std::string Scsp::Render(const JointAssignment& s) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    labels.push_back(variables_[i].domain[s.values[i]]);
  }
  return RenderLabels(labels);
}

std::vector<RankedSolution> EnumerateOptimal(const Scsp& problem) {
  std::vector<RankedSolution> all;
  for (auto& s : AllAssignments(problem.domain_sizes())) {
    PrefValue p = problem.Preference(s);
    all.push_back({std::move(s), std::move(p)});
  }
  const Semiring& semiring = problem.semiring();
  std::vector<RankedSolution> optimal;
  if (semiring.is_linearly_ordered()) {
    PrefValue best = semiring.zero();
    for (const auto& r : all) best = semiring.plus(best, r.preference);
    for (auto& r : all) {
      if (r.preference == best) optimal.push_back(std::move(r));
    }
    return optimal;
  }
  // Product carriers: Pareto front over the linearly ordered components.
  std::vector<std::vector<PrefValue>> vectors;
  vectors.reserve(all.size());
  for (const auto& r : all) vectors.push_back(r.preference.as<Tuple>().items);
  for (std::size_t i : ParetoFront(vectors, semiring.components())) {
    optimal.push_back(std::move(all[i]));
  }
  return optimal;
}

bool IsConsistent(const Scsp& problem) {
  if (problem.semiring().kind() != CarrierKind::kClassical) {
    throw Error(ErrorCode::kNotClassical,
                "consistency is defined for classical problems, got " + problem.semiring().name());
  }
  const PrefValue one = problem.semiring().one();
  for (const auto& s : AllAssignments(problem.domain_sizes())) {
    if (problem.Preference(s) == one) return true;
  }
  return false;
}

}  // namespace softgame
