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

#ifndef SOFTGAME_SCSP_H_
#define SOFTGAME_SCSP_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgame/assignment.h"
#include "softgame/semiring.h"
#include "softgame/value.h"

namespace softgame {

struct Variable {
  std::string name;
  std::vector<std::string> domain;

  bool operator==(const Variable&) const = default;
};

// A soft constraint <def, con>. The table is dense and row-major over the
// scoped domains, first scoped variable most significant.
struct SoftConstraint {
  std::vector<std::size_t> scope;
  std::vector<PrefValue> table;

  bool operator==(const SoftConstraint&) const = default;
};

// A soft constraint satisfaction problem <C, V, D, S>. Immutable once built.
class Scsp {
 public:
  // Validates every invariant; throws kInvalidProblem (or kNotASemiring,
  // kKindMismatch) on violation.
  Scsp(Semiring semiring, std::vector<Variable> variables,
       std::vector<SoftConstraint> constraints);

  const Semiring& semiring() const { return semiring_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<SoftConstraint>& constraints() const { return constraints_; }
  std::span<const std::size_t> domain_sizes() const { return sizes_; }

  // Throws kUnknownVariable.
  std::size_t VariableIndex(std::string_view name) const;

  // Builds an assignment from domain labels in variable order.
  JointAssignment Assign(std::span<const std::string> labels) const;
  // Shorthand for single-character labels: Assign("bab").
  JointAssignment Assign(std::string_view compact) const;

  // Labels of s restricted to scope, in scope order. Throws kUnknownVariable.
  std::vector<std::string> Project(const JointAssignment& s,
                                   std::span<const std::string> scope) const;

  const PrefValue& ValueAt(const SoftConstraint& c, const JointAssignment& s) const;

  // The x-combination of every constraint at s; the semiring one when there
  // are no constraints.
  PrefValue Preference(const JointAssignment& s) const;

  std::string Render(const JointAssignment& s) const;

  bool operator==(const Scsp&) const = default;

 private:
  Semiring semiring_;
  std::vector<Variable> variables_;
  std::vector<SoftConstraint> constraints_;
  std::vector<std::size_t> sizes_;
};

struct RankedSolution {
  JointAssignment assignment;
  PrefValue preference;
};

// Every solution with no strictly better solution in the induced order
// (Pareto-maximal for product semirings), in canonical order.
std::vector<RankedSolution> EnumerateOptimal(const Scsp& problem);

// True iff some solution has preference 1. Throws kNotClassical.
bool IsConsistent(const Scsp& problem);

}  // namespace softgame

#endif  // SOFTGAME_SCSP_H_
