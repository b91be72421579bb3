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

#ifndef SOFTGAME_ASSIGNMENT_H_
#define SOFTGAME_ASSIGNMENT_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace softgame {

// One domain (or strategy) index per variable (or player), in problem order.
// Serves both as an SCSP solution and as a game joint strategy. The default
// ordering is the canonical lexicographic order used for all outputs.
struct JointAssignment {
  std::vector<std::size_t> values;

  std::size_t size() const { return values.size(); }
  std::size_t operator[](std::size_t i) const { return values[i]; }
  auto operator<=>(const JointAssignment&) const = default;
};

// Every assignment over the given domain sizes, in lexicographic order (last
// position varies fastest).
std::vector<JointAssignment> AllAssignments(std::span<const std::size_t> sizes);

// Row-major index of the tuple (assignment restricted to scope) in a dense
// table over the scoped sizes.
std::size_t TableIndex(const JointAssignment& s, std::span<const std::size_t> scope,
                       std::span<const std::size_t> sizes);

// Renders values as "bbb" when every label is a single character, otherwise
// comma-joined ("c1,n2").
std::string RenderLabels(std::span<const std::string> labels);

}  // namespace softgame

#endif  // SOFTGAME_ASSIGNMENT_H_
