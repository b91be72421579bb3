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

#include "softgame/assignment.h"

namespace softgame {

std::vector<JointAssignment> AllAssignments(std::span<const std::size_t> sizes) {
  std::vector<JointAssignment> out;
  for (std::size_t size : sizes) {
    if (size == 0) return out;
  }
  JointAssignment current{std::vector<std::size_t>(sizes.size(), 0)};
  while (true) {
    out.push_back(current);
    std::size_t pos = sizes.size();
    while (pos > 0) {
      --pos;
      if (++current.values[pos] < sizes[pos]) break;
      current.values[pos] = 0;
      if (pos == 0) return out;
    }
    if (sizes.empty()) return out;
  }
}

std::size_t TableIndex(const JointAssignment& s, std::span<const std::size_t> scope,
                       std::span<const std::size_t> sizes) {
  std::size_t index = 0;
  for (std::size_t var : scope) index = index * sizes[var] + s.values[var];
  return index;
}

std::string RenderLabels(std::span<const std::string> labels) {
  bool compact = true;
  for (const auto& l : labels) compact = compact && l.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!compact && i > 0) out += ",";
    out += labels[i];
  }
  return out;
}

}  // namespace softgame
