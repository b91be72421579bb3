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

#ifndef SOFTGAME_TESTS_TEST_UTIL_H_
#define SOFTGAME_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "softgame/game.h"
#include "softgame/io.h"
#include "softgame/scsp.h"
#include "softgame/semiring.h"

namespace softgame::testing {

inline PrefValue Fz(const char* text) { return PrefValue::FuzzyLevel(ParseRational(text)); }
inline PrefValue Wt(const char* text) {
  return std::string(text) == "inf" ? PrefValue::InfiniteCost()
                                    : PrefValue::FiniteCost(ParseRational(text));
}
inline PrefValue Ut(const char* text) { return PrefValue::UtilityAmount(ParseRational(text)); }
inline PrefValue Tup(std::vector<PrefValue> items) { return PrefValue::MakeTuple(std::move(items)); }

inline std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(SOFTGAME_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Scsp LoadScsp(const std::string& name) { return ParseScsp(ReadData(name)); }
inline GraphicalGame LoadGame(const std::string& name) { return ParseGame(ReadData(name)); }

// Renders assignments in the compact label form, preserving order.
template <typename Labeled>
std::vector<std::string> Rendered(const Labeled& owner, const std::vector<JointAssignment>& xs) {
  std::vector<std::string> out;
  for (const auto& s : xs) out.push_back(owner.Render(s));
  return out;
}

inline std::vector<std::string> RenderedOptimal(const Scsp& problem) {
  std::vector<std::string> out;
  for (const auto& r : EnumerateOptimal(problem)) out.push_back(problem.Render(r.assignment));
  return out;
}

}  // namespace softgame::testing

#endif  // SOFTGAME_TESTS_TEST_UTIL_H_
