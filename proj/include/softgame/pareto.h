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

#ifndef SOFTGAME_PARETO_H_
#define SOFTGAME_PARETO_H_

#include <cstddef>
#include <span>
#include <vector>

#include "softgame/semiring.h"
#include "softgame/value.h"

namespace softgame {

// Indices, ascending, of the vectors not strictly dominated by another one.
// Coordinate k of every vector is ordered by orders[k], which must be linearly
// ordered. Dominance: every coordinate leq and at least one less.
std::vector<std::size_t> ParetoFront(std::span<const std::vector<PrefValue>> vectors,
                                     std::span<const Semiring> orders);

}  // namespace softgame

#endif  // SOFTGAME_PARETO_H_
