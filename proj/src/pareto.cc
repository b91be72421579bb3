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

#include "softgame/pareto.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace softgame {

std::vector<std::size_t> ParetoFront(std::span<const std::vector<PrefValue>> vectors,
                                     std::span<const Semiring> orders) {
  const std::size_t n = vectors.size();
  const std::size_t width = orders.size();

  // ranks[i][k]: position of vectors[i][k] among the distinct values of
  // coordinate k, worst first.
  std::vector<std::vector<std::uint32_t>> ranks(n, std::vector<std::uint32_t>(width));
  std::vector<std::size_t> by_value(n);
  for (std::size_t k = 0; k < width; ++k) {
    const Semiring& order = orders[k];
    auto less = [&](std::size_t a, std::size_t b) { return order.less(vectors[a][k], vectors[b][k]); };
    std::iota(by_value.begin(), by_value.end(), 0);
    std::sort(by_value.begin(), by_value.end(), less);
    std::uint32_t rank = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (pos > 0 && less(by_value[pos - 1], by_value[pos])) ++rank;
      ranks[by_value[pos]][k] = rank;
    }
  }

  // A dominating vector has a strictly larger rank sum, so scanning by
  // descending sum meets every maximal vector before anything it dominates.
  std::vector<std::uint64_t> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sums[i] = std::accumulate(ranks[i].begin(), ranks[i].end(), std::uint64_t{0});
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sums](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });

  auto dominates = [&](std::size_t better, std::size_t worse) {
    bool strict = false;
    for (std::size_t k = 0; k < width; ++k) {
      if (ranks[better][k] < ranks[worse][k]) return false;
      strict = strict || ranks[better][k] > ranks[worse][k];
    }
    return strict;
  };
  std::vector<std::size_t> front;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : front) {
      if (dominates(j, i)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(i);
  }
  std::sort(front.begin(), front.end());
  return front;
}

}  // namespace softgame
