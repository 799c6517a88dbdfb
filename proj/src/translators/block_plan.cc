// Copyright 2026 The mrcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrcsim/translators/block_plan.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mrcsim {

BlockPlan BlockPlan::For(std::uint64_t n, Rational epsilon) {
  if (!epsilon.InOpenUnitInterval()) {
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1, got " + epsilon.ToString());
  }
  BlockPlan plan;
  plan.n = n;
  plan.epsilon = epsilon;
  if (n <= 1) {
    plan.block_size = n;
    plan.block_count = 1;
    return plan;
  }
  plan.block_size = CeilPow(n, epsilon);
  plan.block_count = (n + plan.block_size - 1) / plan.block_size;
  return plan;
}

std::uint64_t BlockPlan::BlockOf(std::uint64_t position) const {
  if (block_size == 0) return 1;
  return (position + block_size - 1) / block_size;
}

void RouteToBlock(const KeyValuePair& pair, const BlockPlan& plan, Invocation& inv) {
  inv.Step();
  if (pair.key.empty()) {
    inv.Emit("1", "");
    return;
  }
  std::uint64_t i = ParseDec(pair.key);
  inv.Emit(Dec(plan.BlockOf(i)), pair.key + ":" + pair.value);
}

std::string AssembleBlock(std::span<const KeyValuePair> group, Invocation& inv) {
  std::vector<std::pair<std::uint64_t, char>> cells;
  cells.reserve(group.size());
  for (const auto& p : group) {
    inv.Step();
    if (p.value.empty()) continue;
    auto colon = p.value.find(':');
    if (colon == std::string::npos || colon + 2 != p.value.size()) {
      throw BehaviorError("malformed block cell '" + p.value + "'");
    }
    cells.emplace_back(ParseDec(std::string_view(p.value).substr(0, colon)), p.value.back());
  }
  std::sort(cells.begin(), cells.end());
  std::string block;
  block.reserve(cells.size());
  for (const auto& [index, symbol] : cells) block.push_back(symbol);
  return block;
}

}  // namespace mrcsim
