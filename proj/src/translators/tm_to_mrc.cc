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

#include "mrcsim/translators/tm_to_mrc.h"

#include <algorithm>
#include <string>
#include <vector>

#include "mrcsim/core/limits.h"
#include "mrcsim/translators/block_plan.h"

namespace mrcsim {
namespace {

class SublogRounds : public RoundBehavior {
 public:
  SublogRounds(Tm tm, Rational epsilon) : tm_(std::move(tm)), epsilon_(epsilon) {}

  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    if (inv.round() == 1) {
      RouteToBlock(pair, BlockPlan::For(inv.n(), epsilon_), inv);
      return;
    }
    inv.Step();
    inv.Emit("1", pair.key + "|" + pair.value);
  }

  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    if (inv.round() == 1) {
      const BlockPlan plan = BlockPlan::For(inv.n(), epsilon_);
      std::string block = AssembleBlock(group, inv);
      const std::uint64_t j = ParseDec(key);
      std::uint64_t steps = 0;
      BoundaryTable table = TmBoundaryFunction(tm_, block, RoleOf(j - 1, plan.block_count), &steps);
      inv.Step(steps);
      std::string serialized = table.Serialize();
      inv.UseWorking(block.size() + serialized.size());
      inv.Emit(std::string(key), std::move(serialized));
      return;
    }
    std::vector<std::pair<std::uint64_t, BoundaryTable>> tables;
    std::uint64_t working = 0;
    for (const auto& p : group) {
      auto bar = p.value.find('|');
      if (bar == std::string::npos) throw BehaviorError("malformed boundary record");
      std::string_view body = std::string_view(p.value).substr(bar + 1);
      working += body.size();
      inv.Step(body.size());
      tables.emplace_back(ParseDec(std::string_view(p.value).substr(0, bar)),
                          BoundaryTable::Parse(body));
    }
    inv.UseWorking(working);
    std::sort(tables.begin(), tables.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BoundaryTable> ordered;
    ordered.reserve(tables.size());
    for (auto& t : tables) ordered.push_back(std::move(t.second));
    inv.Step(SatMul(SatMul(tm_.WorkConfigCount(), ordered.size()), 2));
    if (ChainBoundaryTables(tm_, ordered) == TmOutcome::kAccept) {
      inv.Accept();
    } else {
      inv.Reject();
    }
  }

 private:
  Tm tm_;
  Rational epsilon_;
};

}  // namespace

std::uint64_t CollectorBytes(const Tm& tm, Rational epsilon, std::uint64_t n) {
  const Tm stay_free = EliminateInputStays(tm);
  return SatMul(BlockPlan::For(n, epsilon).block_count, BoundaryTableBytes(stay_free));
}

MrcProgram CompileSublogTmToMrc(const Tm& tm, Rational epsilon, const ResourceLimits& limits,
                                std::optional<std::uint64_t> target_n) {
  if (!epsilon.InOpenUnitInterval()) {
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1");
  }
  Tm stay_free = EliminateInputStays(tm);
  if (target_n) {
    const std::uint64_t need = CollectorBytes(tm, epsilon, *target_n);
    const std::uint64_t have = limits.SpaceBoundBytes(*target_n);
    if (need > have) {
      throw InfeasibleSpace("boundary tables need " + std::to_string(need) + " bytes at n=" +
                            std::to_string(*target_n) + " but the space bound is " +
                            std::to_string(have));
    }
  }
  MrcProgram program;
  program.name = "tm2mrc";
  program.rounds = {0, 2};
  program.behavior = std::make_shared<SublogRounds>(std::move(stay_free), epsilon);
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

}  // namespace mrcsim
