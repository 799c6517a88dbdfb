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

#include "mrcsim/translators/dfa_to_mrc.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mrcsim/translators/block_plan.h"

namespace mrcsim {
namespace {

class DfaRounds : public RoundBehavior {
 public:
  DfaRounds(Dfa dfa, Rational epsilon, DfaCompileOptions options)
      : dfa_(std::move(dfa)), epsilon_(epsilon), options_(options) {}

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
      std::string block = AssembleBlock(group, inv);
      TransitionTable table = DfaTransitionTable(dfa_, block);
      inv.Step(dfa_.num_states() * block.size());
      inv.UseWorking(block.size() + table.size() * StateBytes());
      inv.Emit(std::string(key), SerializeTable(table));
      return;
    }
    std::vector<std::pair<std::uint64_t, TransitionTable>> tables;
    tables.reserve(group.size());
    std::uint64_t working = 0;
    for (const auto& p : group) {
      auto bar = p.value.find('|');
      if (bar == std::string::npos) throw BehaviorError("malformed table record");
      tables.emplace_back(ParseDec(std::string_view(p.value).substr(0, bar)),
                          ParseTable(std::string_view(p.value).substr(bar + 1)));
      working += tables.back().second.size() * StateBytes();
      inv.Step(tables.back().second.size());
    }
    inv.UseWorking(working);
    std::sort(tables.begin(), tables.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (options_.mutate_reverse_composition) std::reverse(tables.begin(), tables.end());
    StateId q = dfa_.start();
    for (const auto& [index, table] : tables) {
      inv.Step();
      q = table[q];
    }
    if (dfa_.accepting(q)) {
      inv.Accept();
    } else {
      inv.Reject();
    }
  }

 private:
  std::uint64_t StateBytes() const { return dfa_.num_states() <= 256 ? 1 : 4; }

  Dfa dfa_;
  Rational epsilon_;
  DfaCompileOptions options_;
};

}  // namespace

std::string SerializeTable(const TransitionTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(table[i]);
  }
  return out;
}

TransitionTable ParseTable(std::string_view text) {
  TransitionTable table;
  while (!text.empty()) {
    auto comma = text.find(',');
    table.push_back(static_cast<StateId>(ParseDec(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return table;
}

MrcProgram CompileDfaToMrc(const Dfa& dfa, Rational epsilon, const ResourceLimits& limits,
                           const DfaCompileOptions& options) {
  if (!epsilon.InOpenUnitInterval()) {
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1");
  }
  MrcProgram program;
  program.name = "dfa2mrc";
  program.rounds = {0, 2};
  program.behavior = std::make_shared<DfaRounds>(dfa, epsilon, options);
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

}  // namespace mrcsim
