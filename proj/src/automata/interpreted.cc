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

#include "mrcsim/automata/interpreted.h"

#include <limits>

namespace mrcsim {
namespace {

std::string_view OutputRegion(std::string_view tape, char blank) {
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    pos = tape.find('#', pos);
    if (pos == std::string_view::npos) return {};
    ++pos;
  }
  std::string_view region = tape.substr(pos);
  while (!region.empty() && region.back() == blank) region.remove_suffix(1);
  return region;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

}  // namespace

TispResult InterpretedBehavior::Execute(std::string argument, Invocation& inv) const {
  std::string tape = std::string(inv.phase() == Phase::kMap ? "1" : "0") + "#" +
                     std::to_string(inv.round()) + "#" + std::to_string(inv.n()) + "#" +
                     argument;
  const std::uint64_t budget = limits_.StepBudget(inv.n());
  TispResult r = RunTispTape(machine_, std::move(tape), budget,
                             std::numeric_limits<std::uint64_t>::max());
  inv.Step(r.steps);
  inv.UseWorking(r.cells);
  if (r.outcome == TispOutcome::kTimeExceeded) {
    throw BehaviorError("interpreted machine exceeded its step budget of " +
                        std::to_string(budget));
  }
  return r;
}

void InterpretedBehavior::Map(const KeyValuePair& pair, Invocation& inv) const {
  TispResult r = Execute(pair.key + ":" + pair.value, inv);
  for (std::string_view item : Split(OutputRegion(r.tape, machine_.blank()), ';')) {
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      inv.Emit(std::string(item), "");
    } else {
      inv.Emit(std::string(item.substr(0, colon)), std::string(item.substr(colon + 1)));
    }
  }
}

void InterpretedBehavior::Reduce(std::string_view key, std::span<const KeyValuePair> group,
                                 Invocation& inv) const {
  std::string arg(key);
  arg.push_back(':');
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (i > 0) arg.push_back(';');
    arg += group[i].value;
  }
  TispResult r = Execute(std::move(arg), inv);
  if (r.final_state == machine_.accept()) inv.Accept();
  std::string_view region = OutputRegion(r.tape, machine_.blank());
  auto colon = region.find(':');
  if (colon == std::string_view::npos) return;
  std::string out_key(region.substr(0, colon));
  for (std::string_view v : Split(region.substr(colon + 1), ';')) {
    inv.Emit(out_key, std::string(v));
  }
}

}  // namespace mrcsim
