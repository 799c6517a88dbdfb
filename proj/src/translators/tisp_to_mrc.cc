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

#include "mrcsim/translators/tisp_to_mrc.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mrcsim {
namespace {

struct Token {
  StateId state = 0;
  std::uint64_t pos = 1;
};

std::string EncodeToken(const Token& t) { return "T" + Dec(t.state) + ":" + Dec(t.pos); }

Token DecodeToken(std::string_view v) {
  auto colon = v.find(':');
  if (colon == std::string_view::npos) throw BehaviorError("malformed head token");
  return {static_cast<StateId>(ParseDec(v.substr(1, colon - 1))), ParseDec(v.substr(colon + 1))};
}

class StepRounds : public RoundBehavior {
 public:
  StepRounds(TispMachine machine, Rational epsilon)
      : machine_(std::move(machine)), epsilon_(epsilon) {}

  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    const std::uint64_t b = SegmentCells(inv.n(), epsilon_);
    if (inv.round() == 1) {
      if (pair.key.empty() || pair.key == "1") {
        inv.Emit("1", EncodeToken({machine_.initial(), 1}));
      }
      if (pair.key.empty()) return;
      const std::uint64_t i = ParseDec(pair.key);
      inv.Emit(Dec((i + b - 1) / b), "I" + pair.key + ":" + pair.value);
      return;
    }
    if (!pair.value.empty() && pair.value[0] == 'T') {
      const Token t = DecodeToken(pair.value);
      inv.Emit(Dec((t.pos + b - 1) / b), pair.value);
      return;
    }
    inv.Emit(pair.key, pair.value);
  }

  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    const std::uint64_t b = SegmentCells(inv.n(), epsilon_);
    const std::uint64_t j = ParseDec(key);
    const std::uint64_t first_cell = (j - 1) * b + 1;
    std::string cells(b, machine_.blank());
    std::optional<Token> token;
    for (const auto& p : group) {
      inv.Step();
      if (p.value.empty()) throw BehaviorError("empty segment record");
      switch (p.value[0]) {
        case 'I': {
          auto colon = p.value.find(':');
          const std::uint64_t i = ParseDec(std::string_view(p.value).substr(1, colon - 1));
          cells[i - first_cell] = p.value.back();
          break;
        }
        case 'S':
          if (p.value.size() != b + 1) throw BehaviorError("segment has the wrong width");
          cells = p.value.substr(1);
          break;
        case 'T':
          token = DecodeToken(p.value);
          break;
        default:
          throw BehaviorError("unknown segment record '" + p.value + "'");
      }
    }
    inv.Step(b);
    inv.UseWorking(b);
    if (token) {
      if (!Advance(*token, cells, first_cell, inv)) return;
      inv.Emit(std::string(key), EncodeToken(*token));
    }
    inv.Emit(std::string(key), "S" + cells);
  }

 private:
  // Applies step number `round` of the machine. Returns false once the
  // machine has halted or left its budgets, after raising the flag.
  bool Advance(Token& token, std::string& cells, std::uint64_t first_cell,
               Invocation& inv) const {
    const std::uint64_t r = inv.round();
    if (r == 1) {
      if (std::max<std::uint64_t>(inv.n(), 1) > machine_.space_budget()) {
        inv.Reject();
        return false;
      }
      if (machine_.Halting(token.state)) {
        Finish(token.state, inv);
        return false;
      }
    }
    if (r > machine_.time_budget()) {
      inv.Reject();
      return false;
    }
    char& cell = cells[token.pos - first_cell];
    const TispAction a = machine_.Lookup(token.state, cell);
    cell = a.write;
    token.state = a.next;
    if (a.move == Move::kRight) {
      ++token.pos;
      if (token.pos > machine_.space_budget()) {
        inv.Reject();
        return false;
      }
    } else if (a.move == Move::kLeft && token.pos > 1) {
      --token.pos;
    }
    if (machine_.Halting(token.state)) {
      Finish(token.state, inv);
      return false;
    }
    return true;
  }

  void Finish(StateId state, Invocation& inv) const {
    if (state == machine_.accept()) {
      inv.Accept();
    } else {
      inv.Reject();
    }
  }

  TispMachine machine_;
  Rational epsilon_;
};

}  // namespace

std::uint64_t SegmentCells(std::uint64_t n, Rational epsilon) {
  if (n <= 1) return 1;
  return std::max<std::uint64_t>(1, CeilPow(n, epsilon));
}

MrcProgram CompileTispToMrc(const TispMachine& machine, Rational epsilon,
                            const ResourceLimits& limits) {
  if (!epsilon.InOpenUnitInterval()) {
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1");
  }
  MrcProgram program;
  program.name = "tisp2mrc";
  program.rounds = {0, std::max<std::uint64_t>(machine.time_budget(), 1)};
  program.behavior = std::make_shared<StepRounds>(machine, epsilon);
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

}  // namespace mrcsim
