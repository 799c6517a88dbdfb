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

#include "mrcsim/translators/unary.h"

#include <stdexcept>

#include "mrcsim/translators/block_plan.h"

namespace mrcsim {
namespace {

bool IsPrime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool IsSquare(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

class UnaryRounds : public RoundBehavior {
 public:
  explicit UnaryRounds(NamedOracle oracle) : oracle_(std::move(oracle)) {}

  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    switch (inv.round()) {
      case 1:
        if (pair.key.empty()) {
          inv.Emit("1", "");
          return;
        }
        inv.Emit(Dec(BlockPlan::For(inv.n(), {1, 2}).BlockOf(ParseDec(pair.key))), pair.value);
        return;
      case 2:
        inv.Emit("*", pair.value);
        return;
      default:
        inv.Emit(pair.key, pair.value);
    }
  }

  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    if (inv.round() == 1) {
      std::uint64_t ones = 0;
      for (const auto& p : group) {
        inv.Step();
        if (p.value == "1") {
          ++ones;
        } else if (!p.value.empty()) {
          inv.Reject();
          return;
        }
      }
      inv.Emit(std::string(key), Dec(ones));
      return;
    }
    if (inv.round() == 2) {
      std::uint64_t total = 0;
      for (const auto& p : group) {
        inv.Step();
        total += ParseDec(p.value);
      }
      inv.Emit("*", Dec(total));
      return;
    }
    for (const auto& p : group) {
      inv.Step();
      const std::uint64_t count = ParseDec(p.value);
      if (count == inv.round() - 3) {
        if (oracle_.holds(count)) {
          inv.Accept();
        } else {
          inv.Reject();
        }
        return;
      }
      inv.Emit(p.key, p.value);
    }
  }

 private:
  NamedOracle oracle_;
};

}  // namespace

NamedOracle OracleByName(std::string_view name) {
  if (name == "even") return {"even", [](std::uint64_t v) { return v % 2 == 0; }};
  if (name == "odd") return {"odd", [](std::uint64_t v) { return v % 2 == 1; }};
  if (name == "true") return {"true", [](std::uint64_t) { return true; }};
  if (name == "false") return {"false", [](std::uint64_t) { return false; }};
  if (name == "prime") return {"prime", IsPrime};
  if (name == "square") return {"square", IsSquare};
  throw std::invalid_argument("unknown oracle '" + std::string(name) + "'");
}

std::vector<std::string> OracleNames() { return {"even", "odd", "true", "false", "prime", "square"}; }

MrcProgram CompileUnary(NamedOracle oracle, const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "unary:" + oracle.name;
  program.rounds = {1, 3};
  program.behavior = std::make_shared<UnaryRounds>(std::move(oracle));
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

}  // namespace mrcsim
