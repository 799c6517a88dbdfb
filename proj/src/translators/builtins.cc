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

#include "mrcsim/translators/builtins.h"

namespace mrcsim {
namespace {

class AcceptRound : public RoundBehavior {
 public:
  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    inv.Emit(pair.key, pair.value);
  }
  void Reduce(std::string_view, std::span<const KeyValuePair>, Invocation& inv) const override {
    inv.Step();
    inv.Accept();
  }
};

class IdentityRounds : public RoundBehavior {
 public:
  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    inv.Emit(pair.key, pair.value);
  }
  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    for (const auto& p : group) {
      inv.Step();
      inv.Emit(std::string(key), p.value);
    }
  }
};

class FanoutRound : public RoundBehavior {
 public:
  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    if (pair.key != "1") return;
    for (std::uint64_t k = 1; k <= inv.n(); ++k) {
      inv.Step();
      inv.Emit(Dec(k), pair.value);
    }
  }
  void Reduce(std::string_view, std::span<const KeyValuePair>, Invocation& inv) const override {
    inv.Step();
    inv.Accept();
  }
};

}  // namespace

MrcProgram AlwaysAcceptProgram(const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "always-accept";
  program.rounds = {0, 1};
  program.behavior = std::make_shared<AcceptRound>();
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

MrcProgram IdentityProgram(std::uint64_t rounds, const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "identity";
  program.rounds = {0, rounds};
  program.behavior = std::make_shared<IdentityRounds>();
  program.limits = limits;
  program.acceptance = Acceptance::kEmptyFinalRound;
  return program;
}

MrcProgram FanoutProgram(const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "fanout";
  program.rounds = {0, 1};
  program.behavior = std::make_shared<FanoutRound>();
  program.limits = limits;
  return program;
}

}  // namespace mrcsim
