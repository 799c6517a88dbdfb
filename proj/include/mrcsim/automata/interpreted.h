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

#pragma once

#include <string>

#include "mrcsim/automata/tisp.h"
#include "mrcsim/core/limits.h"
#include "mrcsim/core/program.h"

namespace mrcsim {

// A RoundBehavior backed by one single-tape machine M(m, r, n, y).
//
// The tape starts as "<m>#<r>#<n>#<y>" where m is 1 for the mapper and 0 for
// the reducer. A mapper argument is "key:value"; a reducer argument is
// "key:v1;v2;...". When the machine halts, everything after the third '#'
// (trailing blanks dropped) is read back in the same shape: a mapper emits
// each "k:v" item separated by ';', a reducer emits its key with each listed
// value. Halting in the accept state raises the reducer's accept flag.
// Running past limits.StepBudget(n) steps is a BehaviorError.
class InterpretedBehavior : public RoundBehavior {
 public:
  InterpretedBehavior(TispMachine machine, ResourceLimits limits)
      : machine_(std::move(machine)), limits_(limits) {}

  BehaviorKind kind() const override { return BehaviorKind::kInterpreted; }
  void Map(const KeyValuePair& pair, Invocation& inv) const override;
  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override;

  const TispMachine& machine() const { return machine_; }

 private:
  TispResult Execute(std::string argument, Invocation& inv) const;

  TispMachine machine_;
  ResourceLimits limits_;
};

}  // namespace mrcsim
