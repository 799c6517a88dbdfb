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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrcsim/core/key_value.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/report.h"

namespace mrcsim {

// U_r: pairs in canonical order (key ascending, then producing invocation,
// then emission index).
struct RoundState {
  std::vector<KeyValuePair> pairs;
  std::uint64_t round_index = 0;

  friend bool operator==(const RoundState&, const RoundState&) = default;
};

struct KeyGroup {
  std::string key;
  std::vector<std::string> values;

  friend bool operator==(const KeyGroup&, const KeyGroup&) = default;
};

// Groups values by key; keys ascending, values in input (provenance) order.
std::vector<KeyGroup> ShuffleAndSort(std::span<const KeyValuePair> pairs);

// U_0 for an encoded input.
RoundState InitialState(const InputEncoding& input);

struct RunOptions {
  // Permutes the order in which invocations are started within each phase.
  std::optional<std::uint64_t> schedule_seed;
  // OpenMP team size; 0 keeps the runtime default.
  int threads = 0;
  // Keep U_r for every executed round.
  bool keep_trace = false;
};

struct RoundOutcome {
  RoundState next;
  RoundMetrics metrics;
  Flag flag = Flag::kNone;
  // Every bound exceeded in this round, in canonical order. Under enforce the
  // round stops at the first phase that produced one.
  std::vector<ResourceViolation> violations;
};

// Executes round state.round_index + 1. Mapper and reducer invocations run
// on an OpenMP team; outputs are merged in canonical order so the result does
// not depend on the schedule. Throws BehaviorError if an invocation throws.
RoundOutcome RunRound(const RoundState& state, const MrcProgram& program, std::uint64_t n,
                      const RunOptions& options = {});

struct RunResult {
  Verdict verdict = Verdict::kReject;
  ResourceReport report;
  std::vector<KeyValuePair> output;  // U at the point the run stopped
  std::vector<RoundState> trace;
};

// Runs rounds 1..R(n). Under the accept-state convention the run stops after
// the first round in which a reducer raises a flag.
RunResult Run(const MrcProgram& program, const InputEncoding& input,
              const RunOptions& options = {});

}  // namespace mrcsim
