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
#include <string>
#include <vector>

#include "mrcsim/core/program.h"

namespace mrcsim {

enum class Verdict { kAccept, kReject, kResourceViolation };

enum class Bound {
  kSpace,
  kTime,
  kKeysPerInvocation,
  kKeysPerRound,
  kRounds,
  kProcessors,
};

const char* ToString(Verdict v);
const char* ToString(Bound b);
const char* ToString(Phase p);

// One failed bound. `processor` is the invocation index within its phase
// (mapper index in U_{r-1} order, reducer index in key order), or the BSP
// processor index.
struct ResourceViolation {
  Bound bound = Bound::kSpace;
  std::uint64_t round = 0;
  Phase phase = Phase::kMap;
  std::uint64_t processor = 0;
  std::uint64_t measured = 0;
  std::uint64_t limit = 0;

  std::string Describe() const;
  friend bool operator==(const ResourceViolation&, const ResourceViolation&) = default;
};

struct RoundMetrics {
  std::uint64_t round = 0;
  std::uint64_t mapper_invocations = 0;
  std::uint64_t reducer_invocations = 0;
  std::uint64_t max_keys_per_mapper = 0;
  std::uint64_t total_distinct_keys = 0;
  std::uint64_t total_pairs = 0;  // |V_r|
  std::uint64_t output_pairs = 0;  // |U_r|
  std::uint64_t max_group_size = 0;
  std::uint64_t max_reducer_input_bytes = 0;
  std::uint64_t max_working_space_bytes = 0;  // peak scratch of any invocation
  std::uint64_t max_space_charge_bytes = 0;   // input + scratch + emitted
  std::uint64_t max_steps_per_invocation = 0;
  std::uint64_t mapper_steps = 0;
  std::uint64_t reducer_steps = 0;
  std::uint64_t pair_count_flagged = 0;  // 1 if total_pairs exceeds keys_constant * n^2

  friend bool operator==(const RoundMetrics&, const RoundMetrics&) = default;
};

struct ResourceReport {
  std::uint64_t rounds_executed = 0;
  std::vector<RoundMetrics> rounds;
  std::uint64_t simulated_sequential_time = 0;
  Verdict verdict = Verdict::kReject;
  // Set when enforcement aborted the run.
  std::optional<ResourceViolation> violation;
  // Bounds exceeded under record-only enforcement (first kMaxRecorded kept).
  std::vector<ResourceViolation> recorded;
  std::uint64_t recorded_total = 0;

  static constexpr std::size_t kMaxRecorded = 32;

  bool LimitsRespected() const { return !violation && recorded_total == 0; }
  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

// Sequential cost model shared by the engine's running total and the
// sequential simulator.
std::uint64_t ShuffleCharge(std::uint64_t total_pairs);
std::uint64_t SetupCharge(std::uint64_t n, std::uint64_t round);

}  // namespace mrcsim
