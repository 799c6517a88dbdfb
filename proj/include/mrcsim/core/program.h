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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/core/key_value.h"
#include "mrcsim/core/limits.h"

namespace mrcsim {

enum class Phase { kMap, kReduce };

enum class Acceptance {
  kAcceptState,      // accept iff some reducer raises the accept flag
  kEmptyFinalRound,  // accept iff U_R is empty
};

// Verdict flag a reducer may raise. kReject halts the run without accepting;
// it exists so halting simulations can stop in the round they halt.
enum class Flag { kNone, kAccept, kReject };

// Thrown when a behavior invocation itself fails, e.g. an interpreted machine
// running past its step budget.
class BehaviorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for programs that can never run (bad round count, bad limits).
class ProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Handle given to a single mapper or reducer invocation. It is the only
// channel between the invocation and the engine: outputs go through Emit and
// resource use is self-reported through Step and UseWorking.
class Invocation {
 public:
  Invocation(Phase phase, std::uint64_t round, std::uint64_t n)
      : phase_(phase), round_(round), n_(n) {}

  void Emit(std::string key, std::string value) {
    emitted_bytes_ += key.size() + value.size();
    out_.push_back({std::move(key), std::move(value)});
  }
  void Step(std::uint64_t count = 1) { steps_ += count; }
  // Reports the current size of scratch storage; the peak is retained.
  void UseWorking(std::uint64_t bytes) {
    if (bytes > peak_working_) peak_working_ = bytes;
  }
  void Accept() { flag_ = Flag::kAccept; }
  void Reject() {
    if (flag_ != Flag::kAccept) flag_ = Flag::kReject;
  }

  Phase phase() const { return phase_; }
  std::uint64_t round() const { return round_; }
  std::uint64_t n() const { return n_; }

  std::uint64_t steps() const { return steps_; }
  std::uint64_t peak_working() const { return peak_working_; }
  std::uint64_t emitted_bytes() const { return emitted_bytes_; }
  Flag flag() const { return flag_; }
  std::vector<KeyValuePair>& output() { return out_; }

 private:
  Phase phase_;
  std::uint64_t round_;
  std::uint64_t n_;
  std::uint64_t steps_ = 0;
  std::uint64_t peak_working_ = 0;
  std::uint64_t emitted_bytes_ = 0;
  Flag flag_ = Flag::kNone;
  std::vector<KeyValuePair> out_;
};

enum class BehaviorKind { kBuiltin, kInterpreted };

// The uniform machine M(m, r, n, y): one object answers for every round's
// mapper (m = 1) and reducer (m = 0). Round and n arrive through the
// Invocation. Implementations must be deterministic and thread-safe.
class RoundBehavior {
 public:
  virtual ~RoundBehavior() = default;

  virtual BehaviorKind kind() const { return BehaviorKind::kBuiltin; }
  virtual void Map(const KeyValuePair& pair, Invocation& inv) const = 0;
  // `group` holds every pair of V_r with this key, in canonical order.
  virtual void Reduce(std::string_view key, std::span<const KeyValuePair> group,
                      Invocation& inv) const = 0;
};

// R(n) = per_n * n + fixed. Most constructions use a constant round count;
// a few (step-per-round simulation, the unary construction) depend on n.
struct RoundCount {
  std::uint64_t per_n = 0;
  std::uint64_t fixed = 1;

  std::uint64_t At(std::uint64_t n) const { return SatAdd(SatMul(per_n, n), fixed); }
};

struct MrcProgram {
  std::string name;
  RoundCount rounds;
  std::shared_ptr<const RoundBehavior> behavior;
  ResourceLimits limits;
  Acceptance acceptance = Acceptance::kAcceptState;
  // When the input is empty, present round 1's mapper with one empty pair so
  // block-based constructions still see a single (empty) block.
  bool seed_empty_input = false;
};

// Throws ProgramError if the program cannot run on inputs of size n: no
// behavior, R(n) == 0, invalid limits, or R(n) too large to be written down
// in one processor's space budget.
void ValidateProgram(const MrcProgram& program, std::uint64_t n);

}  // namespace mrcsim
