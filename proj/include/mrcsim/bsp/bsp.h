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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/core/limits.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/report.h"

namespace mrcsim {

// A message as seen by its receiver. Source 0 marks the processor's input
// piece in round 1.
struct Delivered {
  std::uint64_t source = 0;
  std::string payload;

  friend bool operator==(const Delivered&, const Delivered&) = default;
};

struct Message {
  std::uint64_t source = 0;
  std::uint64_t dest = 0;
  std::string payload;

  friend bool operator==(const Message&, const Message&) = default;
};

// Handle for one processor's computation in one round. Processors are
// numbered 1..p. `scratch` is storage the runner lends the processor between
// rounds; behaviors must not rely on its contents (scrub mode zeroes it).
class ProcessorContext {
 public:
  ProcessorContext(std::uint64_t processor, std::uint64_t round, std::uint64_t n,
                   std::uint64_t p, std::string* scratch)
      : processor_(processor), round_(round), n_(n), p_(p), scratch_(scratch) {}

  void Send(std::uint64_t dest, std::string payload) {
    sent_bytes_ += payload.size();
    outbox_.push_back({processor_, dest, std::move(payload)});
  }
  void Step(std::uint64_t count = 1) { steps_ += count; }
  void UseWorking(std::uint64_t bytes) {
    if (bytes > peak_working_) peak_working_ = bytes;
  }
  void Accept() { flag_ = Flag::kAccept; }
  void Reject() {
    if (flag_ != Flag::kAccept) flag_ = Flag::kReject;
  }
  std::string& scratch() { return *scratch_; }

  std::uint64_t processor() const { return processor_; }
  std::uint64_t round() const { return round_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t peak_working() const { return peak_working_; }
  std::uint64_t sent_bytes() const { return sent_bytes_; }
  Flag flag() const { return flag_; }
  std::vector<Message>& outbox() { return outbox_; }

 private:
  std::uint64_t processor_;
  std::uint64_t round_;
  std::uint64_t n_;
  std::uint64_t p_;
  std::string* scratch_;
  std::uint64_t steps_ = 0;
  std::uint64_t peak_working_ = 0;
  std::uint64_t sent_bytes_ = 0;
  Flag flag_ = Flag::kNone;
  std::vector<Message> outbox_;
};

// Per-round computation shared by all processors. The inbox is ordered by
// (sender, emission). Implementations must be deterministic, thread-safe and
// keep no state between rounds beyond the messages they send.
class BspBehavior {
 public:
  virtual ~BspBehavior() = default;
  virtual void Compute(std::span<const Delivered> inbox, ProcessorContext& ctx) const = 0;
};

struct BspMachine {
  std::string name;
  std::uint64_t processors = 1;
  RoundCount rounds;
  std::shared_ptr<const BspBehavior> behavior;
  ResourceLimits limits;
};

struct BspRunOptions {
  std::optional<std::uint64_t> schedule_seed;
  int threads = 0;
  bool keep_trace = false;
  // Zero every processor's scratch between rounds.
  bool scrub_between_rounds = false;
};

// Report fields reuse RoundMetrics: reducer_invocations is the processor
// count, total_pairs the messages delivered this round, output_pairs the
// messages sent, max_group_size / max_reducer_input_bytes the largest inbox,
// reducer_steps the summed processor steps.
struct BspResult {
  Verdict verdict = Verdict::kReject;
  ResourceReport report;
  // Messages sent in the last executed round; they are never delivered.
  std::vector<Message> output;
  // Inboxes of every processor for every executed round.
  std::vector<std::vector<std::vector<Delivered>>> trace;
};

// The contiguous piece of x given to processor i: the first n mod p
// processors get one extra symbol.
std::string_view InputPiece(std::string_view x, std::uint64_t p, std::uint64_t i);
// 1-based processor holding 1-based position j.
std::uint64_t PieceOwner(std::uint64_t j, std::uint64_t n, std::uint64_t p);
// 1-based position of the first symbol of processor i's piece.
std::uint64_t PieceStart(std::uint64_t n, std::uint64_t p, std::uint64_t i);

// Runs rounds 1..R(n); stops after the first round in which a processor
// raises a flag (accept wins). Throws BehaviorError on a behavior failure or
// a message to a nonexistent processor.
BspResult RunBsp(const BspMachine& machine, std::string_view x, const BspRunOptions& options = {});

// Built-in machines.
BspMachine AcceptImmediatelyMachine(std::uint64_t p, const ResourceLimits& limits = {});
// Processor 1 pings processor 2 in rounds 1 and 2; processor 2 answers each
// ping and accepts on the second receipt, in round 3.
BspMachine PingPongMachine(std::uint64_t p, const ResourceLimits& limits = {});
// Every processor re-sends each payload it receives to itself; accepts
// nothing, so the run lasts all `rounds` rounds and the output is the input.
BspMachine EchoMachine(std::uint64_t p, std::uint64_t rounds, const ResourceLimits& limits = {});

}  // namespace mrcsim
