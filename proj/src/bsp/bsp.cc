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

#include "mrcsim/bsp/bsp.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>

namespace mrcsim {
namespace {

struct ProcessorSlot {
  std::vector<Message> outbox;
  std::uint64_t inbox_bytes = 0;
  std::uint64_t steps = 0;
  std::uint64_t peak_working = 0;
  std::uint64_t sent_bytes = 0;
  Flag flag = Flag::kNone;
  std::exception_ptr error;

  std::uint64_t space_charge() const { return inbox_bytes + peak_working + sent_bytes; }
};

std::uint64_t InboxBytes(const std::vector<Delivered>& inbox) {
  std::uint64_t total = 0;
  for (const auto& d : inbox) total += d.payload.size();
  return total;
}

}  // namespace

std::uint64_t PieceStart(std::uint64_t n, std::uint64_t p, std::uint64_t i) {
  const std::uint64_t q = n / p;
  const std::uint64_t extra = n % p;
  return (i - 1) * q + std::min(i - 1, extra) + 1;
}

std::string_view InputPiece(std::string_view x, std::uint64_t p, std::uint64_t i) {
  const std::uint64_t n = x.size();
  const std::uint64_t len = n / p + (i - 1 < n % p ? 1 : 0);
  return x.substr(PieceStart(n, p, i) - 1, len);
}

std::uint64_t PieceOwner(std::uint64_t j, std::uint64_t n, std::uint64_t p) {
  const std::uint64_t q = n / p;
  const std::uint64_t extra = n % p;
  const std::uint64_t long_span = extra * (q + 1);
  if (j <= long_span) return (j - 1) / (q + 1) + 1;
  return extra + (j - long_span - 1) / q + 1;
}

BspResult RunBsp(const BspMachine& machine, std::string_view x, const BspRunOptions& options) {
  const std::uint64_t n = x.size();
  const std::uint64_t p = machine.processors;
  if (!machine.behavior) throw ProgramError("BSP machine has no behavior");
  if (p == 0) throw ProgramError("BSP machine needs at least one processor");
  machine.limits.Validate();
  const std::uint64_t rounds = machine.rounds.At(n);
  if (rounds == 0) throw ProgramError("BSP machine has zero rounds");
  const ResourceLimits& limits = machine.limits;

  BspResult result;
  ResourceReport& report = result.report;
  auto record = [&](const ResourceViolation& v) {
    ++report.recorded_total;
    if (report.recorded.size() < ResourceReport::kMaxRecorded) report.recorded.push_back(v);
  };
  auto up_front = [&](const ResourceViolation& v) {
    if (limits.enforced()) {
      report.violation = v;
      report.verdict = result.verdict = Verdict::kResourceViolation;
      return true;
    }
    record(v);
    return false;
  };
  if (p > limits.KeysPerInvocation(n) &&
      up_front({Bound::kProcessors, 0, Phase::kReduce, 0, p, limits.KeysPerInvocation(n)})) {
    return result;
  }
  if (rounds > limits.RoundLimit(n) &&
      up_front({Bound::kRounds, 0, Phase::kReduce, 0, rounds, limits.RoundLimit(n)})) {
    return result;
  }

  std::vector<std::vector<Delivered>> inboxes(p);
  for (std::uint64_t i = 1; i <= p; ++i) {
    inboxes[i - 1].push_back({0, std::string(InputPiece(x, p, i))});
  }
  std::vector<std::string> scratch(p);
  std::vector<Message> last_sent;
  std::optional<Verdict> decided;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

  for (std::uint64_t r = 1; r <= rounds && !decided; ++r) {
    if (options.keep_trace) result.trace.push_back(inboxes);
    if (options.scrub_between_rounds) {
      for (auto& s : scratch) std::fill(s.begin(), s.end(), '\0');
    }
    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (options.schedule_seed) {
      std::mt19937_64 rng(*options.schedule_seed ^ (r * 0x9E3779B97F4A7C15ULL));
      std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<ProcessorSlot> slots(p);
    const auto total = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t k = 0; k < total; ++k) {
      const std::size_t i = order[static_cast<std::size_t>(k)];
      ProcessorSlot& slot = slots[i];
      try {
        ProcessorContext ctx(i + 1, r, n, p, &scratch[i]);
        machine.behavior->Compute(inboxes[i], ctx);
        slot.inbox_bytes = InboxBytes(inboxes[i]);
        slot.steps = ctx.steps();
        slot.peak_working = ctx.peak_working();
        slot.sent_bytes = ctx.sent_bytes();
        slot.flag = ctx.flag();
        slot.outbox = std::move(ctx.outbox());
      } catch (...) {
        slot.error = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      if (!slots[i].error) continue;
      try {
        std::rethrow_exception(slots[i].error);
      } catch (const std::exception& e) {
        throw BehaviorError("round " + std::to_string(r) + " processor " + std::to_string(i + 1) +
                            ": " + e.what());
      }
    }

    RoundMetrics m;
    m.round = r;
    m.reducer_invocations = p;
    std::vector<ResourceViolation> violations;
    const std::uint64_t space_limit = limits.SpaceBoundBytes(n);
    const std::uint64_t step_limit = limits.StepBudget(n);
    bool accepted = false;
    bool rejected = false;
    for (std::size_t i = 0; i < p; ++i) {
      const ProcessorSlot& s = slots[i];
      m.total_pairs += inboxes[i].size();
      m.output_pairs += s.outbox.size();
      m.max_group_size = std::max<std::uint64_t>(m.max_group_size, inboxes[i].size());
      m.max_reducer_input_bytes = std::max(m.max_reducer_input_bytes, s.inbox_bytes);
      m.max_working_space_bytes = std::max(m.max_working_space_bytes, s.peak_working);
      m.max_space_charge_bytes = std::max(m.max_space_charge_bytes, s.space_charge());
      m.max_steps_per_invocation = std::max(m.max_steps_per_invocation, s.steps);
      m.reducer_steps += s.steps;
      if (s.space_charge() > space_limit) {
        violations.push_back({Bound::kSpace, r, Phase::kReduce, i + 1, s.space_charge(), space_limit});
      }
      if (s.steps > step_limit) {
        violations.push_back({Bound::kTime, r, Phase::kReduce, i + 1, s.steps, step_limit});
      }
      accepted = accepted || s.flag == Flag::kAccept;
      rejected = rejected || s.flag == Flag::kReject;
    }
    report.rounds_executed = r;
    report.simulated_sequential_time =
        SatAdd(report.simulated_sequential_time,
               m.reducer_steps + ShuffleCharge(m.output_pairs) + SetupCharge(n, r));
    report.rounds.push_back(m);
    if (!violations.empty()) {
      if (limits.enforced()) {
        report.violation = violations.front();
        decided = Verdict::kResourceViolation;
        break;
      }
      for (const auto& v : violations) record(v);
    }

    std::vector<std::vector<Delivered>> next(p);
    last_sent.clear();
    for (std::size_t i = 0; i < p; ++i) {
      for (auto& msg : slots[i].outbox) {
        if (msg.dest < 1 || msg.dest > p) {
          throw BehaviorError("round " + std::to_string(r) + " processor " + std::to_string(i + 1) +
                              " sent to nonexistent processor " + std::to_string(msg.dest));
        }
        if (r == rounds) {
          last_sent.push_back(std::move(msg));
        } else {
          next[msg.dest - 1].push_back({msg.source, msg.payload});
          last_sent.push_back(std::move(msg));
        }
      }
    }
    inboxes = std::move(next);
    if (accepted) {
      decided = Verdict::kAccept;
    } else if (rejected) {
      decided = Verdict::kReject;
    }
  }
  if (!decided) decided = Verdict::kReject;
  report.verdict = result.verdict = *decided;
  result.output = std::move(last_sent);
  return result;
}

namespace {

class AcceptImmediately : public BspBehavior {
 public:
  void Compute(std::span<const Delivered>, ProcessorContext& ctx) const override {
    ctx.Step();
    if (ctx.processor() == 1) ctx.Accept();
  }
};

class PingPong : public BspBehavior {
 public:
  void Compute(std::span<const Delivered> inbox, ProcessorContext& ctx) const override {
    ctx.Step();
    const std::uint64_t partner = ctx.p() >= 2 ? 2 : 1;
    if (ctx.processor() == 1 && ctx.round() <= 2) ctx.Send(partner, "ping:" + Dec(ctx.round()));
    for (const auto& d : inbox) {
      if (d.source == 0 || !d.payload.starts_with("ping:")) continue;
      ctx.Step();
      std::string_view seq = std::string_view(d.payload).substr(5);
      ctx.Send(d.source, "pong:" + std::string(seq));
      if (seq == "2") ctx.Accept();
    }
  }
};

class Echo : public BspBehavior {
 public:
  void Compute(std::span<const Delivered> inbox, ProcessorContext& ctx) const override {
    std::string& buffer = ctx.scratch();
    for (const auto& d : inbox) {
      ctx.Step(d.payload.size() + 1);
      buffer.assign(d.payload);
      ctx.UseWorking(buffer.size());
      ctx.Send(ctx.processor(), buffer);
    }
  }
};

}  // namespace

BspMachine AcceptImmediatelyMachine(std::uint64_t p, const ResourceLimits& limits) {
  return {"accept-immediately", p, {0, 1}, std::make_shared<AcceptImmediately>(), limits};
}

BspMachine PingPongMachine(std::uint64_t p, const ResourceLimits& limits) {
  return {"ping-pong", p, {0, 3}, std::make_shared<PingPong>(), limits};
}

BspMachine EchoMachine(std::uint64_t p, std::uint64_t rounds, const ResourceLimits& limits) {
  return {"echo", p, {0, rounds}, std::make_shared<Echo>(), limits};
}

}  // namespace mrcsim
