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

#include "mrcsim/core/engine.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <parallel/algorithm>
#include <random>
#include <string_view>

namespace mrcsim {
namespace {

bool KeyLess(const KeyValuePair& a, const KeyValuePair& b) { return a.key < b.key; }

std::vector<std::size_t> ScheduleOrder(std::size_t count, const RunOptions& options,
                                       std::uint64_t salt) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.schedule_seed) {
    std::mt19937_64 rng(*options.schedule_seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

struct Slot {
  std::vector<KeyValuePair> out;
  std::uint64_t input_bytes = 0;
  std::uint64_t steps = 0;
  std::uint64_t peak_working = 0;
  std::uint64_t emitted_bytes = 0;
  std::uint64_t distinct_keys = 0;
  Flag flag = Flag::kNone;
  std::exception_ptr error;

  std::uint64_t space_charge() const { return input_bytes + peak_working + emitted_bytes; }
};

std::uint64_t DistinctKeys(const std::vector<KeyValuePair>& out) {
  if (out.size() < 2) return out.size();
  std::vector<std::string_view> keys;
  keys.reserve(out.size());
  for (const auto& p : out) keys.emplace_back(p.key);
  std::sort(keys.begin(), keys.end());
  return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

void Harvest(Invocation& inv, Slot& slot) {
  slot.steps = inv.steps();
  slot.peak_working = inv.peak_working();
  slot.emitted_bytes = inv.emitted_bytes();
  slot.flag = inv.flag();
  slot.out = std::move(inv.output());
}

template <typename Body>
void ParallelFor(std::size_t count, const RunOptions& options, std::uint64_t salt, Body body) {
  std::vector<std::size_t> order = ScheduleOrder(count, options, salt);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t k = 0; k < total; ++k) {
    body(order[static_cast<std::size_t>(k)]);
  }
}

void RethrowFirst(const std::vector<Slot>& slots, Phase phase, std::uint64_t round) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].error) continue;
    try {
      std::rethrow_exception(slots[i].error);
    } catch (const BehaviorError& e) {
      throw BehaviorError("round " + std::to_string(round) + " " + ToString(phase) +
                          " invocation " + std::to_string(i) + ": " + e.what());
    } catch (const std::exception& e) {
      throw BehaviorError("round " + std::to_string(round) + " " + ToString(phase) +
                          " invocation " + std::to_string(i) + " failed: " + e.what());
    }
  }
}

void CheckInvocation(const Slot& slot, const ResourceLimits& limits, std::uint64_t n,
                     std::uint64_t round, Phase phase, std::uint64_t index,
                     std::vector<ResourceViolation>& violations) {
  if (phase == Phase::kMap) {
    const std::uint64_t key_limit = limits.KeysPerInvocation(n);
    if (slot.distinct_keys > key_limit) {
      violations.push_back(
          {Bound::kKeysPerInvocation, round, phase, index, slot.distinct_keys, key_limit});
    }
  }
  const std::uint64_t space_limit = limits.SpaceBoundBytes(n);
  if (slot.space_charge() > space_limit) {
    violations.push_back({Bound::kSpace, round, phase, index, slot.space_charge(), space_limit});
  }
  const std::uint64_t step_limit = limits.StepBudget(n);
  if (slot.steps > step_limit) {
    violations.push_back({Bound::kTime, round, phase, index, slot.steps, step_limit});
  }
}

// Concatenates slot outputs in slot order, then stable-sorts by key so the
// result is ordered by (key, slot, emission).
std::vector<KeyValuePair> MergeCanonical(std::vector<Slot>& slots) {
  std::size_t total = 0;
  for (const auto& s : slots) total += s.out.size();
  std::vector<KeyValuePair> merged;
  merged.reserve(total);
  for (auto& s : slots) {
    std::move(s.out.begin(), s.out.end(), std::back_inserter(merged));
    s.out.clear();
    s.out.shrink_to_fit();
  }
  __gnu_parallel::stable_sort(merged.begin(), merged.end(), KeyLess);
  return merged;
}

}  // namespace

std::vector<KeyGroup> ShuffleAndSort(std::span<const KeyValuePair> pairs) {
  std::vector<std::size_t> idx(pairs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return pairs[a].key < pairs[b].key; });
  std::vector<KeyGroup> groups;
  for (std::size_t i : idx) {
    if (groups.empty() || groups.back().key != pairs[i].key) {
      groups.push_back({pairs[i].key, {}});
    }
    groups.back().values.push_back(pairs[i].value);
  }
  return groups;
}

RoundState InitialState(const InputEncoding& input) {
  RoundState state;
  state.pairs = input.pairs;
  std::stable_sort(state.pairs.begin(), state.pairs.end(), KeyLess);
  return state;
}

RoundOutcome RunRound(const RoundState& state, const MrcProgram& program, std::uint64_t n,
                      const RunOptions& options) {
  const std::uint64_t round = state.round_index + 1;
  if (round > program.rounds.At(n)) {
    throw ProgramError("round " + std::to_string(round) + " exceeds the program's " +
                       std::to_string(program.rounds.At(n)) + " rounds");
  }
  const RoundBehavior& behavior = *program.behavior;
  const ResourceLimits& limits = program.limits;
  RoundOutcome outcome;
  RoundMetrics& m = outcome.metrics;
  m.round = round;

  // Map phase.
  std::vector<Slot> map_slots(state.pairs.size());
  ParallelFor(map_slots.size(), options, round * 2, [&](std::size_t j) {
    Slot& slot = map_slots[j];
    try {
      const KeyValuePair& pair = state.pairs[j];
      Invocation inv(Phase::kMap, round, n);
      behavior.Map(pair, inv);
      slot.input_bytes = pair.bytes();
      Harvest(inv, slot);
      slot.distinct_keys = DistinctKeys(slot.out);
    } catch (...) {
      slot.error = std::current_exception();
    }
  });
  RethrowFirst(map_slots, Phase::kMap, round);

  m.mapper_invocations = map_slots.size();
  for (std::size_t j = 0; j < map_slots.size(); ++j) {
    const Slot& s = map_slots[j];
    m.max_keys_per_mapper = std::max(m.max_keys_per_mapper, s.distinct_keys);
    m.max_working_space_bytes = std::max(m.max_working_space_bytes, s.peak_working);
    m.max_space_charge_bytes = std::max(m.max_space_charge_bytes, s.space_charge());
    m.max_steps_per_invocation = std::max(m.max_steps_per_invocation, s.steps);
    m.mapper_steps += s.steps;
    CheckInvocation(s, limits, n, round, Phase::kMap, j, outcome.violations);
  }

  // Shuffle and sort. Not charged to any invocation.
  std::vector<KeyValuePair> shuffled = MergeCanonical(map_slots);
  m.total_pairs = shuffled.size();
  m.pair_count_flagged = m.total_pairs > limits.PairFlagThreshold(n) ? 1 : 0;

  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < shuffled.size();) {
    std::size_t j = i + 1;
    while (j < shuffled.size() && shuffled[j].key == shuffled[i].key) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  m.total_distinct_keys = groups.size();
  if (m.total_distinct_keys > limits.KeysPerRound(n)) {
    outcome.violations.push_back({Bound::kKeysPerRound, round, Phase::kMap, 0,
                                  m.total_distinct_keys, limits.KeysPerRound(n)});
  }
  if (limits.enforced() && !outcome.violations.empty()) {
    outcome.next.round_index = round;
    return outcome;
  }

  // Reduce phase.
  std::vector<Slot> reduce_slots(groups.size());
  ParallelFor(reduce_slots.size(), options, round * 2 + 1, [&](std::size_t g) {
    Slot& slot = reduce_slots[g];
    try {
      auto [begin, end] = groups[g];
      std::span<const KeyValuePair> group(shuffled.data() + begin, end - begin);
      Invocation inv(Phase::kReduce, round, n);
      behavior.Reduce(group.front().key, group, inv);
      slot.input_bytes = TotalBytes(group);
      Harvest(inv, slot);
    } catch (...) {
      slot.error = std::current_exception();
    }
  });
  RethrowFirst(reduce_slots, Phase::kReduce, round);

  m.reducer_invocations = reduce_slots.size();
  bool accepted = false;
  bool rejected = false;
  for (std::size_t g = 0; g < reduce_slots.size(); ++g) {
    const Slot& s = reduce_slots[g];
    m.max_group_size = std::max<std::uint64_t>(m.max_group_size, groups[g].second - groups[g].first);
    m.max_reducer_input_bytes = std::max(m.max_reducer_input_bytes, s.input_bytes);
    m.max_working_space_bytes = std::max(m.max_working_space_bytes, s.peak_working);
    m.max_space_charge_bytes = std::max(m.max_space_charge_bytes, s.space_charge());
    m.max_steps_per_invocation = std::max(m.max_steps_per_invocation, s.steps);
    m.reducer_steps += s.steps;
    accepted = accepted || s.flag == Flag::kAccept;
    rejected = rejected || s.flag == Flag::kReject;
    CheckInvocation(s, limits, n, round, Phase::kReduce, g, outcome.violations);
  }
  outcome.flag = accepted ? Flag::kAccept : (rejected ? Flag::kReject : Flag::kNone);

  outcome.next.pairs = MergeCanonical(reduce_slots);
  outcome.next.round_index = round;
  m.output_pairs = outcome.next.pairs.size();
  return outcome;
}

RunResult Run(const MrcProgram& program, const InputEncoding& input, const RunOptions& options) {
  const std::uint64_t n = input.n;
  ValidateProgram(program, n);
  RunResult result;
  ResourceReport& report = result.report;
  const ResourceLimits& limits = program.limits;
  const std::uint64_t rounds = program.rounds.At(n);

  auto record = [&](const ResourceViolation& v) {
    ++report.recorded_total;
    if (report.recorded.size() < ResourceReport::kMaxRecorded) report.recorded.push_back(v);
  };

  if (rounds > limits.RoundLimit(n)) {
    ResourceViolation v{Bound::kRounds, 0, Phase::kMap, 0, rounds, limits.RoundLimit(n)};
    if (limits.enforced()) {
      report.violation = v;
      report.verdict = result.verdict = Verdict::kResourceViolation;
      return result;
    }
    record(v);
  }

  RoundState state = InitialState(input);
  if (n == 0 && program.seed_empty_input && state.pairs.empty()) {
    state.pairs.push_back({"", ""});
  }
  const bool use_flags = program.acceptance == Acceptance::kAcceptState;
  std::optional<Verdict> decided;

  for (std::uint64_t r = 1; r <= rounds && !decided; ++r) {
    RoundOutcome outcome = RunRound(state, program, n, options);
    report.rounds_executed = r;
    report.simulated_sequential_time =
        SatAdd(report.simulated_sequential_time,
               outcome.metrics.mapper_steps + outcome.metrics.reducer_steps +
                   ShuffleCharge(outcome.metrics.total_pairs) + SetupCharge(n, r));
    report.rounds.push_back(outcome.metrics);
    if (!outcome.violations.empty()) {
      if (limits.enforced()) {
        report.violation = outcome.violations.front();
        decided = Verdict::kResourceViolation;
        break;
      }
      for (const auto& v : outcome.violations) record(v);
    }
    state = std::move(outcome.next);
    if (options.keep_trace) result.trace.push_back(state);
    if (use_flags && outcome.flag == Flag::kAccept) decided = Verdict::kAccept;
    if (use_flags && outcome.flag == Flag::kReject) decided = Verdict::kReject;
  }

  if (!decided) {
    if (program.acceptance == Acceptance::kEmptyFinalRound) {
      decided = state.pairs.empty() ? Verdict::kAccept : Verdict::kReject;
    } else {
      decided = Verdict::kReject;
    }
  }
  report.verdict = result.verdict = *decided;
  result.output = std::move(state.pairs);
  return result;
}

}  // namespace mrcsim
