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

#include "mrcsim/core/sequential.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string_view>
#include <tuple>

namespace mrcsim {
namespace {

struct Tagged {
  KeyValuePair pair;
  std::uint64_t origin = 0;
  std::uint64_t emission = 0;
};

void SortCanonical(std::vector<Tagged>& v) {
  std::sort(v.begin(), v.end(), [](const Tagged& a, const Tagged& b) {
    return std::tie(a.pair.key, a.origin, a.emission) <
           std::tie(b.pair.key, b.origin, b.emission);
  });
}

}  // namespace

std::uint64_t AccountingEnvelope(std::uint64_t n, std::uint64_t rounds, std::uint64_t beta,
                                 std::uint64_t constant) {
  std::uint64_t m = std::max<std::uint64_t>(n, 2);
  std::uint64_t per_round = SatAdd(SatPow(m, beta + 1), SatMul(SatMul(m, m), CeilLog2(m)));
  return SatMul(SatMul(constant, rounds), per_round);
}

SequentialResult SimulateSequential(const MrcProgram& program, const InputEncoding& input) {
  const std::uint64_t n = input.n;
  ValidateProgram(program, n);
  const ResourceLimits& limits = program.limits;
  const RoundBehavior& behavior = *program.behavior;
  const std::uint64_t rounds = program.rounds.At(n);

  SequentialResult result;
  SequentialAccounting& acc = result.accounting;
  acc.beta = limits.time_bound.exponent;

  auto exceeded = [&](Bound bound, std::uint64_t round, Phase phase, std::uint64_t index,
                      std::uint64_t measured, std::uint64_t limit) {
    acc.limits_respected = false;
    if (limits.enforced() && !result.violation) {
      result.violation = ResourceViolation{bound, round, phase, index, measured, limit};
    }
  };

  if (rounds > limits.RoundLimit(n)) {
    exceeded(Bound::kRounds, 0, Phase::kMap, 0, rounds, limits.RoundLimit(n));
  }

  // U_0 in canonical order: input position is the provenance.
  std::vector<Tagged> current;
  for (std::uint64_t i = 0; i < input.pairs.size(); ++i) current.push_back({input.pairs[i], i, 0});
  if (n == 0 && program.seed_empty_input && current.empty()) current.push_back({{"", ""}, 0, 0});
  SortCanonical(current);

  const bool use_flags = program.acceptance == Acceptance::kAcceptState;
  std::optional<Verdict> decided;
  if (result.violation) decided = Verdict::kResourceViolation;

  for (std::uint64_t r = 1; r <= rounds && !decided; ++r) {
    SequentialRound row;
    row.round = r;
    row.setup_charge = SetupCharge(n, r);

    std::vector<Tagged> emitted;
    for (std::uint64_t j = 0; j < current.size(); ++j) {
      const KeyValuePair& pair = current[j].pair;
      Invocation inv(Phase::kMap, r, n);
      try {
        behavior.Map(pair, inv);
      } catch (const std::exception& e) {
        throw BehaviorError("round " + std::to_string(r) + " map invocation " +
                            std::to_string(j) + ": " + e.what());
      }
      row.mapper_steps += inv.steps();
      std::set<std::string_view> keys;
      for (const auto& p : inv.output()) keys.insert(p.key);
      if (keys.size() > limits.KeysPerInvocation(n)) {
        exceeded(Bound::kKeysPerInvocation, r, Phase::kMap, j, keys.size(),
                 limits.KeysPerInvocation(n));
      }
      std::uint64_t space = pair.bytes() + inv.peak_working() + inv.emitted_bytes();
      if (space > limits.SpaceBoundBytes(n)) {
        exceeded(Bound::kSpace, r, Phase::kMap, j, space, limits.SpaceBoundBytes(n));
      }
      if (inv.steps() > limits.StepBudget(n)) {
        exceeded(Bound::kTime, r, Phase::kMap, j, inv.steps(), limits.StepBudget(n));
      }
      std::uint64_t e = 0;
      for (auto& p : inv.output()) emitted.push_back({std::move(p), j, e++});
    }

    SortCanonical(emitted);
    row.total_pairs = emitted.size();
    row.shuffle_charge = ShuffleCharge(emitted.size());

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < emitted.size();) {
      std::size_t k = i;
      while (k < emitted.size() && emitted[k].pair.key == emitted[i].pair.key) ++k;
      groups.emplace_back(i, k);
      i = k;
    }
    if (groups.size() > limits.KeysPerRound(n)) {
      exceeded(Bound::kKeysPerRound, r, Phase::kMap, 0, groups.size(), limits.KeysPerRound(n));
    }
    if (result.violation) {
      acc.rounds.push_back(row);
      decided = Verdict::kResourceViolation;
      break;
    }

    std::vector<Tagged> next;
    Flag flag = Flag::kNone;
    for (std::uint64_t g = 0; g < groups.size(); ++g) {
      std::vector<KeyValuePair> group;
      for (std::size_t i = groups[g].first; i < groups[g].second; ++i) group.push_back(emitted[i].pair);
      Invocation inv(Phase::kReduce, r, n);
      try {
        behavior.Reduce(group.front().key, group, inv);
      } catch (const std::exception& e) {
        throw BehaviorError("round " + std::to_string(r) + " reduce invocation " +
                            std::to_string(g) + ": " + e.what());
      }
      row.reducer_steps += inv.steps();
      std::uint64_t space = TotalBytes(group) + inv.peak_working() + inv.emitted_bytes();
      if (space > limits.SpaceBoundBytes(n)) {
        exceeded(Bound::kSpace, r, Phase::kReduce, g, space, limits.SpaceBoundBytes(n));
      }
      if (inv.steps() > limits.StepBudget(n)) {
        exceeded(Bound::kTime, r, Phase::kReduce, g, inv.steps(), limits.StepBudget(n));
      }
      if (inv.flag() == Flag::kAccept) flag = Flag::kAccept;
      if (inv.flag() == Flag::kReject && flag == Flag::kNone) flag = Flag::kReject;
      std::uint64_t e = 0;
      for (auto& p : inv.output()) next.push_back({std::move(p), g, e++});
    }
    acc.rounds.push_back(row);
    if (result.violation) {
      decided = Verdict::kResourceViolation;
      break;
    }
    SortCanonical(next);
    current = std::move(next);
    if (use_flags && flag == Flag::kAccept) {
      decided = Verdict::kAccept;
    } else if (use_flags && flag == Flag::kReject) {
      decided = Verdict::kReject;
    }
  }
  if (!acc.rounds.empty()) result.rounds_executed = acc.rounds.back().round;

  if (!decided) {
    decided = (program.acceptance == Acceptance::kEmptyFinalRound && current.empty())
                  ? Verdict::kAccept
                  : Verdict::kReject;
  }
  result.verdict = *decided;
  for (auto& t : current) result.output.push_back(std::move(t.pair));

  for (const auto& row : acc.rounds) {
    acc.mapper_steps += row.mapper_steps;
    acc.reducer_steps += row.reducer_steps;
    acc.shuffle_charge += row.shuffle_charge;
    acc.setup_charge += row.setup_charge;
  }
  acc.total = acc.mapper_steps + acc.reducer_steps + acc.shuffle_charge + acc.setup_charge;
  acc.envelope = AccountingEnvelope(n, std::max<std::uint64_t>(result.rounds_executed, 1),
                                    acc.beta, acc.envelope_constant);
  if (acc.limits_respected && acc.total > acc.envelope) {
    throw std::logic_error("sequential cost " + std::to_string(acc.total) +
                           " exceeds the envelope " + std::to_string(acc.envelope) +
                           " although every bound was respected");
  }
  return result;
}

}  // namespace mrcsim
