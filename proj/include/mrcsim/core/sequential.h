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
#include <vector>

#include "mrcsim/core/key_value.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/report.h"

namespace mrcsim {

struct SequentialRound {
  std::uint64_t round = 0;
  std::uint64_t mapper_steps = 0;
  std::uint64_t reducer_steps = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t shuffle_charge = 0;  // total_pairs * ceil(log2(total_pairs + 1))
  std::uint64_t setup_charge = 0;    // bookkeeping for m, r and n

  std::uint64_t total() const { return mapper_steps + reducer_steps + shuffle_charge + setup_charge; }
};

// Step-level cost of running an MRC program on one sequential machine.
struct SequentialAccounting {
  std::vector<SequentialRound> rounds;
  std::uint64_t mapper_steps = 0;
  std::uint64_t reducer_steps = 0;
  std::uint64_t shuffle_charge = 0;
  std::uint64_t setup_charge = 0;
  std::uint64_t total = 0;

  std::uint64_t beta = 1;
  std::uint64_t envelope_constant = 8;
  // C * R * (m^(beta+1) + m^2 * ceil(log2 m)) with m = max(n, 2).
  std::uint64_t envelope = 0;
  bool limits_respected = true;

  double ratio() const {
    return envelope == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(envelope);
  }
};

std::uint64_t AccountingEnvelope(std::uint64_t n, std::uint64_t rounds, std::uint64_t beta,
                                 std::uint64_t constant = 8);

struct SequentialResult {
  Verdict verdict = Verdict::kReject;
  std::vector<KeyValuePair> output;
  std::uint64_t rounds_executed = 0;
  SequentialAccounting accounting;
  std::optional<ResourceViolation> violation;
};

// Single-threaded reference for Run: mappers in sequence, one explicit sort
// of (key, origin, emission) tuples, reducers in sequence. Applies the same
// limits and acceptance convention. When the run stayed within its limits the
// accounting total is checked against the envelope and std::logic_error is
// thrown if it falls outside.
SequentialResult SimulateSequential(const MrcProgram& program, const InputEncoding& input);

}  // namespace mrcsim
