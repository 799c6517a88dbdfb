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
#include <random>
#include <string>

#include "mrcsim/automata/dfa.h"
#include "mrcsim/automata/tisp.h"
#include "mrcsim/automata/tm.h"

namespace mrcsim {

// Seeded generators for property tests and the verify command.

std::string RandomString(std::mt19937_64& rng, std::size_t length, std::string_view alphabet = "01");

// Between 1 and max_states states, uniformly random transitions and
// accepting set.
Dfa RandomDfa(std::mt19937_64& rng, std::size_t max_states, std::string alphabet = "01");

struct RandomTmOptions {
  std::size_t working_states = 2;  // plus accept and reject
  std::size_t work_space = 1;
  std::size_t work_alphabet_size = 2;
  double halt_probability = 0.15;
  double stay_probability = 0.1;
};

// Machines over input alphabet {0,1}. State 0 is initial, the last two are
// accept and reject.
Tm RandomTm(std::mt19937_64& rng, const RandomTmOptions& options);

struct RandomTispOptions {
  std::size_t working_states = 3;
  double halt_probability = 0.1;
  std::uint64_t time_budget = 64;
  std::uint64_t space_budget = 32;
};

// Single-tape machines over {0,1} with blank '_' whose initial state is not
// halting.
TispMachine RandomTisp(std::mt19937_64& rng, const RandomTispOptions& options);

}  // namespace mrcsim
