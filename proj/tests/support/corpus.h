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
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mrcsim/automata/tisp.h"
#include "mrcsim/automata/tm.h"
#include "mrcsim/bsp/bsp.h"
#include "mrcsim/core/key_value.h"
#include "mrcsim/core/program.h"

namespace mrcsim::testing {

using InputGenerator = std::function<std::string(std::mt19937_64&, std::uint64_t max_n)>;

struct CorpusProgram {
  std::string name;
  MrcProgram program;
  InputGenerator input;
  bool token_input = false;

  InputEncoding Encode(const std::string& x) const;
};

struct CorpusMachine {
  std::string name;
  BspMachine machine;
};

// Every built-in program family with a representative configuration.
std::vector<CorpusProgram> ProgramCorpus();
std::vector<CorpusMachine> BspCorpus();

// Scan machines with one work cell over {0,1}: bits 0-3 of `index` give the
// cell update for (symbol, cell), bits 4-5 the verdict on '>' for each cell
// value. 64 machines in all.
Tm ScanMachine(unsigned index);
// Direct fold over the input, independent of the TM simulator.
bool ScanMachineAccepts(unsigned index, const std::string& x);

// Flips every input bit left to right, accepts on the first blank.
TispMachine FlipMachine(std::uint64_t time_budget = 1000, std::uint64_t space_budget = 1000);

// Every string over {0,1} of length at most max_len.
std::vector<std::string> AllBinaryStrings(std::size_t max_len);

}  // namespace mrcsim::testing
