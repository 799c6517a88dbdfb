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
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/core/program.h"

namespace mrcsim {

using CountOracle = std::function<bool(std::uint64_t)>;

struct NamedOracle {
  std::string name;
  CountOracle holds;
};

// "even", "odd", "true", "false", "prime", "square".
NamedOracle OracleByName(std::string_view name);
std::vector<std::string> OracleNames();

// Decides { 1^n : oracle(n) } in R(n) = n + 3 rounds, so the round count
// itself carries the input length. Round 1 counts ones per block of
// ceil(sqrt(n)) positions (a '0' rejects), round 2 sums the counts into
// <*, n>, and round i >= 3 answers oracle(n) when n == i - 3, otherwise
// forwards the pair.
MrcProgram CompileUnary(NamedOracle oracle, const ResourceLimits& limits = {});

}  // namespace mrcsim
