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
#include <stdexcept>

#include "mrcsim/automata/tm.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/rational.h"

namespace mrcsim {

// The K boundary tables of a machine do not fit in one reducer's budget.
class InfeasibleSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bytes the collecting reducer needs at input size n: K(n) serialized
// boundary tables of the stay-free machine.
std::uint64_t CollectorBytes(const Tm& tm, Rational epsilon, std::uint64_t n);

// Two rounds. Round 1 reducers each compute the boundary table of their
// block; round 2 gathers the tables on key "1" and chains them from the
// initial configuration. Input-head stays are eliminated first. With
// `target_n`, throws InfeasibleSpace when the collector would exceed the
// space bound at that size.
MrcProgram CompileSublogTmToMrc(const Tm& tm, Rational epsilon, const ResourceLimits& limits = {},
                                std::optional<std::uint64_t> target_n = std::nullopt);

}  // namespace mrcsim
