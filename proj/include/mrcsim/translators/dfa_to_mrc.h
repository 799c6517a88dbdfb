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

#include "mrcsim/automata/dfa.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/rational.h"

namespace mrcsim {

struct DfaCompileOptions {
  // Mutation hook for the verify harness: compose the block tables in
  // reverse order. Never set outside mutation testing.
  bool mutate_reverse_composition = false;
};

// Two rounds. Round 1 routes <i, x_i> to block ceil(i / b) and each block's
// reducer emits the block's state-to-state table. Round 2 gathers all K
// tables on key "1", composes them from the start state, and accepts iff the
// resulting state is accepting.
MrcProgram CompileDfaToMrc(const Dfa& dfa, Rational epsilon, const ResourceLimits& limits = {},
                           const DfaCompileOptions& options = {});

std::string SerializeTable(const TransitionTable& table);
TransitionTable ParseTable(std::string_view text);

}  // namespace mrcsim
