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

#include "mrcsim/automata/tisp.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/rational.h"

namespace mrcsim {

// Cells per tape segment at input size n: max(1, ceil(n^eps)).
std::uint64_t SegmentCells(std::uint64_t n, Rational epsilon);

// One machine step per round. The tape is cut into segments of
// SegmentCells(n) cells, each held by the reducer whose key is its 1-based
// segment index ("S" + cells). A single head token ("T" + state + ":" +
// position) travels to the segment under the head; that reducer applies one
// transition. Segments beyond the input are created when the head first
// reaches them. R(n) = max(time budget, 1); halting raises the matching flag
// and running out of space raises reject.
MrcProgram CompileTispToMrc(const TispMachine& machine, Rational epsilon = {1, 2},
                            const ResourceLimits& limits = {});

}  // namespace mrcsim
