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

#include "mrcsim/core/program.h"

namespace mrcsim {

// One round; the reducers on the input keys accept.
MrcProgram AlwaysAcceptProgram(const ResourceLimits& limits = {});

// `rounds` rounds of identity mappers and reducers under the empty-final-round
// convention, so it accepts exactly the empty input.
MrcProgram IdentityProgram(std::uint64_t rounds, const ResourceLimits& limits = {});

// One round whose first mapper emits n distinct keys, overrunning the
// per-mapper key bound for every n above the bound.
MrcProgram FanoutProgram(const ResourceLimits& limits = {});

}  // namespace mrcsim
