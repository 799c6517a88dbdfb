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

#include "mrcsim/core/program.h"

#include <bit>

namespace mrcsim {

void ValidateProgram(const MrcProgram& program, std::uint64_t n) {
  if (!program.behavior) throw ProgramError("program '" + program.name + "' has no behavior");
  try {
    program.limits.Validate();
  } catch (const std::invalid_argument& e) {
    throw ProgramError(e.what());
  }
  std::uint64_t rounds = program.rounds.At(n);
  if (rounds == 0) throw ProgramError("program '" + program.name + "' has zero rounds");
  std::uint64_t bits_needed = static_cast<std::uint64_t>(std::bit_width(rounds));
  std::uint64_t bits_available = SatMul(program.limits.SpaceBoundBytes(n), 8);
  if (bits_needed > bits_available) {
    throw ProgramError("round count " + std::to_string(rounds) +
                       " cannot be stored in the per-processor space budget of " +
                       std::to_string(bits_available) + " bits");
  }
}

}  // namespace mrcsim
