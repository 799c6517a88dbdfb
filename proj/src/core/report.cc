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

#include "mrcsim/core/report.h"

#include <bit>

namespace mrcsim {

const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kResourceViolation: return "resource-violation";
  }
  return "?";
}

const char* ToString(Bound b) {
  switch (b) {
    case Bound::kSpace: return "space";
    case Bound::kTime: return "time";
    case Bound::kKeysPerInvocation: return "keys-per-invocation";
    case Bound::kKeysPerRound: return "keys-per-round";
    case Bound::kRounds: return "rounds";
    case Bound::kProcessors: return "processors";
  }
  return "?";
}

const char* ToString(Phase p) { return p == Phase::kMap ? "map" : "reduce"; }

std::string ResourceViolation::Describe() const {
  return std::string(ToString(bound)) + " bound exceeded in round " + std::to_string(round) +
         " (" + ToString(phase) + " processor " + std::to_string(processor) + "): " +
         std::to_string(measured) + " > " + std::to_string(limit);
}

std::uint64_t ShuffleCharge(std::uint64_t total_pairs) {
  return SatMul(total_pairs, CeilLog2(total_pairs + 1));
}

std::uint64_t SetupCharge(std::uint64_t n, std::uint64_t round) {
  return std::bit_width(n) + std::bit_width(round) + 1;
}

}  // namespace mrcsim
