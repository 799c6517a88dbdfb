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
#include <string>

#include "mrcsim/core/rational.h"

namespace mrcsim {

enum class Enforcement { kRecordOnly, kEnforce };

// coefficient * max(n, 1)^exponent, saturating.
struct PolyBound {
  std::uint64_t coefficient = 1;
  std::uint64_t exponent = 1;

  std::uint64_t At(std::uint64_t n) const;
};

// Bytes of one "pair record" at input size n: room for an index key and an
// index-plus-symbol value. Space bounds are O(n^c) records of this width.
std::uint64_t RecordBytes(std::uint64_t n);

// Concrete constants for the asymptotic bounds of the uniform model. Every
// bound is evaluated at max(n, 1) so that n = 0 inputs get a non-empty budget.
struct ResourceLimits {
  Rational space_exponent{1, 2};
  Rational space_constant{4, 1};
  PolyBound time_bound{1, 1};
  Rational time_constant{4, 1};
  Rational keys_constant{4, 1};
  PolyBound round_bound{1, 1};
  Rational round_constant{4, 1};
  Enforcement enforcement = Enforcement::kRecordOnly;

  // Throws std::invalid_argument when c is outside (0, 1) or a constant is 0.
  void Validate() const;

  std::uint64_t SpaceBoundBytes(std::uint64_t n) const;
  std::uint64_t StepBudget(std::uint64_t n) const;
  std::uint64_t KeysPerInvocation(std::uint64_t n) const;
  std::uint64_t KeysPerRound(std::uint64_t n) const;
  // Total pairs per round above this are flagged, never enforced.
  std::uint64_t PairFlagThreshold(std::uint64_t n) const;
  std::uint64_t RoundLimit(std::uint64_t n) const;

  bool enforced() const { return enforcement == Enforcement::kEnforce; }
};

}  // namespace mrcsim
