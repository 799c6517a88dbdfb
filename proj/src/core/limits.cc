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

#include "mrcsim/core/limits.h"

#include <algorithm>
#include <stdexcept>

namespace mrcsim {
namespace {

std::uint64_t Digits(std::uint64_t v) {
  std::uint64_t d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

}  // namespace

std::uint64_t PolyBound::At(std::uint64_t n) const {
  return SatMul(coefficient, SatPow(std::max<std::uint64_t>(n, 1), exponent));
}

std::uint64_t RecordBytes(std::uint64_t n) { return 2 * Digits(std::max<std::uint64_t>(n, 1)) + 2; }

void ResourceLimits::Validate() const {
  if (!space_exponent.InOpenUnitInterval()) {
    throw std::invalid_argument("space exponent c must satisfy 0 < c < 1, got " +
                                space_exponent.ToString());
  }
  if (!space_constant.IsPositive() || !time_constant.IsPositive() ||
      !keys_constant.IsPositive() || !round_constant.IsPositive()) {
    throw std::invalid_argument("resource constants must be positive");
  }
  if (time_bound.coefficient == 0 || round_bound.coefficient == 0) {
    throw std::invalid_argument("bound coefficients must be positive");
  }
}

std::uint64_t ResourceLimits::SpaceBoundBytes(std::uint64_t n) const {
  std::uint64_t m = std::max<std::uint64_t>(n, 1);
  return CeilMul(space_constant, SatMul(CeilPow(m, space_exponent), RecordBytes(n)));
}

std::uint64_t ResourceLimits::StepBudget(std::uint64_t n) const {
  return CeilMul(time_constant, time_bound.At(n));
}

std::uint64_t ResourceLimits::KeysPerInvocation(std::uint64_t n) const {
  return CeilMul(keys_constant, CeilPow(std::max<std::uint64_t>(n, 1), space_exponent));
}

std::uint64_t ResourceLimits::KeysPerRound(std::uint64_t n) const {
  std::uint64_t root = CeilPow(std::max<std::uint64_t>(n, 1), space_exponent);
  return CeilMul(keys_constant, SatMul(root, root));
}

std::uint64_t ResourceLimits::PairFlagThreshold(std::uint64_t n) const {
  std::uint64_t m = std::max<std::uint64_t>(n, 1);
  return CeilMul(keys_constant, SatMul(m, m));
}

std::uint64_t ResourceLimits::RoundLimit(std::uint64_t n) const {
  return CeilMul(round_constant, round_bound.At(n));
}

}  // namespace mrcsim
