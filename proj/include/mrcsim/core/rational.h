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
#include <string_view>

namespace mrcsim {

// Exact non-negative rational used for exponents and bound constants.
// Written as "num/den" (or a bare integer) in specs and on the command line.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Parse(std::string_view text);

  std::string ToString() const;
  double ToDouble() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool InOpenUnitInterval() const { return num > 0 && num < den; }
  bool IsPositive() const { return num > 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Smallest integer b with b >= n^e, computed without floating point drift
// for the magnitudes this project uses. CeilPow(0, e) == 0 for e > 0.
std::uint64_t CeilPow(std::uint64_t n, Rational e);

// ceil(r * x), saturating at UINT64_MAX.
std::uint64_t CeilMul(Rational r, std::uint64_t x);

// Saturating helpers.
std::uint64_t SatMul(std::uint64_t a, std::uint64_t b);
std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b);
std::uint64_t SatPow(std::uint64_t base, std::uint64_t exp);

// ceil(log2(x)) with CeilLog2(0) == CeilLog2(1) == 0.
std::uint64_t CeilLog2(std::uint64_t x);

}  // namespace mrcsim
