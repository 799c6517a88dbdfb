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

#include "mrcsim/core/rational.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mrcsim {
namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::int64_t ParseInt(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

// Compares b^q against n^p exactly when neither side saturates 128 bits.
// Returns -1, 0, 1, or 2 when the comparison is not decidable exactly.
int ComparePowers(std::uint64_t b, std::int64_t q, std::uint64_t n, std::int64_t p) {
  using u128 = unsigned __int128;
  const u128 cap = ~static_cast<u128>(0);
  auto pow = [&](std::uint64_t base, std::int64_t e, bool& sat) {
    u128 r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
      if (base != 0 && r > cap / base) {
        sat = true;
        return cap;
      }
      r *= base;
    }
    return r;
  };
  bool sat_l = false;
  bool sat_r = false;
  u128 lhs = pow(b, q, sat_l);
  u128 rhs = pow(n, p, sat_r);
  if (sat_l || sat_r) return 2;
  if (lhs < rhs) return -1;
  return lhs == rhs ? 0 : 1;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = ParseInt(text, text);
    r.den = 1;
  } else {
    r.num = ParseInt(text.substr(0, slash), text);
    r.den = ParseInt(text.substr(slash + 1), text);
  }
  if (r.den <= 0 || r.num < 0) {
    throw std::invalid_argument("rational '" + std::string(text) +
                                "' must be non-negative with a positive denominator");
  }
  std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t CeilPow(std::uint64_t n, Rational e) {
  if (e.num == 0) return 1;
  if (n <= 1) return n;
  long double approx = std::pow(static_cast<long double>(n), e.ToDouble());
  if (approx >= static_cast<long double>(kMax)) return kMax;
  auto b = static_cast<std::uint64_t>(std::ceil(approx));
  if (b == 0) b = 1;
  // Nudge the float estimate onto the exact boundary.
  for (int guard = 0; guard < 8; ++guard) {
    int below = ComparePowers(b - 1, e.den, n, e.num);
    if (below == 2) break;
    if (below >= 0) {
      --b;
      continue;
    }
    int here = ComparePowers(b, e.den, n, e.num);
    if (here == 2 || here >= 0) break;
    ++b;
  }
  return b;
}

std::uint64_t CeilMul(Rational r, std::uint64_t x) {
  using u128 = unsigned __int128;
  u128 prod = static_cast<u128>(r.num) * x;
  u128 q = (prod + static_cast<u128>(r.den) - 1) / static_cast<u128>(r.den);
  return q > kMax ? kMax : static_cast<std::uint64_t>(q);
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return b > kMax - a ? kMax : a + b;
}

std::uint64_t SatPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = SatMul(r, base);
    if (r == kMax) break;
  }
  return r;
}

std::uint64_t CeilLog2(std::uint64_t x) {
  std::uint64_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

}  // namespace mrcsim
