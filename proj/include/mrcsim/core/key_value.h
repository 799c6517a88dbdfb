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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mrcsim {

// The atomic datum of an MRC round. Keys and values are arbitrary byte
// strings; both count toward the space charge of whoever holds the pair.
struct KeyValuePair {
  std::string key;
  std::string value;

  std::uint64_t bytes() const { return key.size() + value.size(); }

  friend bool operator==(const KeyValuePair&, const KeyValuePair&) = default;
  friend auto operator<=>(const KeyValuePair&, const KeyValuePair&) = default;
};

// The list <i, x_i> for i = 1..n, in index order.
struct InputEncoding {
  std::vector<KeyValuePair> pairs;
  std::uint64_t n = 0;
};

InputEncoding EncodeInput(std::string_view x);

// Inverse of EncodeInput. Accepts the pairs in any order; throws
// std::invalid_argument on gaps, duplicates, or multi-symbol values.
std::string DecodeInput(std::span<const KeyValuePair> pairs);

// <i, token_i> for whitespace-separated tokens; n is the total byte size of
// the pairs, the general MRC input size.
InputEncoding EncodeTokens(std::string_view text);

std::uint64_t TotalBytes(std::span<const KeyValuePair> pairs);

// Decimal helpers shared by the built-in behaviors.
std::string Dec(std::uint64_t v);
std::uint64_t ParseDec(std::string_view s);

}  // namespace mrcsim
