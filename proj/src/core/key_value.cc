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

#include "mrcsim/core/key_value.h"

#include <charconv>
#include <stdexcept>

namespace mrcsim {

InputEncoding EncodeInput(std::string_view x) {
  InputEncoding enc;
  enc.n = x.size();
  enc.pairs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    enc.pairs.push_back({Dec(i + 1), std::string(1, x[i])});
  }
  return enc;
}

std::string DecodeInput(std::span<const KeyValuePair> pairs) {
  std::string x(pairs.size(), '\0');
  std::vector<bool> seen(pairs.size(), false);
  for (const auto& p : pairs) {
    std::uint64_t i = ParseDec(p.key);
    if (i < 1 || i > pairs.size() || seen[i - 1]) {
      throw std::invalid_argument("input index '" + p.key + "' is out of range or repeated");
    }
    if (p.value.size() != 1) {
      throw std::invalid_argument("input value at index " + p.key + " is not a single symbol");
    }
    seen[i - 1] = true;
    x[i - 1] = p.value[0];
  }
  return x;
}

InputEncoding EncodeTokens(std::string_view text) {
  InputEncoding enc;
  std::size_t i = 0;
  std::uint64_t index = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) {
      enc.pairs.push_back({Dec(++index), std::string(text.substr(start, i - start))});
    }
  }
  enc.n = TotalBytes(enc.pairs);
  return enc;
}

std::uint64_t TotalBytes(std::span<const KeyValuePair> pairs) {
  std::uint64_t total = 0;
  for (const auto& p : pairs) total += p.bytes();
  return total;
}

std::string Dec(std::uint64_t v) { return std::to_string(v); }

std::uint64_t ParseDec(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a decimal integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace mrcsim
