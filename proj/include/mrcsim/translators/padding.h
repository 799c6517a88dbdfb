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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/automata/dfa.h"
#include "mrcsim/core/program.h"

namespace mrcsim {

class MalformedPadding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// x followed by |x|^2 zeros.
std::string PadString(std::string_view x);

// Inverse of PadString; throws MalformedPadding when |y| is not of the form
// n + n^2 or the suffix holds anything but zeros.
std::string UnpadString(std::string_view y);

// n with n + n^2 == padded_length, if any.
std::optional<std::uint64_t> PaddedPrefixLength(std::uint64_t padded_length);

using Decider = std::function<bool(std::string_view)>;

struct NamedDecider {
  std::string name;
  Decider decide;
};

// Built-in deciders over {0,1}: "palindrome", "majority" (strictly more ones
// than zeros), "even-ones", "all", "none".
NamedDecider DeciderByName(std::string_view name);
std::vector<std::string> DeciderNames();
NamedDecider DfaDecider(Dfa dfa);

// One round deciding pad(L) for the base language L. Every mapper learns
// the prefix length n from N = n + n^2; prefix symbols travel to key "1",
// non-zero padding symbols send a marker, and the reducer on key "1" rejects
// on any marker or runs the base decider on the reassembled prefix.
MrcProgram CompilePaddedDecider(NamedDecider base, const ResourceLimits& limits = {});

}  // namespace mrcsim
