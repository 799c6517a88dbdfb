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

#include "mrcsim/translators/padding.h"

#include <algorithm>
#include <cmath>

namespace mrcsim {

std::optional<std::uint64_t> PaddedPrefixLength(std::uint64_t padded_length) {
  auto n = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(padded_length)));
  while (n > 0 && SatAdd(n, SatMul(n, n)) > padded_length) --n;
  while (SatAdd(n + 1, SatMul(n + 1, n + 1)) <= padded_length) ++n;
  if (n + n * n != padded_length) return std::nullopt;
  return n;
}

std::string PadString(std::string_view x) {
  std::string y(x);
  y.append(x.size() * x.size(), '0');
  return y;
}

std::string UnpadString(std::string_view y) {
  auto n = PaddedPrefixLength(y.size());
  if (!n) {
    throw MalformedPadding("length " + std::to_string(y.size()) + " is not n + n^2");
  }
  auto suffix = y.substr(*n);
  if (suffix.find_first_not_of('0') != std::string_view::npos) {
    throw MalformedPadding("padding holds a non-zero symbol");
  }
  return std::string(y.substr(0, *n));
}

namespace {

bool Palindrome(std::string_view x) { return std::equal(x.begin(), x.begin() + x.size() / 2, x.rbegin()); }

bool Majority(std::string_view x) {
  auto ones = std::count(x.begin(), x.end(), '1');
  return static_cast<std::size_t>(ones) * 2 > x.size();
}

bool EvenOnes(std::string_view x) { return std::count(x.begin(), x.end(), '1') % 2 == 0; }

class PaddedRound : public RoundBehavior {
 public:
  explicit PaddedRound(NamedDecider base) : base_(std::move(base)) {}

  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    if (pair.key.empty()) {
      inv.Emit("1", "");
      return;
    }
    const auto n = PaddedPrefixLength(inv.n());
    const std::uint64_t i = ParseDec(pair.key);
    if (!n) {
      if (i == 1) inv.Emit("1", "!");
      return;
    }
    if (i <= *n) {
      inv.Emit("1", pair.key + ":" + pair.value);
    } else if (pair.value != "0") {
      inv.Emit("1", "!");
    }
  }

  void Reduce(std::string_view, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    std::vector<std::pair<std::uint64_t, char>> cells;
    for (const auto& p : group) {
      inv.Step();
      if (p.value == "!") {
        inv.Reject();
        return;
      }
      if (p.value.empty()) continue;
      auto colon = p.value.find(':');
      cells.emplace_back(ParseDec(std::string_view(p.value).substr(0, colon)), p.value.back());
    }
    std::sort(cells.begin(), cells.end());
    std::string prefix;
    for (const auto& c : cells) prefix.push_back(c.second);
    inv.UseWorking(prefix.size());
    inv.Step(prefix.size());
    if (base_.decide(prefix)) {
      inv.Accept();
    } else {
      inv.Reject();
    }
  }

 private:
  NamedDecider base_;
};

}  // namespace

NamedDecider DeciderByName(std::string_view name) {
  if (name == "palindrome") return {"palindrome", Palindrome};
  if (name == "majority") return {"majority", Majority};
  if (name == "even-ones") return {"even-ones", EvenOnes};
  if (name == "all") return {"all", [](std::string_view) { return true; }};
  if (name == "none") return {"none", [](std::string_view) { return false; }};
  throw std::invalid_argument("unknown decider '" + std::string(name) + "'");
}

std::vector<std::string> DeciderNames() { return {"palindrome", "majority", "even-ones", "all", "none"}; }

NamedDecider DfaDecider(Dfa dfa) {
  return {"dfa", [d = std::move(dfa)](std::string_view x) { return DfaAccepts(d, x); }};
}

MrcProgram CompilePaddedDecider(NamedDecider base, const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "padding:" + base.name;
  program.rounds = {0, 1};
  program.behavior = std::make_shared<PaddedRound>(std::move(base));
  program.limits = limits;
  program.seed_empty_input = true;
  return program;
}

}  // namespace mrcsim
