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

#include "mrcsim/translators/word_count.h"

#include <sstream>

namespace mrcsim {
namespace {

class WordCountRounds : public RoundBehavior {
 public:
  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    if (inv.round() == 1) {
      inv.Emit(pair.value, pair.key);
    } else {
      inv.Emit("1", pair.key + "\t" + pair.value);
    }
  }

  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    if (inv.round() == 1) {
      inv.Step(group.size());
      inv.Emit(std::string(key), Dec(group.size()));
      return;
    }
    for (const auto& p : group) {
      inv.Step();
      auto tab = p.value.find('\t');
      if (tab == std::string::npos) throw BehaviorError("malformed count record");
      inv.Emit(p.value.substr(0, tab), p.value.substr(tab + 1));
    }
  }
};

}  // namespace

MrcProgram CompileWordCount(const ResourceLimits& limits) {
  MrcProgram program;
  program.name = "wordcount";
  program.rounds = {0, 2};
  program.behavior = std::make_shared<WordCountRounds>();
  program.limits = limits;
  return program;
}

std::map<std::string, std::uint64_t> CountWords(std::string_view text) {
  std::map<std::string, std::uint64_t> counts;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) ++counts[word];
  return counts;
}

}  // namespace mrcsim
