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
#include <map>
#include <string>
#include <string_view>

#include "mrcsim/core/engine.h"
#include "mrcsim/core/program.h"

namespace mrcsim {

// Two rounds over <i, word_i>: round 1 inverts to <word, i> and counts each
// word; round 2 gathers "word\tcount" on key "1" and re-emits <word, count>.
MrcProgram CompileWordCount(const ResourceLimits& limits = {});

// Plain counting over whitespace-separated tokens.
std::map<std::string, std::uint64_t> CountWords(std::string_view text);

}  // namespace mrcsim
