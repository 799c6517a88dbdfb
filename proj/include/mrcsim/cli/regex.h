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

#include <string_view>

#include "mrcsim/automata/dfa.h"

namespace mrcsim {

// Regular expressions over {0,1}: concatenation, '|', '*' and parentheses.
// The empty pattern (or an empty alternative) matches the empty string.
// Compiled through a Thompson NFA and the subset construction; the result
// is total over "01" and includes the dead state when one is reachable.
// Throws std::invalid_argument on syntax errors.
Dfa CompileRegex(std::string_view pattern);

}  // namespace mrcsim
