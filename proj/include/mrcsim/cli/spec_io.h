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

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mrcsim/automata/dfa.h"
#include "mrcsim/automata/tisp.h"
#include "mrcsim/automata/tm.h"
#include "mrcsim/bsp/bsp.h"
#include "mrcsim/core/program.h"

namespace mrcsim {

inline constexpr const char* kSchema = "mrcsim/1";

// A machine spec document that does not describe a valid machine.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A validated spec in normal form: fields in a fixed shape, defaults filled
// in, rationals reduced. `doc` carries "schema" only at top level.
struct MachineSpec {
  std::string kind;  // dfa, tm, tisp, mrc-pipeline, bsp
  nlohmann::json doc;
};

MachineSpec ParseSpec(std::string_view text);
MachineSpec NormalizeSpec(const nlohmann::json& doc, bool top_level = true);
std::string SerializeSpec(const MachineSpec& spec);

Dfa DfaFromSpec(const nlohmann::json& doc);
nlohmann::json DfaToSpec(const Dfa& dfa);
Tm TmFromSpec(const nlohmann::json& doc);
nlohmann::json TmToSpec(const Tm& tm);
TispMachine TispFromSpec(const nlohmann::json& doc);
nlohmann::json TispToSpec(const TispMachine& machine);

struct BuildOptions {
  // Mutation hook forwarded to dfa2mrc pipelines.
  bool mutate_reverse_composition = false;
};

// Builds the program an mrc-pipeline document names.
MrcProgram ProgramFromSpec(const nlohmann::json& doc, const ResourceLimits& limits,
                           const BuildOptions& options = {});
// Builds the machine a bsp document names.
BspMachine BspFromSpec(const nlohmann::json& doc, const ResourceLimits& limits,
                       const BuildOptions& options = {});

// True for pipelines whose input is whitespace-separated tokens rather than
// a symbol string.
bool UsesTokenInput(const nlohmann::json& doc);

}  // namespace mrcsim
