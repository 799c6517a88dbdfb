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
#include <vector>

#include "mrcsim/bsp/bsp.h"
#include "mrcsim/core/program.h"

namespace mrcsim {

// 64-bit FNV-1a over the key bytes.
std::uint64_t Fnv1a64(std::string_view bytes);

// Processor responsible for a key among p: 1 + Fnv1a64(key) mod p.
std::uint64_t KeyOwner(std::string_view key, std::uint64_t p);

// Length-prefixed field encoding used inside message payloads.
std::string EncodeFields(std::span<const std::string_view> fields);
std::vector<std::string> DecodeFields(std::string_view payload);

// BSP machine running an accept-state MRC program on p processors, two BSP
// rounds per MRC round. In the map round each processor maps the pairs it
// holds and sends every emitted pair to the owner of its key; in the reduce
// round each processor groups what it received, reduces each group and keeps
// the outputs by sending them to itself. Messages carry the provenance of
// their pair so receivers rebuild the canonical value order exactly. The
// input must use the symbol encoding <i, x_i>.
BspMachine MrcToBsp(const MrcProgram& program, std::uint64_t p);

// MRC program running a BSP machine, one MRC round per BSP round. Keys are
// processor indices; every processor receives a heartbeat pair each round so
// it runs even with an empty inbox.
MrcProgram BspToMrc(const BspMachine& machine);

// U-style pairs recovered from the final messages of a MrcToBsp run, in
// canonical order.
std::vector<KeyValuePair> MrcOutputFromBsp(std::span<const Message> output);

}  // namespace mrcsim
