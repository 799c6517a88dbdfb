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

#include "mrcsim/core/key_value.h"
#include "mrcsim/core/program.h"
#include "mrcsim/core/rational.h"

namespace mrcsim {

// Partition of positions 1..n into K contiguous blocks of b = ceil(n^eps)
// positions (the last block may be shorter). Inputs with n <= 1 form a single
// block of size n.
struct BlockPlan {
  std::uint64_t n = 0;
  Rational epsilon{1, 2};
  std::uint64_t block_size = 0;
  std::uint64_t block_count = 1;

  static BlockPlan For(std::uint64_t n, Rational epsilon);

  // 1-based block holding 1-based position i.
  std::uint64_t BlockOf(std::uint64_t position) const;
  std::uint64_t FirstPosition(std::uint64_t block) const { return (block - 1) * block_size + 1; }
};

// Round-1 routing shared by the block-based constructions: <i, x_i> goes to
// key ceil(i / b) carrying "i:x_i". The empty seed pair of an empty input
// goes to block 1 carrying nothing.
void RouteToBlock(const KeyValuePair& pair, const BlockPlan& plan, Invocation& inv);

// Reassembles a block from "i:x_i" values in any order (empty values are
// ignored). Charges one step per value.
std::string AssembleBlock(std::span<const KeyValuePair> group, Invocation& inv);

}  // namespace mrcsim
