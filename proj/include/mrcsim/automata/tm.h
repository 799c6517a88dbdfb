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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/automata/dfa.h"

namespace mrcsim {

enum class Move : std::int8_t { kLeft = -1, kStay = 0, kRight = 1 };

struct TmAction {
  StateId next = 0;
  std::uint8_t write = 0;
  Move work_move = Move::kStay;
  Move input_move = Move::kStay;

  friend bool operator==(const TmAction&, const TmAction&) = default;
};

// Input symbols are addressed by index: 0 is the left end-marker, 1 the
// right end-marker, and 2 + k the k-th symbol of the input alphabet.
inline constexpr std::size_t kLeftMarker = 0;
inline constexpr std::size_t kRightMarker = 1;

// Turing machine with a two-way read-only input tape (between end-markers)
// and a read/write work tape of exactly `work_space` cells. Work symbol 0 is
// the blank. Missing transitions go to the reject state without moving.
class Tm {
 public:
  Tm(std::size_t num_states, StateId initial, StateId accept, StateId reject,
     std::string input_alphabet, std::size_t work_alphabet_size, std::size_t work_space,
     std::vector<std::optional<TmAction>> delta, std::vector<std::string> state_names = {});

  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  StateId accept() const { return accept_; }
  StateId reject() const { return reject_; }
  const std::string& input_alphabet() const { return input_alphabet_; }
  std::size_t work_alphabet_size() const { return work_alphabet_size_; }
  std::size_t work_space() const { return work_space_; }
  std::size_t num_input_symbols() const { return input_alphabet_.size() + 2; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::optional<TmAction>>& delta() const { return delta_; }

  bool Halting(StateId s) const { return s == accept_ || s == reject_; }
  std::size_t DeltaIndex(StateId s, std::size_t input_symbol, std::uint8_t work) const {
    return (s * num_input_symbols() + input_symbol) * work_alphabet_size_ + work;
  }
  TmAction Action(StateId s, std::size_t input_symbol, std::uint8_t work) const;
  // Index of an input byte; throws AlphabetError when absent.
  std::size_t InputSymbolIndex(char c) const;
  bool HasInputStay() const;

  // |Gamma|^s * s * |S|, the number of distinct work configurations.
  std::uint64_t WorkConfigCount() const;

 private:
  std::size_t num_states_;
  StateId initial_;
  StateId accept_;
  StateId reject_;
  std::string input_alphabet_;
  std::size_t work_alphabet_size_;
  std::size_t work_space_;
  std::vector<std::optional<TmAction>> delta_;
  std::vector<std::string> state_names_;
};

// Work tape contents, work head position (0-based) and machine state.
struct WorkConfig {
  std::vector<std::uint8_t> tape;
  std::uint32_t head = 0;
  StateId state = 0;

  friend bool operator==(const WorkConfig&, const WorkConfig&) = default;
};

std::uint64_t EncodeWorkConfig(const Tm& tm, const WorkConfig& wc);
WorkConfig DecodeWorkConfig(const Tm& tm, std::uint64_t index);
// Blank tape, head on the first cell, initial state.
WorkConfig InitialWorkConfig(const Tm& tm);

// kFault marks the work head leaving [1, s]. The input head never leaves <x>:
// a move past an end-marker leaves it on the marker.
enum class TmOutcome { kAccept, kReject, kDiverged, kFault };

const char* ToString(TmOutcome o);

// Full machine configuration; the input head is an index into <x>, so 0 is
// the left end-marker and |x| + 1 the right one.
struct TmConfiguration {
  WorkConfig work;
  std::uint64_t input_pos = 0;

  friend bool operator==(const TmConfiguration&, const TmConfiguration&) = default;
};

TmConfiguration InitialConfiguration(const Tm& tm);

// Applies one transition. Returns the outcome when the machine is (or
// becomes) halted or faults; std::nullopt while it keeps running.
std::optional<TmOutcome> StepTm(const Tm& tm, std::span<const std::size_t> input_symbols,
                                TmConfiguration& config);

// Symbol indices of <x>, end-markers included.
std::vector<std::size_t> MarkedInput(const Tm& tm, std::string_view x);

// Direct simulation. Reports kDiverged once more steps than there are global
// configurations (|Gamma|^s * s * |S| * (|x| + 2)) have been taken.
TmOutcome RunTm(const Tm& tm, std::string_view x);

// Equivalent machine without input-head stay moves: each stay becomes a move
// away and back through an auxiliary state (right-then-left on the left
// end-marker, left-then-right elsewhere).
Tm EliminateInputStays(const Tm& tm);

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

enum class BlockRole { kLeftmost, kInterior, kRightmost, kWhole };

BlockRole RoleOf(std::size_t block_index, std::size_t block_count);

struct BoundaryEntry {
  enum class Kind : std::uint8_t { kExit, kAccept, kReject, kDiverged, kFault };
  Kind kind = Kind::kExit;
  std::uint64_t config = 0;  // exit work configuration, for kExit
  Side side = Side::kLeft;   // exit side, for kExit

  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

// Behavior of the machine on one block of the input: for every work
// configuration and entry side, where and how the input head leaves the
// block, or the halting outcome inside it.
struct BoundaryTable {
  std::uint64_t config_count = 0;
  std::vector<BoundaryEntry> entries;  // index: config * 2 + side

  const BoundaryEntry& At(std::uint64_t config, Side side) const {
    return entries[config * 2 + static_cast<std::size_t>(side)];
  }

  std::string Serialize() const;
  static BoundaryTable Parse(std::string_view text);

  friend bool operator==(const BoundaryTable&, const BoundaryTable&) = default;
};

// Requires a machine without input-head stays (see EliminateInputStays).
// Leftmost and rightmost blocks include the adjacent end-marker; entering on
// side L puts the head on the block's first cell, side R on its last cell.
// When `steps_taken` is set it receives the total transitions simulated.
BoundaryTable TmBoundaryFunction(const Tm& tm, std::string_view block, BlockRole role,
                                 std::uint64_t* steps_taken = nullptr);

// Upper bound on the serialized size of one boundary table.
std::uint64_t BoundaryTableBytes(const Tm& tm);

// Chains boundary tables from the initial configuration entering block 0 on
// the left, flipping the side at every block crossing. Reports kDiverged
// after |WorkConfig| * K * 2 crossings.
TmOutcome ChainBoundaryTables(const Tm& tm, std::span<const BoundaryTable> tables);

}  // namespace mrcsim
