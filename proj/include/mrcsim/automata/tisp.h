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
#include <string>
#include <string_view>
#include <vector>

#include "mrcsim/automata/dfa.h"
#include "mrcsim/automata/tm.h"

namespace mrcsim {

struct TispAction {
  StateId next = 0;
  char write = '_';
  Move move = Move::kRight;  // kLeft or kRight; kStay only on implicit halts

  friend bool operator==(const TispAction&, const TispAction&) = default;
};

// Single-tape machine with simultaneous time and space budgets. Cells are
// numbered from 1; the input occupies cells 1..n and the head starts on
// cell 1. Moving left on cell 1 leaves the head in place. A missing
// transition is a step into the reject state that writes nothing back.
class TispMachine {
 public:
  TispMachine(std::size_t num_states, StateId initial, StateId accept, StateId reject,
              std::string alphabet, char blank,
              std::vector<std::pair<std::pair<StateId, char>, TispAction>> transitions,
              std::uint64_t time_budget, std::uint64_t space_budget,
              std::vector<std::string> state_names = {});

  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  StateId accept() const { return accept_; }
  StateId reject() const { return reject_; }
  const std::string& alphabet() const { return alphabet_; }
  char blank() const { return blank_; }
  std::uint64_t time_budget() const { return time_budget_; }
  std::uint64_t space_budget() const { return space_budget_; }
  const std::vector<std::string>& state_names() const { return state_names_; }

  bool Halting(StateId s) const { return s == accept_ || s == reject_; }
  TispAction Lookup(StateId s, char symbol) const;
  bool HasTransition(StateId s, char symbol) const {
    return delta_[s * 256 + static_cast<unsigned char>(symbol)].has_value();
  }

  TispMachine WithBudgets(std::uint64_t time_budget, std::uint64_t space_budget) const;

 private:
  std::size_t num_states_;
  StateId initial_;
  StateId accept_;
  StateId reject_;
  std::string alphabet_;
  char blank_;
  std::vector<std::optional<TispAction>> delta_;  // state * 256 + symbol
  std::uint64_t time_budget_;
  std::uint64_t space_budget_;
  std::vector<std::string> state_names_;
};

enum class TispOutcome { kAccept, kReject, kTimeExceeded, kSpaceExceeded };

const char* ToString(TispOutcome o);

struct TispResult {
  TispOutcome outcome = TispOutcome::kReject;
  std::uint64_t steps = 0;
  std::uint64_t cells = 0;  // highest cell that held input or was visited
  std::string tape;         // final contents of cells 1..cells
  StateId final_state = 0;
};

// Runs on an arbitrary initial tape with the given budgets. Reaching a cell
// beyond `space_budget` is space-exceeded (that step counts); running
// `time_budget` steps without halting is time-exceeded.
TispResult RunTispTape(const TispMachine& m, std::string tape, std::uint64_t time_budget,
                       std::uint64_t space_budget);

// RunTispTape with the machine's own budgets.
TispResult RunTisp(const TispMachine& m, std::string_view x);

}  // namespace mrcsim
