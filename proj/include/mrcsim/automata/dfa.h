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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrcsim {

using StateId = std::uint32_t;

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic finite automaton over a byte alphabet. The transition table
// is total: transitions[s * |alphabet| + a] for every state s and symbol a.
class Dfa {
 public:
  Dfa(std::size_t num_states, std::string alphabet, std::vector<StateId> transitions,
      StateId start, std::vector<bool> accepting, std::vector<std::string> state_names = {});

  std::size_t num_states() const { return num_states_; }
  const std::string& alphabet() const { return alphabet_; }
  StateId start() const { return start_; }
  bool accepting(StateId s) const { return accepting_[s]; }
  const std::vector<std::string>& state_names() const { return state_names_; }

  // Index of `symbol` in the alphabet; throws AlphabetError when absent.
  std::size_t SymbolIndex(char symbol) const;
  StateId Next(StateId s, char symbol) const {
    return transitions_[s * alphabet_.size() + SymbolIndex(symbol)];
  }
  StateId NextByIndex(StateId s, std::size_t symbol_index) const {
    return transitions_[s * alphabet_.size() + symbol_index];
  }

 private:
  std::size_t num_states_;
  std::string alphabet_;
  std::vector<StateId> transitions_;
  StateId start_;
  std::vector<bool> accepting_;
  std::vector<std::string> state_names_;
  std::int16_t index_of_[256];
};

StateId RunDfa(const Dfa& dfa, std::string_view x, StateId start);
bool DfaAccepts(const Dfa& dfa, std::string_view x);

// table[s] = state reached from s after reading the block.
using TransitionTable = std::vector<StateId>;

TransitionTable DfaTransitionTable(const Dfa& dfa, std::string_view block);

// Table for reading `first` and then `second`: result[s] = second[first[s]].
TransitionTable ComposeTables(const TransitionTable& first, const TransitionTable& second);

// Two states over {0,1}; the state toggles on '1'. Accepts an even count of 1s.
Dfa ParityDfa();

}  // namespace mrcsim
