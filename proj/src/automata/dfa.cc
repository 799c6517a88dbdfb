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

#include "mrcsim/automata/dfa.h"

#include <algorithm>

namespace mrcsim {

Dfa::Dfa(std::size_t num_states, std::string alphabet, std::vector<StateId> transitions,
         StateId start, std::vector<bool> accepting, std::vector<std::string> state_names)
    : num_states_(num_states),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)),
      state_names_(std::move(state_names)) {
  std::fill(std::begin(index_of_), std::end(index_of_), std::int16_t{-1});
  if (num_states_ == 0) throw std::invalid_argument("a DFA needs at least one state");
  if (alphabet_.empty()) throw std::invalid_argument("a DFA needs a non-empty alphabet");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto c = static_cast<unsigned char>(alphabet_[i]);
    if (index_of_[c] != -1) throw std::invalid_argument("repeated alphabet symbol");
    index_of_[c] = static_cast<std::int16_t>(i);
  }
  if (transitions_.size() != num_states_ * alphabet_.size()) {
    throw std::invalid_argument("transition table is not total over states x alphabet");
  }
  for (StateId t : transitions_) {
    if (t >= num_states_) throw std::invalid_argument("transition to an undeclared state");
  }
  if (start_ >= num_states_) throw std::invalid_argument("start state is not declared");
  if (accepting_.size() != num_states_) {
    throw std::invalid_argument("accepting set must be given for every state");
  }
  if (!state_names_.empty() && state_names_.size() != num_states_) {
    throw std::invalid_argument("state name count does not match state count");
  }
}

std::size_t Dfa::SymbolIndex(char symbol) const {
  std::int16_t i = index_of_[static_cast<unsigned char>(symbol)];
  if (i < 0) {
    throw AlphabetError(std::string("symbol '") + symbol + "' is not in the DFA alphabet");
  }
  return static_cast<std::size_t>(i);
}

StateId RunDfa(const Dfa& dfa, std::string_view x, StateId start) {
  StateId s = start;
  for (char c : x) s = dfa.Next(s, c);
  return s;
}

bool DfaAccepts(const Dfa& dfa, std::string_view x) {
  return dfa.accepting(RunDfa(dfa, x, dfa.start()));
}

TransitionTable DfaTransitionTable(const Dfa& dfa, std::string_view block) {
  std::vector<std::size_t> symbols;
  symbols.reserve(block.size());
  for (char c : block) symbols.push_back(dfa.SymbolIndex(c));
  TransitionTable table(dfa.num_states());
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    StateId q = s;
    for (std::size_t a : symbols) q = dfa.NextByIndex(q, a);
    table[s] = q;
  }
  return table;
}

TransitionTable ComposeTables(const TransitionTable& first, const TransitionTable& second) {
  TransitionTable out(first.size());
  for (std::size_t s = 0; s < first.size(); ++s) out[s] = second[first[s]];
  return out;
}

Dfa ParityDfa() {
  // q0 --1--> q1 --1--> q0, self-loops on 0.
  return Dfa(2, "01", {0, 1, 1, 0}, 0, {true, false}, {"q0", "q1"});
}

}  // namespace mrcsim
