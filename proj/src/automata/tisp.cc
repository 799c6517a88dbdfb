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

#include "mrcsim/automata/tisp.h"

#include <algorithm>
#include <stdexcept>

namespace mrcsim {

TispMachine::TispMachine(std::size_t num_states, StateId initial, StateId accept, StateId reject,
                         std::string alphabet, char blank,
                         std::vector<std::pair<std::pair<StateId, char>, TispAction>> transitions,
                         std::uint64_t time_budget, std::uint64_t space_budget,
                         std::vector<std::string> state_names)
    : num_states_(num_states),
      initial_(initial),
      accept_(accept),
      reject_(reject),
      alphabet_(std::move(alphabet)),
      blank_(blank),
      delta_(num_states * 256),
      time_budget_(time_budget),
      space_budget_(space_budget),
      state_names_(std::move(state_names)) {
  if (num_states_ < 2) throw std::invalid_argument("a TISP machine needs accept and reject states");
  if (initial_ >= num_states_ || accept_ >= num_states_ || reject_ >= num_states_) {
    throw std::invalid_argument("initial, accept and reject must be declared states");
  }
  if (accept_ == reject_) throw std::invalid_argument("accept and reject must differ");
  if (alphabet_.find(blank_) == std::string::npos) alphabet_.push_back(blank_);
  if (space_budget_ < 1) throw std::invalid_argument("space budget must be at least one cell");
  for (const auto& [from, action] : transitions) {
    auto [state, symbol] = from;
    if (state >= num_states_ || action.next >= num_states_) {
      throw std::invalid_argument("transition mentions an undeclared state");
    }
    if (alphabet_.find(symbol) == std::string::npos ||
        alphabet_.find(action.write) == std::string::npos) {
      throw std::invalid_argument(std::string("transition uses symbol outside the alphabet: '") +
                                  symbol + "'");
    }
    if (action.move == Move::kStay) throw std::invalid_argument("TISP moves must be L or R");
    auto& slot = delta_[state * 256 + static_cast<unsigned char>(symbol)];
    if (slot) throw std::invalid_argument("duplicate transition");
    slot = action;
  }
  if (!state_names_.empty() && state_names_.size() != num_states_) {
    throw std::invalid_argument("state name count does not match state count");
  }
}

TispAction TispMachine::Lookup(StateId s, char symbol) const {
  const auto& a = delta_[s * 256 + static_cast<unsigned char>(symbol)];
  if (a) return *a;
  return TispAction{reject_, symbol, Move::kStay};
}

TispMachine TispMachine::WithBudgets(std::uint64_t time_budget, std::uint64_t space_budget) const {
  TispMachine copy = *this;
  copy.time_budget_ = time_budget;
  copy.space_budget_ = std::max<std::uint64_t>(space_budget, 1);
  return copy;
}

const char* ToString(TispOutcome o) {
  switch (o) {
    case TispOutcome::kAccept: return "accept";
    case TispOutcome::kReject: return "reject";
    case TispOutcome::kTimeExceeded: return "time-exceeded";
    case TispOutcome::kSpaceExceeded: return "space-exceeded";
  }
  return "?";
}

TispResult RunTispTape(const TispMachine& m, std::string tape, std::uint64_t time_budget,
                       std::uint64_t space_budget) {
  TispResult r;
  r.cells = std::max<std::uint64_t>(tape.size(), 1);
  if (tape.empty()) tape.push_back(m.blank());
  StateId state = m.initial();
  std::uint64_t head = 1;
  auto finish = [&](TispOutcome o) {
    r.outcome = o;
    r.final_state = state;
    r.tape = std::move(tape);
    return r;
  };
  if (r.cells > space_budget) return finish(TispOutcome::kSpaceExceeded);
  while (!m.Halting(state)) {
    if (r.steps >= time_budget) return finish(TispOutcome::kTimeExceeded);
    TispAction a = m.Lookup(state, tape[head - 1]);
    tape[head - 1] = a.write;
    state = a.next;
    ++r.steps;
    if (a.move == Move::kRight) {
      ++head;
      if (head > space_budget) return finish(TispOutcome::kSpaceExceeded);
      if (head > tape.size()) tape.push_back(m.blank());
      r.cells = std::max(r.cells, head);
    } else if (a.move == Move::kLeft && head > 1) {
      --head;
    }
  }
  return finish(state == m.accept() ? TispOutcome::kAccept : TispOutcome::kReject);
}

TispResult RunTisp(const TispMachine& m, std::string_view x) {
  return RunTispTape(m, std::string(x), m.time_budget(), m.space_budget());
}

}  // namespace mrcsim
