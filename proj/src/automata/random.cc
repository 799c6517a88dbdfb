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

#include "mrcsim/automata/random.h"

namespace mrcsim {
namespace {

std::size_t Pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool Chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

std::string RandomString(std::mt19937_64& rng, std::size_t length, std::string_view alphabet) {
  std::string s(length, '\0');
  for (auto& c : s) c = alphabet[Pick(rng, alphabet.size())];
  return s;
}

Dfa RandomDfa(std::mt19937_64& rng, std::size_t max_states, std::string alphabet) {
  std::size_t states = 1 + Pick(rng, max_states);
  std::vector<StateId> transitions(states * alphabet.size());
  for (auto& t : transitions) t = static_cast<StateId>(Pick(rng, states));
  std::vector<bool> accepting(states);
  for (std::size_t s = 0; s < states; ++s) accepting[s] = Chance(rng, 0.5);
  return Dfa(states, std::move(alphabet), std::move(transitions),
             static_cast<StateId>(Pick(rng, states)), std::move(accepting));
}

Tm RandomTm(std::mt19937_64& rng, const RandomTmOptions& o) {
  const std::size_t states = o.working_states + 2;
  const auto accept = static_cast<StateId>(o.working_states);
  const auto reject = static_cast<StateId>(o.working_states + 1);
  const std::size_t symbols = 4;  // markers plus '0' and '1'
  std::vector<std::optional<TmAction>> delta(states * symbols * o.work_alphabet_size);
  for (StateId q = 0; q < o.working_states; ++q) {
    for (std::size_t a = 0; a < symbols; ++a) {
      for (std::size_t w = 0; w < o.work_alphabet_size; ++w) {
        TmAction act;
        if (Chance(rng, o.halt_probability)) {
          act.next = Chance(rng, 0.5) ? accept : reject;
        } else {
          act.next = static_cast<StateId>(Pick(rng, o.working_states));
        }
        act.write = static_cast<std::uint8_t>(Pick(rng, o.work_alphabet_size));
        act.work_move = static_cast<Move>(static_cast<int>(Pick(rng, 3)) - 1);
        if (Chance(rng, o.stay_probability)) {
          act.input_move = Move::kStay;
        } else if (a == kLeftMarker) {
          act.input_move = Chance(rng, 0.9) ? Move::kRight : Move::kLeft;
        } else if (a == kRightMarker) {
          act.input_move = Chance(rng, 0.9) ? Move::kLeft : Move::kRight;
        } else {
          act.input_move = Chance(rng, 0.6) ? Move::kRight : Move::kLeft;
        }
        delta[(q * symbols + a) * o.work_alphabet_size + w] = act;
      }
    }
  }
  return Tm(states, 0, accept, reject, "01", o.work_alphabet_size, o.work_space, std::move(delta));
}

TispMachine RandomTisp(std::mt19937_64& rng, const RandomTispOptions& o) {
  const std::size_t states = o.working_states + 2;
  const auto accept = static_cast<StateId>(o.working_states);
  const auto reject = static_cast<StateId>(o.working_states + 1);
  const std::string symbols = "01_";
  std::vector<std::pair<std::pair<StateId, char>, TispAction>> transitions;
  for (StateId q = 0; q < o.working_states; ++q) {
    for (char c : symbols) {
      TispAction a;
      if (Chance(rng, o.halt_probability)) {
        a.next = Chance(rng, 0.5) ? accept : reject;
      } else {
        a.next = static_cast<StateId>(Pick(rng, o.working_states));
      }
      a.write = symbols[Pick(rng, symbols.size())];
      a.move = Chance(rng, 0.6) ? Move::kRight : Move::kLeft;
      transitions.push_back({{q, c}, a});
    }
  }
  return TispMachine(states, 0, accept, reject, "01", '_', std::move(transitions), o.time_budget,
                     o.space_budget);
}

}  // namespace mrcsim
