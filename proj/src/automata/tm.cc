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

#include "mrcsim/automata/tm.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "mrcsim/core/rational.h"

namespace mrcsim {
namespace {

std::uint64_t Digits(std::uint64_t v) {
  std::uint64_t d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

TmOutcome HaltOutcome(const Tm& tm, StateId s) {
  return s == tm.accept() ? TmOutcome::kAccept : TmOutcome::kReject;
}

}  // namespace

Tm::Tm(std::size_t num_states, StateId initial, StateId accept, StateId reject,
       std::string input_alphabet, std::size_t work_alphabet_size, std::size_t work_space,
       std::vector<std::optional<TmAction>> delta, std::vector<std::string> state_names)
    : num_states_(num_states),
      initial_(initial),
      accept_(accept),
      reject_(reject),
      input_alphabet_(std::move(input_alphabet)),
      work_alphabet_size_(work_alphabet_size),
      work_space_(work_space),
      delta_(std::move(delta)),
      state_names_(std::move(state_names)) {
  if (num_states_ < 2) throw std::invalid_argument("a TM needs at least accept and reject states");
  if (initial_ >= num_states_ || accept_ >= num_states_ || reject_ >= num_states_) {
    throw std::invalid_argument("initial, accept and reject must be declared states");
  }
  if (accept_ == reject_) throw std::invalid_argument("accept and reject must differ");
  if (work_alphabet_size_ < 1 || work_alphabet_size_ > 255) {
    throw std::invalid_argument("work alphabet size must be in [1, 255]");
  }
  if (work_space_ < 1) throw std::invalid_argument("work space bound must be at least one cell");
  for (std::size_t i = 0; i < input_alphabet_.size(); ++i) {
    if (input_alphabet_.find(input_alphabet_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument("repeated input symbol");
    }
  }
  if (delta_.size() != num_states_ * num_input_symbols() * work_alphabet_size_) {
    throw std::invalid_argument("delta has the wrong size");
  }
  for (const auto& a : delta_) {
    if (!a) continue;
    if (a->next >= num_states_) throw std::invalid_argument("transition to an undeclared state");
    if (a->write >= work_alphabet_size_) throw std::invalid_argument("write of an undeclared work symbol");
  }
  if (!state_names_.empty() && state_names_.size() != num_states_) {
    throw std::invalid_argument("state name count does not match state count");
  }
}

TmAction Tm::Action(StateId s, std::size_t input_symbol, std::uint8_t work) const {
  const auto& a = delta_[DeltaIndex(s, input_symbol, work)];
  if (a) return *a;
  return TmAction{reject_, work, Move::kStay, Move::kStay};
}

std::size_t Tm::InputSymbolIndex(char c) const {
  auto pos = input_alphabet_.find(c);
  if (pos == std::string::npos) {
    throw AlphabetError(std::string("symbol '") + c + "' is not in the TM input alphabet");
  }
  return pos + 2;
}

bool Tm::HasInputStay() const {
  for (const auto& a : delta_) {
    if (a && a->input_move == Move::kStay) return true;
  }
  return false;
}

std::uint64_t Tm::WorkConfigCount() const {
  return SatMul(SatMul(SatPow(work_alphabet_size_, work_space_), work_space_), num_states_);
}

std::uint64_t EncodeWorkConfig(const Tm& tm, const WorkConfig& wc) {
  std::uint64_t tape = 0;
  for (std::uint8_t cell : wc.tape) tape = tape * tm.work_alphabet_size() + cell;
  return (tape * tm.work_space() + wc.head) * tm.num_states() + wc.state;
}

WorkConfig DecodeWorkConfig(const Tm& tm, std::uint64_t index) {
  WorkConfig wc;
  wc.state = static_cast<StateId>(index % tm.num_states());
  index /= tm.num_states();
  wc.head = static_cast<std::uint32_t>(index % tm.work_space());
  index /= tm.work_space();
  wc.tape.assign(tm.work_space(), 0);
  for (std::size_t i = tm.work_space(); i-- > 0;) {
    wc.tape[i] = static_cast<std::uint8_t>(index % tm.work_alphabet_size());
    index /= tm.work_alphabet_size();
  }
  return wc;
}

WorkConfig InitialWorkConfig(const Tm& tm) {
  return WorkConfig{std::vector<std::uint8_t>(tm.work_space(), 0), 0, tm.initial()};
}

const char* ToString(TmOutcome o) {
  switch (o) {
    case TmOutcome::kAccept: return "accept";
    case TmOutcome::kReject: return "reject";
    case TmOutcome::kDiverged: return "diverged";
    case TmOutcome::kFault: return "fault";
  }
  return "?";
}

TmConfiguration InitialConfiguration(const Tm& tm) { return {InitialWorkConfig(tm), 0}; }

std::optional<TmOutcome> StepTm(const Tm& tm, std::span<const std::size_t> input_symbols,
                                TmConfiguration& config) {
  WorkConfig& wc = config.work;
  if (tm.Halting(wc.state)) return HaltOutcome(tm, wc.state);
  TmAction a = tm.Action(wc.state, input_symbols[config.input_pos], wc.tape[wc.head]);
  wc.tape[wc.head] = a.write;
  std::int64_t head = static_cast<std::int64_t>(wc.head) + static_cast<int>(a.work_move);
  if (head < 0 || head >= static_cast<std::int64_t>(tm.work_space())) return TmOutcome::kFault;
  wc.head = static_cast<std::uint32_t>(head);
  std::int64_t pos = static_cast<std::int64_t>(config.input_pos) + static_cast<int>(a.input_move);
  // The input head cannot leave <x>; a move past an end-marker is a stay.
  pos = std::clamp<std::int64_t>(pos, 0, static_cast<std::int64_t>(input_symbols.size()) - 1);
  config.input_pos = static_cast<std::uint64_t>(pos);
  wc.state = a.next;
  if (tm.Halting(wc.state)) return HaltOutcome(tm, wc.state);
  return std::nullopt;
}

std::vector<std::size_t> MarkedInput(const Tm& tm, std::string_view x) {
  std::vector<std::size_t> symbols;
  symbols.reserve(x.size() + 2);
  symbols.push_back(kLeftMarker);
  for (char c : x) symbols.push_back(tm.InputSymbolIndex(c));
  symbols.push_back(kRightMarker);
  return symbols;
}

TmOutcome RunTm(const Tm& tm, std::string_view x) {
  std::vector<std::size_t> symbols = MarkedInput(tm, x);
  const std::uint64_t budget = SatMul(tm.WorkConfigCount(), x.size() + 2);
  TmConfiguration config = InitialConfiguration(tm);
  for (std::uint64_t steps = 0;; ++steps) {
    if (tm.Halting(config.work.state)) return HaltOutcome(tm, config.work.state);
    if (steps >= budget) return TmOutcome::kDiverged;
    if (auto done = StepTm(tm, symbols, config)) return *done;
  }
}

Tm EliminateInputStays(const Tm& tm) {
  if (!tm.HasInputStay()) return tm;
  const std::size_t s = tm.num_states();
  const std::size_t symbols = tm.num_input_symbols();
  const std::size_t g = tm.work_alphabet_size();
  const std::size_t states = 3 * s;
  auto aux_right = [&](StateId q) { return static_cast<StateId>(s + q); };
  auto aux_left = [&](StateId q) { return static_cast<StateId>(2 * s + q); };

  std::vector<std::optional<TmAction>> delta(states * symbols * g);
  auto index = [&](std::size_t q, std::size_t a, std::size_t w) { return (q * symbols + a) * g + w; };
  for (StateId q = 0; q < s; ++q) {
    for (std::size_t a = 0; a < symbols; ++a) {
      for (std::size_t w = 0; w < g; ++w) {
        auto act = tm.delta()[tm.DeltaIndex(q, a, static_cast<std::uint8_t>(w))];
        if (act && act->input_move == Move::kStay) {
          if (a == kLeftMarker) {
            act = TmAction{aux_left(act->next), act->write, act->work_move, Move::kRight};
          } else {
            act = TmAction{aux_right(act->next), act->write, act->work_move, Move::kLeft};
          }
        }
        delta[index(q, a, w)] = act;
        auto wb = static_cast<std::uint8_t>(w);
        delta[index(aux_right(q), a, w)] = TmAction{q, wb, Move::kStay, Move::kRight};
        delta[index(aux_left(q), a, w)] = TmAction{q, wb, Move::kStay, Move::kLeft};
      }
    }
  }
  std::vector<std::string> names;
  if (!tm.state_names().empty()) {
    names = tm.state_names();
    for (StateId q = 0; q < s; ++q) names.push_back(tm.state_names()[q] + "~R");
    for (StateId q = 0; q < s; ++q) names.push_back(tm.state_names()[q] + "~L");
  }
  return Tm(states, tm.initial(), tm.accept(), tm.reject(), tm.input_alphabet(), g,
            tm.work_space(), std::move(delta), std::move(names));
}

BlockRole RoleOf(std::size_t block_index, std::size_t block_count) {
  if (block_count <= 1) return BlockRole::kWhole;
  if (block_index == 0) return BlockRole::kLeftmost;
  if (block_index + 1 == block_count) return BlockRole::kRightmost;
  return BlockRole::kInterior;
}

std::string BoundaryTable::Serialize() const {
  std::string out = std::to_string(config_count);
  out.push_back('|');
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out.push_back(',');
    const BoundaryEntry& e = entries[i];
    switch (e.kind) {
      case BoundaryEntry::Kind::kExit:
        out.push_back(e.side == Side::kLeft ? 'L' : 'R');
        out += std::to_string(e.config);
        break;
      case BoundaryEntry::Kind::kAccept: out.push_back('A'); break;
      case BoundaryEntry::Kind::kReject: out.push_back('J'); break;
      case BoundaryEntry::Kind::kDiverged: out.push_back('D'); break;
      case BoundaryEntry::Kind::kFault: out.push_back('F'); break;
    }
  }
  return out;
}

BoundaryTable BoundaryTable::Parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("malformed boundary table");
  BoundaryTable t;
  auto parse_u64 = [](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed boundary table number");
    }
    return v;
  };
  t.config_count = parse_u64(text.substr(0, bar));
  std::string_view rest = text.substr(bar + 1);
  t.entries.reserve(t.config_count * 2);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (tok.empty()) throw std::invalid_argument("malformed boundary table entry");
    BoundaryEntry e;
    switch (tok[0]) {
      case 'L':
      case 'R':
        e.kind = BoundaryEntry::Kind::kExit;
        e.side = tok[0] == 'L' ? Side::kLeft : Side::kRight;
        e.config = parse_u64(tok.substr(1));
        break;
      case 'A': e.kind = BoundaryEntry::Kind::kAccept; break;
      case 'J': e.kind = BoundaryEntry::Kind::kReject; break;
      case 'D': e.kind = BoundaryEntry::Kind::kDiverged; break;
      case 'F': e.kind = BoundaryEntry::Kind::kFault; break;
      default: throw std::invalid_argument("malformed boundary table entry");
    }
    t.entries.push_back(e);
  }
  if (t.entries.size() != t.config_count * 2) {
    throw std::invalid_argument("boundary table has the wrong number of entries");
  }
  return t;
}

BoundaryTable TmBoundaryFunction(const Tm& tm, std::string_view block, BlockRole role,
                                 std::uint64_t* steps_taken) {
  if (tm.HasInputStay()) {
    throw std::invalid_argument("boundary tables need a machine without input-head stays");
  }
  const bool left_edge = role == BlockRole::kLeftmost || role == BlockRole::kWhole;
  const bool right_edge = role == BlockRole::kRightmost || role == BlockRole::kWhole;
  std::vector<std::size_t> local;
  local.reserve(block.size() + 2);
  if (left_edge) local.push_back(kLeftMarker);
  for (char c : block) local.push_back(tm.InputSymbolIndex(c));
  if (right_edge) local.push_back(kRightMarker);
  const auto len = static_cast<std::int64_t>(local.size());

  BoundaryTable table;
  table.config_count = tm.WorkConfigCount();
  table.entries.resize(table.config_count * 2);
  const std::uint64_t budget = SatMul(table.config_count, local.size() + 2);
  std::uint64_t total_steps = 0;

  for (std::uint64_t c = 0; c < table.config_count; ++c) {
    for (Side side : {Side::kLeft, Side::kRight}) {
      BoundaryEntry& entry = table.entries[c * 2 + static_cast<std::size_t>(side)];
      WorkConfig wc = DecodeWorkConfig(tm, c);
      if (len == 0) {
        entry = {BoundaryEntry::Kind::kExit, c, side == Side::kLeft ? Side::kRight : Side::kLeft};
        continue;
      }
      std::int64_t pos = side == Side::kLeft ? 0 : len - 1;
      for (std::uint64_t steps = 0;; ++steps) {
        if (tm.Halting(wc.state)) {
          entry.kind = wc.state == tm.accept() ? BoundaryEntry::Kind::kAccept
                                               : BoundaryEntry::Kind::kReject;
          break;
        }
        if (steps >= budget) {
          entry.kind = BoundaryEntry::Kind::kDiverged;
          break;
        }
        TmAction a = tm.Action(wc.state, local[static_cast<std::size_t>(pos)], wc.tape[wc.head]);
        ++total_steps;
        wc.tape[wc.head] = a.write;
        std::int64_t head = static_cast<std::int64_t>(wc.head) + static_cast<int>(a.work_move);
        if (head < 0 || head >= static_cast<std::int64_t>(tm.work_space())) {
          entry.kind = BoundaryEntry::Kind::kFault;
          break;
        }
        wc.head = static_cast<std::uint32_t>(head);
        pos += static_cast<int>(a.input_move);
        wc.state = a.next;
        if (pos < 0 || pos >= len) {
          const bool off_tape = pos < 0 ? left_edge : right_edge;
          if (off_tape) {
            pos = pos < 0 ? 0 : len - 1;
            continue;
          }
          entry = {BoundaryEntry::Kind::kExit, EncodeWorkConfig(tm, wc),
                   pos < 0 ? Side::kLeft : Side::kRight};
          break;
        }
      }
    }
  }
  if (steps_taken != nullptr) *steps_taken = total_steps;
  return table;
}

std::uint64_t BoundaryTableBytes(const Tm& tm) {
  std::uint64_t count = tm.WorkConfigCount();
  std::uint64_t per_entry = 2 + Digits(count == 0 ? 0 : count - 1);
  return Digits(count) + 1 + SatMul(SatMul(count, 2), per_entry);
}

TmOutcome ChainBoundaryTables(const Tm& tm, std::span<const BoundaryTable> tables) {
  if (tables.empty()) throw std::invalid_argument("no boundary tables to chain");
  const std::size_t k = tables.size();
  std::uint64_t config = EncodeWorkConfig(tm, InitialWorkConfig(tm));
  std::size_t block = 0;
  Side side = Side::kLeft;
  const std::uint64_t limit = SatMul(SatMul(tm.WorkConfigCount(), k), 2);
  for (std::uint64_t crossings = 0; crossings <= limit; ++crossings) {
    const BoundaryEntry& e = tables[block].At(config, side);
    switch (e.kind) {
      case BoundaryEntry::Kind::kAccept: return TmOutcome::kAccept;
      case BoundaryEntry::Kind::kReject: return TmOutcome::kReject;
      case BoundaryEntry::Kind::kDiverged: return TmOutcome::kDiverged;
      case BoundaryEntry::Kind::kFault: return TmOutcome::kFault;
      case BoundaryEntry::Kind::kExit: break;
    }
    config = e.config;
    if (e.side == Side::kRight) {
      if (block + 1 >= k) return TmOutcome::kFault;
      ++block;
      side = Side::kLeft;
    } else {
      if (block == 0) return TmOutcome::kFault;
      --block;
      side = Side::kRight;
    }
  }
  return TmOutcome::kDiverged;
}

}  // namespace mrcsim
