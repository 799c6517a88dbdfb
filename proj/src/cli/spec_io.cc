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

#include "mrcsim/cli/spec_io.h"

#include <algorithm>
#include <map>
#include <set>

#include "mrcsim/bsp/cross.h"
#include "mrcsim/cli/regex.h"
#include "mrcsim/core/rational.h"
#include "mrcsim/automata/interpreted.h"
#include "mrcsim/translators/builtins.h"
#include "mrcsim/translators/dfa_to_mrc.h"
#include "mrcsim/translators/padding.h"
#include "mrcsim/translators/tisp_to_mrc.h"
#include "mrcsim/translators/tm_to_mrc.h"
#include "mrcsim/translators/unary.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {

using nlohmann::json;

namespace {

void CheckFields(const json& doc, std::initializer_list<const char*> allowed,
                 std::string_view what) {
  if (!doc.is_object()) throw SpecError(std::string(what) + " must be a JSON object");
  for (const auto& [name, value] : doc.items()) {
    bool known = name == "schema" || name == "kind";
    for (const char* a : allowed) known = known || name == a;
    if (!known) throw SpecError("unknown field '" + name + "' in " + std::string(what));
  }
}

const json& Field(const json& doc, const char* name, std::string_view what) {
  auto it = doc.find(name);
  if (it == doc.end()) throw SpecError(std::string(what) + " is missing '" + name + "'");
  return *it;
}

std::string GetString(const json& doc, const char* name, std::string_view what) {
  const json& v = Field(doc, name, what);
  if (!v.is_string()) throw SpecError(std::string(what) + " field '" + name + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t GetUint(const json& doc, const char* name, std::string_view what) {
  const json& v = Field(doc, name, what);
  if (!v.is_number_unsigned()) {
    throw SpecError(std::string(what) + " field '" + name + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

char GetSymbol(const json& doc, const char* name, std::string_view what) {
  std::string s = GetString(doc, name, what);
  if (s.size() != 1) throw SpecError(std::string(what) + " field '" + name + "' must be one symbol");
  return s[0];
}

Rational GetRational(const json& doc, const char* name, std::string_view what, Rational fallback) {
  auto it = doc.find(name);
  if (it == doc.end()) return fallback;
  if (!it->is_string()) {
    throw SpecError(std::string(what) + " field '" + name + "' must be a \"num/den\" string");
  }
  try {
    return Rational::Parse(it->get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(std::string(what) + " field '" + name + "': " + e.what());
  }
}

// Declared state names and their indices.
class StateTable {
 public:
  StateTable(const json& doc, std::string_view what) : what_(what) {
    const json& states = Field(doc, "states", what);
    if (!states.is_array() || states.empty()) {
      throw SpecError(std::string(what) + " needs a non-empty 'states' array");
    }
    for (const auto& s : states) {
      if (!s.is_string()) throw SpecError("state names must be strings");
      auto name = s.get<std::string>();
      if (!index_.emplace(name, static_cast<StateId>(names_.size())).second) {
        throw SpecError("state '" + name + "' declared twice");
      }
      names_.push_back(name);
    }
  }

  StateId operator()(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw SpecError("undeclared state '" + name + "' in " + what_);
    return it->second;
  }
  StateId Named(const json& doc, const char* field) const { return (*this)(GetString(doc, field, what_)); }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::string what_;
  std::vector<std::string> names_;
  std::map<std::string, StateId> index_;
};

std::vector<std::string> NamesOrDefault(const std::vector<std::string>& names, std::size_t count,
                                        const char* prefix) {
  if (names.size() == count) return names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Move ParseMove(const std::string& m, bool allow_stay) {
  if (m == "L") return Move::kLeft;
  if (m == "R") return Move::kRight;
  if (m == "S" && allow_stay) return Move::kStay;
  throw SpecError("invalid move '" + m + "'");
}

const char* MoveName(Move m) {
  switch (m) {
    case Move::kLeft: return "L";
    case Move::kStay: return "S";
    case Move::kRight: return "R";
  }
  return "?";
}

const std::string kWorkSymbols = "_abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

json NormalizeNested(const json& doc, const char* expected_kind, std::string_view what) {
  MachineSpec spec = NormalizeSpec(doc, false);
  if (spec.kind != expected_kind) {
    throw SpecError(std::string(what) + " must be a " + expected_kind + " spec, got " + spec.kind);
  }
  return spec.doc;
}

Dfa DfaOrRegex(const json& doc) {
  if (doc.contains("regex")) {
    CheckFields(doc, {"regex"}, "dfa spec");
    try {
      return CompileRegex(GetString(doc, "regex", "dfa spec"));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  }
  return DfaFromSpec(doc);
}

json NormalizePipeline(const json& doc) {
  const std::string what = "mrc-pipeline spec";
  const std::string builtin = GetString(doc, "builtin", what);
  json out = {{"kind", "mrc-pipeline"}, {"builtin", builtin}};
  auto epsilon = [&] {
    Rational e = GetRational(doc, "epsilon", what, {1, 2});
    if (!e.InOpenUnitInterval()) throw SpecError("epsilon must satisfy 0 < epsilon < 1");
    out["epsilon"] = e.ToString();
  };
  if (builtin == "dfa2mrc") {
    CheckFields(doc, {"builtin", "dfa", "epsilon"}, what);
    out["dfa"] = NormalizeNested(Field(doc, "dfa", what), "dfa", "'dfa'");
    epsilon();
  } else if (builtin == "tm2mrc") {
    CheckFields(doc, {"builtin", "tm", "epsilon"}, what);
    out["tm"] = NormalizeNested(Field(doc, "tm", what), "tm", "'tm'");
    epsilon();
  } else if (builtin == "tisp2mrc") {
    CheckFields(doc, {"builtin", "tisp", "epsilon"}, what);
    out["tisp"] = NormalizeNested(Field(doc, "tisp", what), "tisp", "'tisp'");
    epsilon();
  } else if (builtin == "padding") {
    CheckFields(doc, {"builtin", "base", "dfa"}, what);
    if (doc.contains("dfa") == doc.contains("base")) {
      throw SpecError("padding needs exactly one of 'base' and 'dfa'");
    }
    if (doc.contains("dfa")) {
      out["dfa"] = NormalizeNested(doc["dfa"], "dfa", "'dfa'");
    } else {
      std::string base = GetString(doc, "base", what);
      try {
        DeciderByName(base);
      } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
      }
      out["base"] = base;
    }
  } else if (builtin == "unary") {
    CheckFields(doc, {"builtin", "oracle"}, what);
    std::string oracle = GetString(doc, "oracle", what);
    try {
      OracleByName(oracle);
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
    out["oracle"] = oracle;
  } else if (builtin == "wordcount" || builtin == "always-accept" || builtin == "fanout") {
    CheckFields(doc, {"builtin"}, what);
  } else if (builtin == "identity") {
    CheckFields(doc, {"builtin", "rounds"}, what);
    out["rounds"] = GetUint(doc, "rounds", what);
    if (out["rounds"] == 0) throw SpecError("identity needs at least one round");
  } else if (builtin == "interpreted") {
    CheckFields(doc, {"builtin", "machine", "rounds", "acceptance"}, what);
    out["machine"] = NormalizeNested(Field(doc, "machine", what), "tisp", "'machine'");
    out["rounds"] = GetUint(doc, "rounds", what);
    if (out["rounds"] == 0) throw SpecError("interpreted program needs at least one round");
    std::string acceptance = doc.contains("acceptance") ? GetString(doc, "acceptance", what)
                                                        : std::string("accept-state");
    if (acceptance != "accept-state" && acceptance != "empty-final-round") {
      throw SpecError("unknown acceptance convention '" + acceptance + "'");
    }
    out["acceptance"] = acceptance;
  } else if (builtin == "bsp2mrc") {
    CheckFields(doc, {"builtin", "bsp"}, what);
    out["bsp"] = NormalizeNested(Field(doc, "bsp", what), "bsp", "'bsp'");
  } else {
    throw SpecError("unknown mrc-pipeline builtin '" + builtin + "'");
  }
  return out;
}

json NormalizeBsp(const json& doc) {
  const std::string what = "bsp spec";
  const std::string builtin = GetString(doc, "builtin", what);
  json out = {{"kind", "bsp"}, {"builtin", builtin}, {"p", GetUint(doc, "p", what)}};
  if (out["p"] == 0) throw SpecError("bsp spec needs p >= 1");
  if (builtin == "accept-immediately" || builtin == "ping-pong") {
    CheckFields(doc, {"builtin", "p"}, what);
  } else if (builtin == "echo") {
    CheckFields(doc, {"builtin", "p", "rounds"}, what);
    out["rounds"] = GetUint(doc, "rounds", what);
    if (out["rounds"] == 0) throw SpecError("echo needs at least one round");
  } else if (builtin == "mrc2bsp") {
    CheckFields(doc, {"builtin", "p", "program"}, what);
    out["program"] = NormalizeNested(Field(doc, "program", what), "mrc-pipeline", "'program'");
    if (out["program"]["builtin"] == "identity" ||
        (out["program"]["builtin"] == "interpreted" &&
         out["program"]["acceptance"] != "accept-state")) {
      throw SpecError("mrc2bsp needs an accept-state program");
    }
  } else {
    throw SpecError("unknown bsp builtin '" + builtin + "'");
  }
  return out;
}

}  // namespace

Dfa DfaFromSpec(const json& doc) {
  const std::string what = "dfa spec";
  if (doc.contains("regex")) return DfaOrRegex(doc);
  CheckFields(doc, {"alphabet", "states", "start", "accepting", "transitions"}, what);
  StateTable states(doc, what);
  const std::string alphabet = GetString(doc, "alphabet", what);
  if (alphabet.empty()) throw SpecError("dfa spec needs a non-empty alphabet");
  std::vector<bool> accepting(states.size(), false);
  const json& acc = Field(doc, "accepting", what);
  if (!acc.is_array()) throw SpecError("'accepting' must be an array of state names");
  for (const auto& a : acc) {
    if (!a.is_string()) throw SpecError("'accepting' must be an array of state names");
    accepting[states(a.get<std::string>())] = true;
  }
  const json& table = Field(doc, "transitions", what);
  if (!table.is_object()) throw SpecError("'transitions' must map states to symbol tables");
  std::vector<StateId> transitions(states.size() * alphabet.size(), 0);
  std::vector<bool> seen(transitions.size(), false);
  for (const auto& [from, row] : table.items()) {
    StateId s = states(from);
    if (!row.is_object()) throw SpecError("transitions of '" + from + "' must be an object");
    for (const auto& [symbol, to] : row.items()) {
      auto k = alphabet.find(symbol);
      if (symbol.size() != 1 || k == std::string::npos) {
        throw SpecError("transition of '" + from + "' on '" + symbol + "' is outside the alphabet");
      }
      if (!to.is_string()) throw SpecError("transition targets must be state names");
      transitions[s * alphabet.size() + k] = states(to.get<std::string>());
      seen[s * alphabet.size() + k] = true;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw SpecError("state '" + states.names()[i / alphabet.size()] + "' has no transition on '" +
                      alphabet[i % alphabet.size()] + "'");
    }
  }
  try {
    return Dfa(states.size(), alphabet, std::move(transitions), states.Named(doc, "start"),
               std::move(accepting), states.names());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("dfa spec: ") + e.what());
  }
}

json DfaToSpec(const Dfa& dfa) {
  auto names = NamesOrDefault(dfa.state_names(), dfa.num_states(), "q");
  json transitions = json::object();
  json accepting = json::array();
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    json row = json::object();
    for (std::size_t k = 0; k < dfa.alphabet().size(); ++k) {
      row[std::string(1, dfa.alphabet()[k])] = names[dfa.NextByIndex(s, k)];
    }
    transitions[names[s]] = row;
    if (dfa.accepting(s)) accepting.push_back(names[s]);
  }
  return {{"kind", "dfa"},           {"alphabet", dfa.alphabet()},
          {"states", names},         {"start", names[dfa.start()]},
          {"accepting", accepting},  {"transitions", transitions}};
}

Tm TmFromSpec(const json& doc) {
  const std::string what = "tm spec";
  CheckFields(doc, {"states", "start", "accept", "reject", "input_alphabet", "work_alphabet",
                    "work_space_bound", "delta"},
              what);
  StateTable states(doc, what);
  const std::string input = GetString(doc, "input_alphabet", what);
  if (input.find_first_of("<>") != std::string::npos) {
    throw SpecError("'<' and '>' are reserved for the end-markers");
  }
  const std::string work = GetString(doc, "work_alphabet", what);
  if (work.empty()) throw SpecError("tm spec needs a non-empty work alphabet (first symbol is blank)");
  const std::uint64_t space = GetUint(doc, "work_space_bound", what);
  const std::size_t input_symbols = input.size() + 2;
  std::vector<std::optional<TmAction>> delta(states.size() * input_symbols * work.size());
  auto input_index = [&](char c) -> std::size_t {
    if (c == '<') return kLeftMarker;
    if (c == '>') return kRightMarker;
    auto k = input.find(c);
    if (k == std::string::npos) throw SpecError(std::string("input symbol '") + c + "' is not declared");
    return k + 2;
  };
  auto work_index = [&](char c) -> std::uint8_t {
    auto k = work.find(c);
    if (k == std::string::npos) throw SpecError(std::string("work symbol '") + c + "' is not declared");
    return static_cast<std::uint8_t>(k);
  };
  const json& rows = Field(doc, "delta", what);
  if (!rows.is_array()) throw SpecError("'delta' must be an array");
  for (const auto& row : rows) {
    CheckFields(row, {"state", "input", "work", "next", "write", "work_move", "input_move"},
                "tm transition");
    StateId s = states.Named(row, "state");
    std::size_t in = input_index(GetSymbol(row, "input", "tm transition"));
    std::uint8_t w = work_index(GetSymbol(row, "work", "tm transition"));
    TmAction a{states.Named(row, "next"), work_index(GetSymbol(row, "write", "tm transition")),
               ParseMove(GetString(row, "work_move", "tm transition"), true),
               ParseMove(GetString(row, "input_move", "tm transition"), true)};
    auto& slot = delta[(s * input_symbols + in) * work.size() + w];
    if (slot) throw SpecError("duplicate tm transition from '" + states.names()[s] + "'");
    slot = a;
  }
  try {
    return Tm(states.size(), states.Named(doc, "start"), states.Named(doc, "accept"),
              states.Named(doc, "reject"), input, work.size(), space, std::move(delta),
              states.names());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("tm spec: ") + e.what());
  }
}

json TmToSpec(const Tm& tm) {
  auto names = NamesOrDefault(tm.state_names(), tm.num_states(), "s");
  if (tm.work_alphabet_size() > kWorkSymbols.size()) {
    throw SpecError("work alphabet too large to serialize");
  }
  const std::string work = kWorkSymbols.substr(0, tm.work_alphabet_size());
  auto input_char = [&](std::size_t k) {
    if (k == kLeftMarker) return '<';
    if (k == kRightMarker) return '>';
    return tm.input_alphabet()[k - 2];
  };
  json delta = json::array();
  for (StateId s = 0; s < tm.num_states(); ++s) {
    for (std::size_t in = 0; in < tm.num_input_symbols(); ++in) {
      for (std::size_t w = 0; w < work.size(); ++w) {
        const auto& a = tm.delta()[tm.DeltaIndex(s, in, static_cast<std::uint8_t>(w))];
        if (!a) continue;
        delta.push_back({{"state", names[s]},
                         {"input", std::string(1, input_char(in))},
                         {"work", std::string(1, work[w])},
                         {"next", names[a->next]},
                         {"write", std::string(1, work[a->write])},
                         {"work_move", MoveName(a->work_move)},
                         {"input_move", MoveName(a->input_move)}});
      }
    }
  }
  return {{"kind", "tm"},
          {"states", names},
          {"start", names[tm.initial()]},
          {"accept", names[tm.accept()]},
          {"reject", names[tm.reject()]},
          {"input_alphabet", tm.input_alphabet()},
          {"work_alphabet", work},
          {"work_space_bound", tm.work_space()},
          {"delta", delta}};
}

TispMachine TispFromSpec(const json& doc) {
  const std::string what = "tisp spec";
  CheckFields(doc, {"states", "start", "accept", "reject", "alphabet", "blank", "time_budget",
                    "space_budget", "delta"},
              what);
  StateTable states(doc, what);
  std::vector<std::pair<std::pair<StateId, char>, TispAction>> transitions;
  const json& rows = Field(doc, "delta", what);
  if (!rows.is_array()) throw SpecError("'delta' must be an array");
  for (const auto& row : rows) {
    CheckFields(row, {"state", "read", "next", "write", "move"}, "tisp transition");
    transitions.push_back({{states.Named(row, "state"), GetSymbol(row, "read", "tisp transition")},
                           {states.Named(row, "next"), GetSymbol(row, "write", "tisp transition"),
                            ParseMove(GetString(row, "move", "tisp transition"), false)}});
  }
  try {
    return TispMachine(states.size(), states.Named(doc, "start"), states.Named(doc, "accept"),
                       states.Named(doc, "reject"), GetString(doc, "alphabet", what),
                       GetSymbol(doc, "blank", what), std::move(transitions),
                       GetUint(doc, "time_budget", what), GetUint(doc, "space_budget", what),
                       states.names());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("tisp spec: ") + e.what());
  }
}

json TispToSpec(const TispMachine& m) {
  auto names = NamesOrDefault(m.state_names(), m.num_states(), "s");
  json delta = json::array();
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (char c : m.alphabet()) {
      if (!m.HasTransition(s, c)) continue;
      TispAction a = m.Lookup(s, c);
      delta.push_back({{"state", names[s]},
                       {"read", std::string(1, c)},
                       {"next", names[a.next]},
                       {"write", std::string(1, a.write)},
                       {"move", MoveName(a.move)}});
    }
  }
  return {{"kind", "tisp"},
          {"states", names},
          {"start", names[m.initial()]},
          {"accept", names[m.accept()]},
          {"reject", names[m.reject()]},
          {"alphabet", m.alphabet()},
          {"blank", std::string(1, m.blank())},
          {"time_budget", m.time_budget()},
          {"space_budget", m.space_budget()},
          {"delta", delta}};
}

MachineSpec NormalizeSpec(const json& doc, bool top_level) {
  if (!doc.is_object()) throw SpecError("a machine spec must be a JSON object");
  auto schema = doc.find("schema");
  if (schema != doc.end()) {
    if (!schema->is_string() || schema->get<std::string>() != kSchema) {
      throw SpecError(std::string("unsupported schema; expected \"") + kSchema + "\"");
    }
  } else if (top_level) {
    throw SpecError(std::string("spec is missing \"schema\": \"") + kSchema + "\"");
  }
  MachineSpec spec;
  spec.kind = GetString(doc, "kind", "machine spec");
  if (spec.kind == "dfa") {
    if (doc.contains("regex")) {
      DfaOrRegex(doc);
      spec.doc = {{"kind", "dfa"}, {"regex", doc["regex"]}};
    } else {
      spec.doc = DfaToSpec(DfaFromSpec(doc));
    }
  } else if (spec.kind == "tm") {
    spec.doc = TmToSpec(TmFromSpec(doc));
  } else if (spec.kind == "tisp") {
    spec.doc = TispToSpec(TispFromSpec(doc));
  } else if (spec.kind == "mrc-pipeline") {
    spec.doc = NormalizePipeline(doc);
  } else if (spec.kind == "bsp") {
    spec.doc = NormalizeBsp(doc);
  } else {
    throw SpecError("unknown spec kind '" + spec.kind + "'");
  }
  if (top_level) spec.doc["schema"] = kSchema;
  return spec;
}

MachineSpec ParseSpec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return NormalizeSpec(doc, true);
}

std::string SerializeSpec(const MachineSpec& spec) { return spec.doc.dump(2) + "\n"; }

bool UsesTokenInput(const json& doc) {
  return doc.value("kind", "") == "mrc-pipeline" && doc.value("builtin", "") == "wordcount";
}

MrcProgram ProgramFromSpec(const json& raw, const ResourceLimits& limits,
                           const BuildOptions& options) {
  const json doc = NormalizeSpec(raw, false).doc;
  if (doc["kind"] != "mrc-pipeline") throw SpecError("expected an mrc-pipeline spec");
  const std::string builtin = doc["builtin"];
  auto epsilon = [&] { return Rational::Parse(doc["epsilon"].get<std::string>()); };
  if (builtin == "dfa2mrc") {
    return CompileDfaToMrc(DfaOrRegex(doc["dfa"]), epsilon(), limits,
                           {options.mutate_reverse_composition});
  }
  if (builtin == "tm2mrc") return CompileSublogTmToMrc(TmFromSpec(doc["tm"]), epsilon(), limits);
  if (builtin == "tisp2mrc") return CompileTispToMrc(TispFromSpec(doc["tisp"]), epsilon(), limits);
  if (builtin == "padding") {
    NamedDecider base = doc.contains("dfa") ? DfaDecider(DfaOrRegex(doc["dfa"]))
                                            : DeciderByName(doc["base"].get<std::string>());
    return CompilePaddedDecider(std::move(base), limits);
  }
  if (builtin == "unary") return CompileUnary(OracleByName(doc["oracle"].get<std::string>()), limits);
  if (builtin == "wordcount") return CompileWordCount(limits);
  if (builtin == "always-accept") return AlwaysAcceptProgram(limits);
  if (builtin == "fanout") return FanoutProgram(limits);
  if (builtin == "identity") return IdentityProgram(doc["rounds"].get<std::uint64_t>(), limits);
  if (builtin == "interpreted") {
    MrcProgram program;
    program.name = "interpreted";
    program.rounds = {0, doc["rounds"].get<std::uint64_t>()};
    program.behavior = std::make_shared<InterpretedBehavior>(TispFromSpec(doc["machine"]), limits);
    program.limits = limits;
    program.acceptance = doc["acceptance"] == "accept-state" ? Acceptance::kAcceptState
                                                             : Acceptance::kEmptyFinalRound;
    return program;
  }
  if (builtin == "bsp2mrc") return BspToMrc(BspFromSpec(doc["bsp"], limits, options));
  throw SpecError("unknown mrc-pipeline builtin '" + builtin + "'");
}

BspMachine BspFromSpec(const json& raw, const ResourceLimits& limits, const BuildOptions& options) {
  const json doc = NormalizeSpec(raw, false).doc;
  if (doc["kind"] != "bsp") throw SpecError("expected a bsp spec");
  const std::string builtin = doc["builtin"];
  const auto p = doc["p"].get<std::uint64_t>();
  if (builtin == "accept-immediately") return AcceptImmediatelyMachine(p, limits);
  if (builtin == "ping-pong") return PingPongMachine(p, limits);
  if (builtin == "echo") return EchoMachine(p, doc["rounds"].get<std::uint64_t>(), limits);
  if (builtin == "mrc2bsp") return MrcToBsp(ProgramFromSpec(doc["program"], limits, options), p);
  throw SpecError("unknown bsp builtin '" + builtin + "'");
}

}  // namespace mrcsim
