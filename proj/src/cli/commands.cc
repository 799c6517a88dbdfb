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

#include "mrcsim/cli/commands.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mrcsim/automata/random.h"
#include "mrcsim/bsp/cross.h"
#include "mrcsim/cli/report_io.h"
#include "mrcsim/cli/spec_io.h"
#include "mrcsim/core/engine.h"
#include "mrcsim/core/sequential.h"
#include "mrcsim/translators/dfa_to_mrc.h"
#include "mrcsim/translators/padding.h"
#include "mrcsim/translators/tisp_to_mrc.h"
#include "mrcsim/translators/tm_to_mrc.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

// Bit-string inputs are one line; a single trailing newline is not input.
std::string StripNewline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

template <typename Fn>
int Guarded(std::ostream& err, const char* command, Fn fn) {
  try {
    return fn();
  } catch (const SpecError& e) {
    err << command << ": invalid spec: " << e.what() << "\n";
  } catch (const InfeasibleSpace& e) {
    err << command << ": infeasible space: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << command << ": " << e.what() << "\n";
  } catch (const BehaviorError& e) {
    err << command << ": behavior error: " << e.what() << "\n";
  } catch (const ProgramError& e) {
    err << command << ": invalid program: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << command << ": invalid document: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << command << ": invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << command << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (...) {
    err << command << ": internal error\n";
    return kExitInternal;
  }
  return kExitInvalid;
}

int VerdictExit(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return kExitAccept;
    case Verdict::kReject: return kExitReject;
    case Verdict::kResourceViolation: return kExitViolation;
  }
  return kExitInternal;
}

std::string TispInputAlphabet(const TispMachine& m) {
  std::string a;
  for (char c : m.alphabet()) {
    if (c != m.blank()) a.push_back(c);
  }
  return a.empty() ? std::string("01") : a;
}

struct Outcome {
  Verdict verdict = Verdict::kReject;
  std::optional<ResourceViolation> violation;
};

Outcome RunSpec(const MachineSpec& spec, const std::string& raw, const ResourceLimits& limits,
                const RunArgs& args, json& doc) {
  const std::string x = StripNewline(raw);
  if (spec.kind == "dfa") {
    bool ok = DfaAccepts(DfaFromSpec(spec.doc), x);
    doc["engine"] = "dfa";
    doc["n"] = x.size();
    doc["report"] = {{"steps", x.size()}};
    return {ok ? Verdict::kAccept : Verdict::kReject, std::nullopt};
  }
  if (spec.kind == "tm") {
    TmOutcome o = RunTm(TmFromSpec(spec.doc), x);
    doc["engine"] = "tm";
    doc["n"] = x.size();
    doc["report"] = {{"outcome", ToString(o)}};
    return {o == TmOutcome::kAccept ? Verdict::kAccept : Verdict::kReject, std::nullopt};
  }
  if (spec.kind == "tisp") {
    TispResult r = RunTisp(TispFromSpec(spec.doc), x);
    doc["engine"] = "tisp";
    doc["n"] = x.size();
    doc["report"] = {{"outcome", ToString(r.outcome)}, {"steps", r.steps}, {"cells", r.cells}};
    return {r.outcome == TispOutcome::kAccept ? Verdict::kAccept : Verdict::kReject, std::nullopt};
  }
  if (spec.kind == "bsp") {
    BspMachine machine = BspFromSpec(spec.doc, limits);
    BspRunOptions options;
    options.schedule_seed = args.seed;
    options.threads = args.threads;
    BspResult r = RunBsp(machine, x, options);
    doc["engine"] = "bsp";
    doc["n"] = x.size();
    doc["rounds_executed"] = r.report.rounds_executed;
    doc["report"] = ReportToJson(r.report);
    return {r.verdict, r.report.violation};
  }
  MrcProgram program = ProgramFromSpec(spec.doc, limits);
  const InputEncoding input = UsesTokenInput(spec.doc) ? EncodeTokens(raw) : EncodeInput(x);
  doc["n"] = input.n;
  if (args.sequential) {
    SequentialResult r = SimulateSequential(program, input);
    doc["engine"] = "sequential";
    doc["rounds_executed"] = r.rounds_executed;
    doc["report"] = {{"accounting", AccountingToJson(r.accounting)},
                     {"violation", r.violation ? ViolationToJson(*r.violation) : json(nullptr)}};
    return {r.verdict, r.violation};
  }
  RunOptions options;
  options.schedule_seed = args.seed;
  options.threads = args.threads;
  RunResult r = Run(program, input, options);
  doc["engine"] = "mrc";
  doc["rounds_executed"] = r.report.rounds_executed;
  doc["report"] = ReportToJson(r.report);
  return {r.verdict, r.report.violation};
}

}  // namespace

int CmdRun(const RunArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, "run", [&] {
    const auto start = std::chrono::steady_clock::now();
    const std::string spec_text = ReadFile(args.spec_path);
    const std::string input = ReadFile(args.input_path);
    const MachineSpec spec = ParseSpec(spec_text);
    const ResourceLimits limits = ParseLimitsFlag(args.limits);
    json doc = {{"schema", kSchema},
                {"version", kVersion},
                {"command", "run"},
                {"kind", spec.kind},
                {"spec_sha256", Sha256Hex(spec_text)},
                {"input_sha256", Sha256Hex(input)},
                {"limits", LimitsToJson(limits)}};
    Outcome outcome = RunSpec(spec, input, limits, args, doc);
    doc["verdict"] = ToString(outcome.verdict);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["wall_clock_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (!args.report_path.empty()) WriteFile(args.report_path, doc.dump(2) + "\n");
    out << ToString(outcome.verdict) << "\n";
    if (outcome.violation) err << "run: resource violation: " << outcome.violation->Describe() << "\n";
    return VerdictExit(outcome.verdict);
  });
}

int CmdCompile(const CompileArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, "compile", [&] {
    const Rational epsilon = Rational::Parse(args.epsilon);
    if (!epsilon.InOpenUnitInterval()) throw SpecError("epsilon must satisfy 0 < epsilon < 1");
    const ResourceLimits limits = ParseLimitsFlag(args.limits);
    std::optional<MachineSpec> source;
    if (!args.spec_path.empty()) source = ParseSpec(ReadFile(args.spec_path));
    auto need = [&](const char* kind) -> json {
      if (!source) throw SpecError(args.kind + " needs --spec");
      if (source->kind != kind) {
        throw SpecError(args.kind + " needs a " + kind + " spec, got " + source->kind);
      }
      json nested = source->doc;
      nested.erase("schema");
      return nested;
    };
    json result;
    if (args.kind == "dfa2mrc") {
      result = {{"kind", "mrc-pipeline"}, {"builtin", "dfa2mrc"}, {"dfa", need("dfa")},
                {"epsilon", epsilon.ToString()}};
    } else if (args.kind == "tm2mrc") {
      json tm = need("tm");
      if (args.n) CompileSublogTmToMrc(TmFromSpec(tm), epsilon, limits, args.n);
      result = {{"kind", "mrc-pipeline"}, {"builtin", "tm2mrc"}, {"tm", tm},
                {"epsilon", epsilon.ToString()}};
    } else if (args.kind == "tisp2mrc") {
      result = {{"kind", "mrc-pipeline"}, {"builtin", "tisp2mrc"}, {"tisp", need("tisp")},
                {"epsilon", epsilon.ToString()}};
    } else if (args.kind == "mrc2bsp") {
      result = {{"kind", "bsp"}, {"builtin", "mrc2bsp"}, {"p", args.processors},
                {"program", need("mrc-pipeline")}};
    } else if (args.kind == "bsp2mrc") {
      result = {{"kind", "mrc-pipeline"}, {"builtin", "bsp2mrc"}, {"bsp", need("bsp")}};
    } else if (args.kind == "pad-decider") {
      if (!args.base.empty()) {
        result = {{"kind", "mrc-pipeline"}, {"builtin", "padding"}, {"base", args.base}};
      } else {
        result = {{"kind", "mrc-pipeline"}, {"builtin", "padding"}, {"dfa", need("dfa")}};
      }
    } else {
      throw SpecError("unknown compile kind '" + args.kind + "'");
    }
    result["schema"] = kSchema;
    MachineSpec compiled = NormalizeSpec(result, true);
    if (compiled.kind == "bsp") {
      BspFromSpec(compiled.doc, limits);
    } else {
      ProgramFromSpec(compiled.doc, limits);
    }
    const std::string text = SerializeSpec(compiled);
    if (args.out_path.empty()) {
      out << text;
    } else {
      WriteFile(args.out_path, text);
    }
    return 0;
  });
}

namespace {

// One randomized comparison: produce an input of length about n, then report
// a disagreement description or nothing.
struct Harness {
  std::function<std::string(std::mt19937_64&, std::uint64_t)> input;
  std::function<std::optional<std::string>(const std::string&, std::uint64_t)> compare;
};

std::string RandomTokens(std::mt19937_64& rng, std::uint64_t count) {
  static const char* kWords[] = {"the", "fox", "a", "b", "dog", "the"};
  std::string text;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i > 0) text.push_back(rng() % 4 == 0 ? '\n' : ' ');
    text += kWords[rng() % 6];
  }
  return text;
}

std::function<std::string(std::mt19937_64&, std::uint64_t)> PipelineInputs(const json& doc) {
  const std::string builtin = doc.value("builtin", "");
  if (builtin == "wordcount") return RandomTokens;
  if (builtin == "unary") {
    return [](std::mt19937_64& rng, std::uint64_t n) {
      return rng() % 4 == 0 ? RandomString(rng, n) : std::string(n, '1');
    };
  }
  if (builtin == "padding") {
    return [](std::mt19937_64& rng, std::uint64_t n) {
      if (rng() % 2 == 0) return RandomString(rng, n);
      std::uint64_t k = 0;
      while ((k + 1) + (k + 1) * (k + 1) <= n) ++k;
      return PadString(RandomString(rng, k));
    };
  }
  std::string alphabet = "01";
  if (builtin == "dfa2mrc") alphabet = DfaFromSpec(doc["dfa"]).alphabet();
  if (builtin == "tm2mrc") alphabet = TmFromSpec(doc["tm"]).input_alphabet();
  if (builtin == "tisp2mrc") alphabet = TispInputAlphabet(TispFromSpec(doc["tisp"]));
  if (alphabet.empty()) alphabet = "01";
  return [alphabet](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n, alphabet); };
}

json NestedMachine(const MachineSpec& spec, const char* kind, const char* builtin) {
  if (spec.kind == kind) return spec.doc;
  if (spec.kind == "mrc-pipeline" && spec.doc["builtin"] == builtin) return spec.doc[kind];
  throw SpecError(std::string("oracle needs a ") + kind + " spec or a " + builtin + " pipeline");
}

std::string Disagree(const char* what, Verdict compiled, Verdict oracle) {
  return std::string(what) + ": compiled " + ToString(compiled) + ", oracle " + ToString(oracle);
}

Verdict FromBool(bool accept) { return accept ? Verdict::kAccept : Verdict::kReject; }

Harness MakeHarness(const MachineSpec& spec, const VerifyArgs& args, const ResourceLimits& limits) {
  const Rational epsilon = Rational::Parse(args.epsilon);
  BuildOptions build;
  if (!args.mutate.empty()) {
    if (args.mutate != "reverse-composition") throw SpecError("unknown mutation '" + args.mutate + "'");
    build.mutate_reverse_composition = true;
  }
  Harness h;
  if (args.oracle == "dfa") {
    Dfa dfa = DfaFromSpec(NestedMachine(spec, "dfa", "dfa2mrc"));
    MrcProgram program = CompileDfaToMrc(dfa, epsilon, limits, {build.mutate_reverse_composition});
    const std::string alphabet = dfa.alphabet();
    h.input = [alphabet](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n, alphabet); };
    h.compare = [dfa, program](const std::string& x, std::uint64_t) -> std::optional<std::string> {
      RunResult r = Run(program, EncodeInput(x));
      Verdict expect = FromBool(DfaAccepts(dfa, x));
      if (r.verdict != expect) return Disagree("verdict", r.verdict, expect);
      if (r.report.rounds_executed != 2) return "rounds_executed " + std::to_string(r.report.rounds_executed) + " != 2";
      return std::nullopt;
    };
  } else if (args.oracle == "tm") {
    Tm tm = TmFromSpec(NestedMachine(spec, "tm", "tm2mrc"));
    MrcProgram program = CompileSublogTmToMrc(tm, epsilon, limits);
    const std::string alphabet = tm.input_alphabet().empty() ? "01" : tm.input_alphabet();
    h.input = [alphabet](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n, alphabet); };
    h.compare = [tm, program](const std::string& x, std::uint64_t) -> std::optional<std::string> {
      RunResult r = Run(program, EncodeInput(x));
      Verdict expect = FromBool(RunTm(tm, x) == TmOutcome::kAccept);
      if (r.verdict != expect) return Disagree("verdict", r.verdict, expect);
      return std::nullopt;
    };
  } else if (args.oracle == "tisp") {
    TispMachine machine = TispFromSpec(NestedMachine(spec, "tisp", "tisp2mrc"));
    MrcProgram program = CompileTispToMrc(machine, epsilon, limits);
    const std::string alphabet = TispInputAlphabet(machine);
    h.input = [alphabet](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n, alphabet); };
    h.compare = [machine, program](const std::string& x, std::uint64_t) -> std::optional<std::string> {
      RunResult r = Run(program, EncodeInput(x));
      TispResult t = RunTisp(machine, x);
      Verdict expect = FromBool(t.outcome == TispOutcome::kAccept);
      if (r.verdict != expect) return Disagree("verdict", r.verdict, expect);
      const std::uint64_t rounds = std::max<std::uint64_t>(t.steps, 1);
      if (r.report.rounds_executed != rounds) {
        return "rounds_executed " + std::to_string(r.report.rounds_executed) + ", oracle steps " +
               std::to_string(t.steps);
      }
      return std::nullopt;
    };
  } else if (args.oracle == "mrc-engine") {
    if (spec.kind != "mrc-pipeline") throw SpecError("mrc-engine oracle needs an mrc-pipeline spec");
    MrcProgram program = ProgramFromSpec(spec.doc, limits, build);
    const bool tokens = UsesTokenInput(spec.doc);
    h.input = PipelineInputs(spec.doc);
    h.compare = [program, tokens](const std::string& x, std::uint64_t trial) -> std::optional<std::string> {
      InputEncoding input = tokens ? EncodeTokens(x) : EncodeInput(x);
      RunOptions options;
      options.schedule_seed = trial;
      RunResult r = Run(program, input, options);
      SequentialResult s = SimulateSequential(program, input);
      if (r.verdict != s.verdict) return Disagree("verdict", r.verdict, s.verdict);
      if (r.report.rounds_executed != s.rounds_executed) return std::string("rounds_executed differ");
      if (r.output != s.output) return std::string("final pairs differ");
      return std::nullopt;
    };
  } else if (args.oracle == "bsp-engine") {
    if (spec.kind == "mrc-pipeline") {
      MrcProgram program = ProgramFromSpec(spec.doc, limits, build);
      BspMachine machine = MrcToBsp(program, args.processors);
      h.input = PipelineInputs(spec.doc);
      if (UsesTokenInput(spec.doc)) {
        h.input = [](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n, "ab"); };
      }
      h.compare = [program, machine](const std::string& x, std::uint64_t) -> std::optional<std::string> {
        RunResult r = Run(program, EncodeInput(x));
        BspResult b = RunBsp(machine, x);
        if (b.verdict != r.verdict) return Disagree("verdict", b.verdict, r.verdict);
        if (b.report.rounds_executed != 2 * r.report.rounds_executed) {
          return "BSP rounds " + std::to_string(b.report.rounds_executed) + " != 2 x " +
                 std::to_string(r.report.rounds_executed);
        }
        if (MrcOutputFromBsp(b.output) != r.output) return std::string("final pairs differ");
        return std::nullopt;
      };
    } else if (spec.kind == "bsp") {
      BspMachine machine = BspFromSpec(spec.doc, limits, build);
      MrcProgram program = BspToMrc(machine);
      h.input = [](std::mt19937_64& rng, std::uint64_t n) { return RandomString(rng, n); };
      h.compare = [program, machine](const std::string& x, std::uint64_t) -> std::optional<std::string> {
        BspResult b = RunBsp(machine, x);
        RunResult r = Run(program, EncodeInput(x));
        if (r.verdict != b.verdict) return Disagree("verdict", r.verdict, b.verdict);
        if (r.report.rounds_executed != b.report.rounds_executed) {
          return "MRC rounds " + std::to_string(r.report.rounds_executed) + " != BSP rounds " +
                 std::to_string(b.report.rounds_executed);
        }
        return std::nullopt;
      };
    } else {
      throw SpecError("bsp-engine oracle needs an mrc-pipeline or bsp spec");
    }
  } else {
    throw SpecError("unknown oracle '" + args.oracle + "'");
  }
  return h;
}

}  // namespace

int CmdVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, "verify", [&] {
    const MachineSpec spec = ParseSpec(ReadFile(args.spec_path));
    const ResourceLimits limits = ParseLimitsFlag(args.limits);
    Harness h = MakeHarness(spec, args, limits);
    if (args.trials == 0) {
      err << "verify: warning: 0 trials requested; nothing was checked\n";
      out << "verify: 0/0 trials agree (vacuous)\n";
      return kExitAgree;
    }
    std::mt19937_64 rng(args.seed);
    for (std::uint64_t t = 0; t < args.trials; ++t) {
      const std::uint64_t n = rng() % (args.max_n + 1);
      const std::string x = h.input(rng, n);
      if (auto diff = h.compare(x, t)) {
        out << "verify: counterexample at trial " << t + 1 << " of " << args.trials << " (n=" << x.size()
            << ")\n";
        out << "  input: \"" << x << "\"\n";
        out << "  " << *diff << "\n";
        out << "  reproduce: mrcsim verify --spec " << args.spec_path << " --oracle " << args.oracle
            << " --trials " << args.trials << " --max-n " << args.max_n << " --seed " << args.seed
            << " --epsilon " << args.epsilon << " --p " << args.processors;
        if (!args.limits.empty()) out << " --limits " << args.limits;
        if (!args.mutate.empty()) out << " --mutate " << args.mutate;
        out << "\n";
        return kExitDisagree;
      }
    }
    out << "verify: " << args.trials << "/" << args.trials << " trials agree (oracle " << args.oracle
        << ", seed " << args.seed << ", max n " << args.max_n << ")\n";
    return kExitAgree;
  });
}

int CmdWordCount(const WordCountArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, "wordcount", [&] {
    const std::string text = ReadFile(args.input_path);
    RunResult r = Run(CompileWordCount(), EncodeTokens(text));
    for (const auto& p : r.output) out << p.key << "\t" << p.value << "\n";
    return 0;
  });
}

}  // namespace mrcsim
