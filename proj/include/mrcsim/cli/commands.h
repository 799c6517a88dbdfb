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
#include <iosfwd>
#include <optional>
#include <string>

namespace mrcsim {

enum ExitCode : int {
  kExitAccept = 0,
  kExitReject = 1,
  kExitViolation = 2,
  kExitInvalid = 3,
  kExitInternal = 4,
};

// verify reuses 0 for agreement and 1 for a counterexample.
inline constexpr int kExitAgree = 0;
inline constexpr int kExitDisagree = 1;

struct RunArgs {
  std::string spec_path;
  std::string input_path;
  std::string limits;
  std::string report_path;
  std::optional<std::uint64_t> seed;
  bool sequential = false;
  int threads = 0;
};

struct CompileArgs {
  std::string kind;  // dfa2mrc, tm2mrc, tisp2mrc, mrc2bsp, bsp2mrc, pad-decider
  std::string spec_path;
  std::string epsilon = "1/2";
  std::string out_path;  // empty writes to standard output
  std::string base;      // pad-decider base language by name
  std::string limits;    // used by the tm2mrc feasibility check
  std::optional<std::uint64_t> n;
  std::uint64_t processors = 4;
};

struct VerifyArgs {
  std::string spec_path;
  std::string oracle;  // dfa, tm, tisp, mrc-engine, bsp-engine
  std::uint64_t trials = 100;
  std::uint64_t max_n = 64;
  std::uint64_t seed = 1;
  std::string epsilon = "1/2";
  std::string limits;
  std::string mutate;  // "", or "reverse-composition"
  std::uint64_t processors = 4;
};

struct WordCountArgs {
  std::string input_path;
};

int CmdRun(const RunArgs& args, std::ostream& out, std::ostream& err);
int CmdCompile(const CompileArgs& args, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int CmdWordCount(const WordCountArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mrcsim
