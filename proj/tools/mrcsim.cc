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

// Command-line front end: run, compile, verify, wordcount.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mrcsim/cli/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Resource-metered MapReduce/BSP simulator"};
  app.require_subcommand(1);

  mrcsim::RunArgs run;
  std::uint64_t run_seed = 0;
  auto* run_cmd = app.add_subcommand("run", "Run a machine spec on an input file");
  run_cmd->add_option("--spec", run.spec_path, "Machine spec (JSON)")->required();
  run_cmd->add_option("--input", run.input_path, "Input file")->required();
  run_cmd->add_option("--limits", run.limits, "c=1/2,const=4,...,enforce|record-only");
  run_cmd->add_option("--report", run.report_path, "Write the JSON report here");
  auto* seed_opt = run_cmd->add_option("--seed", run_seed, "Permute the intra-round schedule");
  run_cmd->add_flag("--sequential", run.sequential, "Use the single-threaded reference simulator");
  run_cmd->add_option("--threads", run.threads, "Worker threads (0 = runtime default)");

  mrcsim::CompileArgs compile;
  std::uint64_t compile_n = 0;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a machine into another model");
  compile_cmd->add_option("--kind", compile.kind, "dfa2mrc|tm2mrc|tisp2mrc|mrc2bsp|bsp2mrc|pad-decider")
      ->required();
  compile_cmd->add_option("--spec", compile.spec_path, "Source machine spec");
  compile_cmd->add_option("--epsilon", compile.epsilon, "Block exponent as num/den");
  compile_cmd->add_option("--out", compile.out_path, "Output spec path (default: stdout)");
  compile_cmd->add_option("--base", compile.base, "Named base language for pad-decider");
  compile_cmd->add_option("--limits", compile.limits, "Limits for the feasibility check");
  auto* n_opt = compile_cmd->add_option("--n", compile_n, "Check tm2mrc space feasibility at this n");
  compile_cmd->add_option("--p", compile.processors, "Processors for mrc2bsp");

  mrcsim::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized comparison against an oracle");
  verify_cmd->add_option("--spec", verify.spec_path, "Machine spec")->required();
  verify_cmd->add_option("--oracle", verify.oracle, "dfa|tm|tisp|mrc-engine|bsp-engine")->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of random inputs");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest input length");
  verify_cmd->add_option("--seed", verify.seed, "Generator seed");
  verify_cmd->add_option("--epsilon", verify.epsilon, "Block exponent for compiled machines");
  verify_cmd->add_option("--limits", verify.limits, "Resource limits");
  verify_cmd->add_option("--mutate", verify.mutate, "Inject a known fault (reverse-composition)");
  verify_cmd->add_option("--p", verify.processors, "Processors for mrc2bsp");

  mrcsim::WordCountArgs wordcount;
  auto* wc_cmd = app.add_subcommand("wordcount", "Count whitespace-separated tokens");
  wc_cmd->add_option("--input", wordcount.input_path, "Text file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : mrcsim::kExitInvalid;
  }

  if (*run_cmd) {
    if (seed_opt->count() > 0) run.seed = run_seed;
    return mrcsim::CmdRun(run, std::cout, std::cerr);
  }
  if (*compile_cmd) {
    if (n_opt->count() > 0) compile.n = compile_n;
    return mrcsim::CmdCompile(compile, std::cout, std::cerr);
  }
  if (*verify_cmd) return mrcsim::CmdVerify(verify, std::cout, std::cerr);
  return mrcsim::CmdWordCount(wordcount, std::cout, std::cerr);
}
