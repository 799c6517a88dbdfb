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

// Parallel engine against the sequential reference on the same programs.

#include <benchmark/benchmark.h>

#include <random>

#include "mrcsim/automata/random.h"
#include "mrcsim/core/engine.h"
#include "mrcsim/core/sequential.h"
#include "mrcsim/translators/dfa_to_mrc.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {
namespace {

const MrcProgram& DfaProgram() {
  static const MrcProgram program = [] {
    std::mt19937_64 rng(7);
    return CompileDfaToMrc(RandomDfa(rng, 10), {1, 2});
  }();
  return program;
}

InputEncoding Bits(std::uint64_t n) {
  std::mt19937_64 rng(n);
  return EncodeInput(RandomString(rng, n));
}

InputEncoding Words(std::uint64_t count) {
  std::mt19937_64 rng(count);
  std::string text;
  for (std::uint64_t i = 0; i < count; ++i) {
    text += RandomString(rng, 1 + rng() % 4, "abcd");
    text.push_back(' ');
  }
  return EncodeTokens(text);
}

void BM_RunDfa(benchmark::State& state) {
  InputEncoding in = Bits(static_cast<std::uint64_t>(state.range(0)));
  RunOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Run(DfaProgram(), in, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SequentialDfa(benchmark::State& state) {
  InputEncoding in = Bits(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SimulateSequential(DfaProgram(), in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunWordCount(benchmark::State& state) {
  InputEncoding in = Words(static_cast<std::uint64_t>(state.range(0)));
  MrcProgram program = CompileWordCount();
  RunOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Run(program, in, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SequentialWordCount(benchmark::State& state) {
  InputEncoding in = Words(static_cast<std::uint64_t>(state.range(0)));
  MrcProgram program = CompileWordCount();
  for (auto _ : state) benchmark::DoNotOptimize(SimulateSequential(program, in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_RunDfa)->ArgsProduct({{1 << 14, 1 << 18}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SequentialDfa)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunWordCount)->ArgsProduct({{1 << 12, 1 << 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SequentialWordCount)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mrcsim

BENCHMARK_MAIN();
