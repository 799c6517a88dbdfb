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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "corpus.h"
#include "mrcsim/automata/interpreted.h"
#include "mrcsim/automata/random.h"
#include "mrcsim/core/engine.h"
#include "mrcsim/core/rational.h"
#include "mrcsim/core/sequential.h"
#include "mrcsim/translators/builtins.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {
namespace {

using testing::CorpusProgram;
using testing::ProgramCorpus;

unsigned __int128 Pow128(std::uint64_t b, std::int64_t e) {
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

TEST(RationalTest, CeilPowMatchesIntegerSearch) {
  const Rational exponents[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 1}, {3, 5}};
  for (const Rational& e : exponents) {
    for (std::uint64_t n = 0; n <= 3000; ++n) {
      const unsigned __int128 target = Pow128(n, e.num);
      std::uint64_t b = static_cast<std::uint64_t>(
          std::max(0.0, std::floor(std::pow(static_cast<double>(n), e.ToDouble())) - 3));
      while (Pow128(b, e.den) < target) ++b;
      ASSERT_EQ(CeilPow(n, e), b) << "n=" << n << " e=" << e.ToString();
    }
  }
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::Parse("1/2"), (Rational{1, 2}));
  EXPECT_EQ(Rational::Parse("3"), (Rational{3, 1}));
  EXPECT_EQ(Rational::Parse("3/4").ToString(), "3/4");
  EXPECT_THROW(Rational::Parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/0"), std::invalid_argument);
}

TEST(RationalTest, SaturatingHelpers) {
  EXPECT_EQ(SatMul(UINT64_MAX, 2), UINT64_MAX);
  EXPECT_EQ(SatAdd(UINT64_MAX, 1), UINT64_MAX);
  EXPECT_EQ(SatPow(2, 10), 1024u);
  EXPECT_EQ(CeilLog2(0), 0u);
  EXPECT_EQ(CeilLog2(1), 0u);
  EXPECT_EQ(CeilLog2(1024), 10u);
  EXPECT_EQ(CeilLog2(1025), 11u);
}

TEST(LimitsTest, RecordBytes) {
  EXPECT_EQ(RecordBytes(0), 4u);
  EXPECT_EQ(RecordBytes(9), 4u);
  EXPECT_EQ(RecordBytes(10), 6u);
  EXPECT_EQ(RecordBytes(4096), 10u);
}

TEST(LimitsTest, ValidateRejectsBadExponent) {
  ResourceLimits limits;
  limits.space_exponent = {1, 1};
  EXPECT_THROW(limits.Validate(), std::invalid_argument);
  limits.space_exponent = {1, 2};
  limits.keys_constant = {0, 1};
  EXPECT_THROW(limits.Validate(), std::invalid_argument);
}

TEST(EncodingTest, EncodesPositions) {
  InputEncoding in = EncodeInput("101");
  EXPECT_EQ(in.n, 3u);
  std::vector<KeyValuePair> expected{{"1", "1"}, {"2", "0"}, {"3", "1"}};
  EXPECT_EQ(in.pairs, expected);
  EXPECT_EQ(DecodeInput(in.pairs), "101");
}

TEST(EncodingTest, EmptyInput) {
  InputEncoding in = EncodeInput("");
  EXPECT_EQ(in.n, 0u);
  EXPECT_TRUE(in.pairs.empty());
  EXPECT_EQ(DecodeInput(in.pairs), "");
}

TEST(EncodingTest, RoundTripAnyOrder) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::string x = RandomString(rng, rng() % 300, "01ab");
    InputEncoding in = EncodeInput(x);
    std::shuffle(in.pairs.begin(), in.pairs.end(), rng);
    ASSERT_EQ(DecodeInput(in.pairs), x);
  }
}

TEST(EncodingTest, DecodeRejectsGapsAndDuplicates) {
  std::vector<KeyValuePair> gap{{"1", "0"}, {"3", "1"}};
  EXPECT_THROW(DecodeInput(gap), std::invalid_argument);
  std::vector<KeyValuePair> dup{{"1", "0"}, {"1", "1"}};
  EXPECT_THROW(DecodeInput(dup), std::invalid_argument);
}

TEST(ShuffleTest, GroupsInProvenanceOrder) {
  std::vector<KeyValuePair> v{{"a", "1"}, {"b", "2"}, {"a", "3"}};
  std::vector<KeyGroup> expected{{"a", {"1", "3"}}, {"b", {"2"}}};
  EXPECT_EQ(ShuffleAndSort(v), expected);
  EXPECT_TRUE(ShuffleAndSort({}).empty());
}

TEST(ShuffleTest, ConservesMultisetAndOrder) {
  std::mt19937_64 rng(11);
  std::vector<KeyValuePair> v;
  for (int i = 0; i < 10000; ++i) {
    v.push_back({RandomString(rng, 1 + rng() % 3, "xyz"), Dec(static_cast<std::uint64_t>(i))});
  }
  std::vector<KeyGroup> groups = ShuffleAndSort(v);
  std::size_t total = 0;
  std::map<std::string, std::vector<std::string>> oracle;
  for (const auto& p : v) oracle[p.key].push_back(p.value);
  ASSERT_EQ(groups.size(), oracle.size());
  auto it = oracle.begin();
  for (const auto& g : groups) {
    EXPECT_EQ(g.key, it->first);
    EXPECT_EQ(g.values, it->second);
    total += g.values.size();
    ++it;
  }
  EXPECT_EQ(total, v.size());
}

TEST(EngineTest, MatchesSequentialReferenceOnCorpus) {
  std::mt19937_64 rng(5);
  for (const CorpusProgram& c : ProgramCorpus()) {
    for (int t = 0; t < 15; ++t) {
      std::string x = c.input(rng, 40);
      InputEncoding in = c.Encode(x);
      RunResult run = mrcsim::Run(c.program, in);
      SequentialResult seq = SimulateSequential(c.program, in);
      ASSERT_EQ(run.verdict, seq.verdict) << c.name << " on '" << x << "'";
      ASSERT_EQ(run.output, seq.output) << c.name << " on '" << x << "'";
      ASSERT_EQ(run.report.rounds_executed, seq.rounds_executed) << c.name;
      ASSERT_EQ(run.report.simulated_sequential_time, seq.accounting.total) << c.name;
      ASSERT_EQ(run.report.violation, seq.violation) << c.name;
    }
  }
}

TEST(EngineTest, ScheduleAndThreadsDoNotChangeResults) {
  std::mt19937_64 rng(9);
  for (const CorpusProgram& c : ProgramCorpus()) {
    InputEncoding in = c.Encode(c.input(rng, 60));
    RunResult base = mrcsim::Run(c.program, in);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      for (int threads : {1, 2, 4}) {
        RunOptions opt;
        opt.schedule_seed = seed;
        opt.threads = threads;
        RunResult other = mrcsim::Run(c.program, in, opt);
        ASSERT_EQ(other.report, base.report) << c.name;
        ASSERT_EQ(other.output, base.output) << c.name;
      }
    }
  }
}

TEST(EngineTest, RoundsRespectRoundCount) {
  std::mt19937_64 rng(13);
  for (const CorpusProgram& c : ProgramCorpus()) {
    InputEncoding in = c.Encode(c.input(rng, 30));
    RunResult run = mrcsim::Run(c.program, in);
    EXPECT_LE(run.report.rounds_executed, c.program.rounds.At(in.n)) << c.name;
    EXPECT_EQ(run.report.rounds.size(), run.report.rounds_executed) << c.name;
  }
}

TEST(EngineTest, EnforceStopsAtFirstViolation) {
  ResourceLimits limits;
  limits.keys_constant = {1, 1};
  limits.enforcement = Enforcement::kEnforce;
  RunResult run = mrcsim::Run(FanoutProgram(limits), EncodeInput(std::string(16, '0')));
  EXPECT_EQ(run.verdict, Verdict::kResourceViolation);
  ASSERT_TRUE(run.report.violation.has_value());
  EXPECT_EQ(run.report.violation->bound, Bound::kKeysPerInvocation);
  EXPECT_EQ(run.report.violation->round, 1u);
  EXPECT_EQ(run.report.violation->phase, Phase::kMap);
  EXPECT_EQ(run.report.violation->processor, 0u);
  EXPECT_EQ(run.report.violation->measured, 16u);
  EXPECT_EQ(run.report.violation->limit, 4u);
}

TEST(EngineTest, RecordOnlyKeepsRunning) {
  ResourceLimits limits;
  limits.keys_constant = {1, 1};
  RunResult run = mrcsim::Run(FanoutProgram(limits), EncodeInput(std::string(16, '0')));
  EXPECT_EQ(run.verdict, Verdict::kAccept);
  EXPECT_FALSE(run.report.violation.has_value());
  EXPECT_GT(run.report.recorded_total, 0u);
  EXPECT_FALSE(run.report.LimitsRespected());
  EXPECT_EQ(run.report.recorded.front().bound, Bound::kKeysPerInvocation);
}

TEST(EngineTest, IdentityProgramAcceptsOnlyEmpty) {
  RunResult empty = mrcsim::Run(IdentityProgram(3), EncodeInput(""));
  EXPECT_EQ(empty.verdict, Verdict::kAccept);
  RunOptions opt;
  opt.keep_trace = true;
  InputEncoding in = EncodeInput("0110");
  RunResult run = mrcsim::Run(IdentityProgram(3), in, opt);
  EXPECT_EQ(run.verdict, Verdict::kReject);
  EXPECT_EQ(run.report.rounds_executed, 3u);
  EXPECT_EQ(run.output, in.pairs);
  ASSERT_EQ(run.trace.size(), 3u);
  for (std::size_t r = 0; r < run.trace.size(); ++r) {
    EXPECT_EQ(run.trace[r].pairs, in.pairs);
    EXPECT_EQ(run.trace[r].round_index, r + 1);
  }
}

TEST(EngineTest, RoundStateMatchesInitialState) {
  InputEncoding in = EncodeInput("011");
  RoundState s0 = InitialState(in);
  EXPECT_EQ(s0.round_index, 0u);
  EXPECT_EQ(s0.pairs, in.pairs);
  RoundOutcome one = RunRound(s0, IdentityProgram(2), in.n);
  EXPECT_EQ(one.next.round_index, 1u);
  EXPECT_EQ(one.next.pairs, in.pairs);
  EXPECT_EQ(one.metrics.total_pairs, 3u);
  EXPECT_EQ(one.metrics.output_pairs, 3u);
}

TEST(EngineTest, RoundLimitViolation) {
  ResourceLimits limits;
  limits.enforcement = Enforcement::kEnforce;
  RunResult run = mrcsim::Run(IdentityProgram(100, limits), EncodeInput("01"));
  EXPECT_EQ(run.verdict, Verdict::kResourceViolation);
  ASSERT_TRUE(run.report.violation.has_value());
  EXPECT_EQ(run.report.violation->bound, Bound::kRounds);
  EXPECT_EQ(run.report.violation->measured, 100u);
  EXPECT_EQ(run.report.violation->limit, 8u);
  EXPECT_EQ(run.report.rounds_executed, 0u);
}

class ThrowingBehavior : public RoundBehavior {
 public:
  void Map(const KeyValuePair& pair, Invocation&) const override {
    if (pair.key == "2") throw std::runtime_error("bad pair");
  }
  void Reduce(std::string_view, std::span<const KeyValuePair>, Invocation&) const override {}
};

TEST(EngineTest, BehaviorFailurePropagates) {
  MrcProgram program;
  program.name = "throws";
  program.behavior = std::make_shared<ThrowingBehavior>();
  EXPECT_THROW(mrcsim::Run(program, EncodeInput("000")), BehaviorError);
  EXPECT_THROW(SimulateSequential(program, EncodeInput("000")), BehaviorError);
}

TEST(EngineTest, InvalidProgramsAreRejected) {
  MrcProgram none;
  EXPECT_THROW(mrcsim::Run(none, EncodeInput("0")), ProgramError);
  MrcProgram zero = IdentityProgram(0);
  EXPECT_THROW(mrcsim::Run(zero, EncodeInput("0")), ProgramError);
}

TEST(EngineTest, InterpretedMachineOverBudgetFails) {
  const std::string alphabet = "0123456789:;#";
  std::vector<std::pair<std::pair<StateId, char>, TispAction>> delta;
  for (char c : alphabet + "_") delta.push_back({{0, c}, {0, c, Move::kRight}});
  TispMachine runaway(3, 0, 1, 2, alphabet, '_', delta, 1, 1);
  MrcProgram program;
  program.name = "runaway";
  program.behavior = std::make_shared<InterpretedBehavior>(runaway, ResourceLimits{});
  EXPECT_THROW(mrcsim::Run(program, EncodeInput("01")), BehaviorError);
}

TEST(EngineTest, InterpretedAcceptStateMachine) {
  TispMachine halt(2, 0, 0, 1, "01:;#", '_', {}, 1, 1);
  MrcProgram program;
  program.name = "halt";
  program.rounds = {0, 2};
  program.behavior = std::make_shared<InterpretedBehavior>(halt, ResourceLimits{});
  RunResult run = mrcsim::Run(program, EncodeInput("01"));
  EXPECT_EQ(run.verdict, Verdict::kAccept);
  EXPECT_EQ(run.report.rounds_executed, 1u);
}

// Mapper outputs recomputed outside the engine, grouped by an ordered map.
TEST(EngineTest, ReducerInputMeteringIsExact) {
  std::mt19937_64 rng(21);
  for (const CorpusProgram& c : ProgramCorpus()) {
    for (int t = 0; t < 5; ++t) {
      InputEncoding in = c.Encode(c.input(rng, 50));
      std::vector<KeyValuePair> u0 = in.pairs;
      if (in.n == 0 && c.program.seed_empty_input && u0.empty()) u0.push_back({"", ""});
      std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> groups;
      std::uint64_t max_keys = 0;
      for (const auto& p : u0) {
        Invocation inv(Phase::kMap, 1, in.n);
        c.program.behavior->Map(p, inv);
        std::map<std::string, int> keys;
        for (const auto& e : inv.output()) {
          groups[e.key].first += 1;
          groups[e.key].second += e.bytes();
          keys[e.key] = 1;
        }
        max_keys = std::max<std::uint64_t>(max_keys, keys.size());
      }
      std::uint64_t max_size = 0, max_bytes = 0;
      for (const auto& [k, g] : groups) {
        max_size = std::max(max_size, g.first);
        max_bytes = std::max(max_bytes, g.second);
      }
      RunResult run = mrcsim::Run(c.program, in);
      ASSERT_FALSE(run.report.rounds.empty());
      const RoundMetrics& m = run.report.rounds.front();
      EXPECT_EQ(m.max_group_size, max_size) << c.name;
      EXPECT_EQ(m.max_reducer_input_bytes, max_bytes) << c.name;
      EXPECT_EQ(m.total_distinct_keys, groups.size()) << c.name;
      EXPECT_EQ(m.max_keys_per_mapper, max_keys) << c.name;
      EXPECT_EQ(m.mapper_invocations, u0.size()) << c.name;
      EXPECT_EQ(m.reducer_invocations, groups.size()) << c.name;
    }
  }
}

TEST(EngineTest, WordCountExample) {
  InputEncoding in = EncodeTokens("the fox the");
  ASSERT_EQ(in.pairs.size(), 3u);
  EXPECT_EQ(in.pairs[0], (KeyValuePair{"1", "the"}));
  EXPECT_EQ(in.pairs[1], (KeyValuePair{"2", "fox"}));
  RunResult run = mrcsim::Run(CompileWordCount(), in);
  std::vector<KeyValuePair> expected{{"fox", "1"}, {"the", "2"}};
  EXPECT_EQ(run.output, expected);
}

TEST(EngineTest, AlwaysAcceptTakesOneRound) {
  for (std::string x : {"", "0", "0110"}) {
    RunResult run = mrcsim::Run(AlwaysAcceptProgram(), EncodeInput(x));
    EXPECT_EQ(run.verdict, Verdict::kAccept);
    EXPECT_EQ(run.report.rounds_executed, 1u);
  }
}

TEST(SequentialTest, EmptyInputChargesOnlySetup) {
  SequentialResult r = SimulateSequential(IdentityProgram(3), EncodeInput(""));
  EXPECT_EQ(r.verdict, Verdict::kAccept);
  EXPECT_EQ(r.accounting.mapper_steps, 0u);
  EXPECT_EQ(r.accounting.reducer_steps, 0u);
  EXPECT_EQ(r.accounting.shuffle_charge, 0u);
  EXPECT_EQ(r.accounting.setup_charge, SetupCharge(0, 1) + SetupCharge(0, 2) + SetupCharge(0, 3));
  EXPECT_EQ(r.accounting.total, r.accounting.setup_charge);
}

TEST(SequentialTest, EnvelopeFormula) {
  // m = max(n, 2); 8 * R * (m^(beta+1) + m^2 * ceil(log2 m))
  EXPECT_EQ(AccountingEnvelope(0, 1, 1), 8u * (4 + 4 * 1));
  EXPECT_EQ(AccountingEnvelope(16, 2, 1), 8u * 2 * (256 + 256 * 4));
  EXPECT_EQ(AccountingEnvelope(10, 3, 2), 8u * 3 * (1000 + 100 * 4));
}

TEST(SequentialTest, TotalsAreSumsOfRounds) {
  std::mt19937_64 rng(31);
  for (const CorpusProgram& c : ProgramCorpus()) {
    SequentialResult r = SimulateSequential(c.program, c.Encode(c.input(rng, 40)));
    std::uint64_t sum = 0;
    for (const auto& row : r.accounting.rounds) {
      EXPECT_EQ(row.shuffle_charge, ShuffleCharge(row.total_pairs));
      sum += row.total();
    }
    EXPECT_EQ(sum, r.accounting.total) << c.name;
    if (r.accounting.limits_respected) {
      EXPECT_LE(r.accounting.total, r.accounting.envelope);
    }
  }
}

}  // namespace
}  // namespace mrcsim
