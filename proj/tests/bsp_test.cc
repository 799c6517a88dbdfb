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

#include <random>

#include "corpus.h"
#include "mrcsim/automata/random.h"
#include "mrcsim/bsp/bsp.h"
#include "mrcsim/bsp/cross.h"
#include "mrcsim/core/engine.h"
#include "mrcsim/translators/builtins.h"
#include "mrcsim/translators/dfa_to_mrc.h"
#include "mrcsim/translators/unary.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {
namespace {

TEST(PieceTest, PiecesPartitionTheInput) {
  std::mt19937_64 rng(73);
  for (std::uint64_t n = 0; n <= 40; ++n) {
    std::string x = RandomString(rng, n);
    for (std::uint64_t p = 1; p <= 7; ++p) {
      std::string joined;
      for (std::uint64_t i = 1; i <= p; ++i) {
        std::string_view piece = InputPiece(x, p, i);
        EXPECT_EQ(piece.size(), n / p + (i <= n % p ? 1 : 0));
        EXPECT_EQ(PieceStart(n, p, i), joined.size() + 1);
        for (std::uint64_t k = 0; k < piece.size(); ++k) {
          EXPECT_EQ(PieceOwner(joined.size() + k + 1, n, p), i);
        }
        joined += piece;
      }
      EXPECT_EQ(joined, x);
    }
  }
}

TEST(BspTest, AcceptImmediately) {
  BspResult r = RunBsp(AcceptImmediatelyMachine(3), "0110");
  EXPECT_EQ(r.verdict, Verdict::kAccept);
  EXPECT_EQ(r.report.rounds_executed, 1u);
}

TEST(BspTest, PingPongAcceptsOnSecondReceipt) {
  BspRunOptions opt;
  opt.keep_trace = true;
  BspResult r = RunBsp(PingPongMachine(2), "01", opt);
  EXPECT_EQ(r.verdict, Verdict::kAccept);
  EXPECT_EQ(r.report.rounds_executed, 3u);
  ASSERT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(r.trace[1][1], (std::vector<Delivered>{{1, "ping:1"}}));
  EXPECT_EQ(r.trace[2][1], (std::vector<Delivered>{{1, "ping:2"}}));
  EXPECT_EQ(r.trace[2][0], (std::vector<Delivered>{{2, "pong:1"}}));
  EXPECT_EQ(RunBsp(PingPongMachine(1), "").report.rounds_executed, 3u);
}

TEST(BspTest, EchoKeepsStateAcrossRounds) {
  BspRunOptions opt;
  opt.keep_trace = true;
  const std::string x = "0110100111";
  BspResult r = RunBsp(EchoMachine(4, 3), x, opt);
  EXPECT_EQ(r.verdict, Verdict::kReject);
  EXPECT_EQ(r.report.rounds_executed, 3u);
  ASSERT_EQ(r.trace.size(), 3u);
  for (std::uint64_t i = 1; i <= 4; ++i) {
    std::string piece(InputPiece(x, 4, i));
    EXPECT_EQ(r.trace[0][i - 1], (std::vector<Delivered>{{0, piece}}));
    for (std::size_t round = 1; round < 3; ++round) {
      EXPECT_EQ(r.trace[round][i - 1], (std::vector<Delivered>{{i, piece}}));
    }
  }
  // Messages of the last round stay undelivered and form the output.
  std::string joined;
  for (const auto& m : r.output) {
    EXPECT_EQ(m.source, m.dest);
    joined += m.payload;
  }
  EXPECT_EQ(joined, x);
}

TEST(BspTest, ScrubbingScratchChangesNothing) {
  std::mt19937_64 rng(79);
  for (const auto& c : testing::BspCorpus()) {
    std::string x = RandomString(rng, rng() % 30);
    BspRunOptions scrub;
    scrub.scrub_between_rounds = true;
    BspResult a = RunBsp(c.machine, x);
    BspResult b = RunBsp(c.machine, x, scrub);
    EXPECT_EQ(a.report, b.report) << c.name;
    EXPECT_EQ(a.output, b.output) << c.name;
  }
}

TEST(BspTest, ScheduleAndThreadsDoNotChangeResults) {
  std::mt19937_64 rng(83);
  for (const auto& c : testing::BspCorpus()) {
    std::string x = RandomString(rng, rng() % 30);
    BspResult base = RunBsp(c.machine, x);
    for (std::uint64_t seed : {3u, 4u}) {
      for (int threads : {1, 3}) {
        BspRunOptions opt;
        opt.schedule_seed = seed;
        opt.threads = threads;
        BspResult other = RunBsp(c.machine, x, opt);
        ASSERT_EQ(other.report, base.report) << c.name;
        ASSERT_EQ(other.output, base.output) << c.name;
      }
    }
  }
}

class SendsNowhere : public BspBehavior {
 public:
  void Compute(std::span<const Delivered>, ProcessorContext& ctx) const override {
    ctx.Send(ctx.p() + 1, "x");
  }
};

TEST(BspTest, InvalidDestinationIsABehaviorError) {
  BspMachine m{"nowhere", 2, {0, 2}, std::make_shared<SendsNowhere>(), {}};
  EXPECT_THROW(RunBsp(m, "01"), BehaviorError);
}

TEST(BspTest, TooManyProcessorsIsAViolation) {
  ResourceLimits limits;
  limits.enforcement = Enforcement::kEnforce;
  BspResult r = RunBsp(AcceptImmediatelyMachine(100, limits), "01");
  EXPECT_EQ(r.verdict, Verdict::kResourceViolation);
  ASSERT_TRUE(r.report.violation.has_value());
  EXPECT_EQ(r.report.violation->bound, Bound::kProcessors);
}

TEST(CrossTest, FnvVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
  for (std::uint64_t p = 1; p <= 5; ++p) {
    std::uint64_t owner = KeyOwner("foobar", p);
    EXPECT_GE(owner, 1u);
    EXPECT_LE(owner, p);
  }
}

TEST(CrossTest, FieldEncodingRoundTrips) {
  std::vector<std::string_view> fields{"", "a:b", "12", std::string_view("\0x", 2)};
  std::string enc = EncodeFields(fields);
  std::vector<std::string> dec = DecodeFields(enc);
  ASSERT_EQ(dec.size(), fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) EXPECT_EQ(dec[i], fields[i]);
}

TEST(CrossTest, MrcToBspReproducesWordCountOutput) {
  std::mt19937_64 rng(89);
  MrcProgram wc = CompileWordCount();
  for (int t = 0; t < 30; ++t) {
    std::string x = RandomString(rng, rng() % 40, "abc");
    RunResult mrc = mrcsim::Run(wc, EncodeInput(x));
    BspResult bsp = RunBsp(MrcToBsp(wc, 4), x);
    EXPECT_EQ(MrcOutputFromBsp(bsp.output), mrc.output) << x;
    EXPECT_EQ(bsp.report.rounds_executed, 2 * mrc.report.rounds_executed);
  }
}

TEST(CrossTest, MrcToBspAlwaysAcceptTakesTwoRounds) {
  BspResult r = RunBsp(MrcToBsp(AlwaysAcceptProgram(), 3), "0101");
  EXPECT_EQ(r.verdict, Verdict::kAccept);
  EXPECT_EQ(r.report.rounds_executed, 2u);
}

TEST(CrossTest, MrcToBspDfaAtSeveralProcessorCounts) {
  std::mt19937_64 rng(97);
  Dfa dfa = RandomDfa(rng, 6);
  MrcProgram p = CompileDfaToMrc(dfa, {1, 2});
  for (std::uint64_t procs : {2u, 8u}) {
    for (int t = 0; t < 20; ++t) {
      std::string x = RandomString(rng, rng() % 50);
      BspResult r = RunBsp(MrcToBsp(p, procs), x);
      EXPECT_EQ(r.verdict == Verdict::kAccept, DfaAccepts(dfa, x));
      EXPECT_EQ(r.report.rounds_executed, 4u);
    }
  }
}

TEST(CrossTest, MrcToBspNeedsAcceptState) {
  EXPECT_THROW(MrcToBsp(IdentityProgram(2), 3), ProgramError);
}

TEST(CrossTest, BspToMrcKeepsRounds) {
  RunResult ping = mrcsim::Run(BspToMrc(PingPongMachine(2)), EncodeInput("01"));
  EXPECT_EQ(ping.verdict, Verdict::kAccept);
  EXPECT_EQ(ping.report.rounds_executed, 3u);
  RunResult now = mrcsim::Run(BspToMrc(AcceptImmediatelyMachine(3)), EncodeInput(""));
  EXPECT_EQ(now.verdict, Verdict::kAccept);
  EXPECT_EQ(now.report.rounds_executed, 1u);
}

TEST(CrossTest, RoundTripThroughBothDirections) {
  MrcProgram even = CompileUnary(OracleByName("even"));
  MrcProgram back = BspToMrc(MrcToBsp(even, 3));
  for (std::uint64_t n = 0; n <= 12; ++n) {
    std::string x(n, '1');
    RunResult direct = mrcsim::Run(even, EncodeInput(x));
    RunResult twice = mrcsim::Run(back, EncodeInput(x));
    EXPECT_EQ(twice.verdict, direct.verdict) << n;
    EXPECT_EQ(twice.report.rounds_executed, 2 * direct.report.rounds_executed) << n;
  }
}

}  // namespace
}  // namespace mrcsim
