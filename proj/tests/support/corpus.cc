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

#include "corpus.h"

#include "mrcsim/automata/dfa.h"
#include "mrcsim/automata/interpreted.h"
#include "mrcsim/automata/random.h"
#include "mrcsim/bsp/cross.h"
#include "mrcsim/cli/regex.h"
#include "mrcsim/translators/builtins.h"
#include "mrcsim/translators/dfa_to_mrc.h"
#include "mrcsim/translators/padding.h"
#include "mrcsim/translators/tisp_to_mrc.h"
#include "mrcsim/translators/tm_to_mrc.h"
#include "mrcsim/translators/unary.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim::testing {
namespace {

std::string Bits(std::mt19937_64& rng, std::uint64_t max_n) {
  return RandomString(rng, rng() % (max_n + 1));
}

std::string Ones(std::mt19937_64& rng, std::uint64_t max_n) {
  if (rng() % 5 == 0) return Bits(rng, max_n);
  return std::string(rng() % (max_n + 1), '1');
}

std::string Padded(std::mt19937_64& rng, std::uint64_t max_n) {
  if (rng() % 3 == 0) return Bits(rng, max_n);
  std::uint64_t k = 0;
  while ((k + 1) + (k + 1) * (k + 1) <= max_n) ++k;
  return PadString(RandomString(rng, rng() % (k + 1)));
}

std::string Words(std::mt19937_64& rng, std::uint64_t max_n) {
  return RandomString(rng, rng() % (max_n + 1), "abc");
}

TispMachine HaltAt(bool accept) {
  return TispMachine(2, accept ? 0 : 1, 0, 1, "01:;#", '_', {}, 1, 1);
}

}  // namespace

InputEncoding CorpusProgram::Encode(const std::string& x) const {
  return token_input ? EncodeTokens(x) : EncodeInput(x);
}

Tm ScanMachine(unsigned index) {
  const std::size_t inputs = 4;  // '<', '>', '0', '1'
  const std::size_t work = 2;
  std::vector<std::optional<TmAction>> delta(3 * inputs * work);
  auto at = [&](StateId s, std::size_t in, std::uint8_t w) -> auto& {
    return delta[(s * inputs + in) * work + w];
  };
  for (std::uint8_t w = 0; w < 2; ++w) {
    at(0, kLeftMarker, w) = TmAction{0, w, Move::kStay, Move::kRight};
    for (std::uint8_t a = 0; a < 2; ++a) {
      auto next = static_cast<std::uint8_t>((index >> (a * 2 + w)) & 1);
      at(0, 2 + a, w) = TmAction{0, next, Move::kStay, Move::kRight};
    }
    StateId verdict = ((index >> (4 + w)) & 1) ? 1 : 2;
    at(0, kRightMarker, w) = TmAction{verdict, w, Move::kStay, Move::kStay};
  }
  return Tm(3, 0, 1, 2, "01", work, 1, std::move(delta), {"scan", "acc", "rej"});
}

bool ScanMachineAccepts(unsigned index, const std::string& x) {
  unsigned w = 0;
  for (char c : x) w = (index >> ((c - '0') * 2 + w)) & 1;
  return ((index >> (4 + w)) & 1) != 0;
}

TispMachine FlipMachine(std::uint64_t time_budget, std::uint64_t space_budget) {
  return TispMachine(3, 0, 1, 2, "01", '_',
                     {{{0, '0'}, {0, '1', Move::kRight}},
                      {{0, '1'}, {0, '0', Move::kRight}},
                      {{0, '_'}, {1, '_', Move::kRight}}},
                     time_budget, space_budget, {"flip", "acc", "rej"});
}

std::vector<std::string> AllBinaryStrings(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (1ULL << len); ++bits) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if ((bits >> i) & 1) s[i] = '1';
      }
      out.push_back(s);
    }
  }
  return out;
}

std::vector<CorpusProgram> ProgramCorpus() {
  std::mt19937_64 rng(20240611);
  std::vector<CorpusProgram> corpus;
  corpus.push_back({"dfa2mrc-parity", CompileDfaToMrc(ParityDfa(), {1, 2}), Bits});
  corpus.push_back({"dfa2mrc-suffix01", CompileDfaToMrc(CompileRegex("(0|1)*01"), {1, 3}), Bits});
  corpus.push_back({"dfa2mrc-random", CompileDfaToMrc(RandomDfa(rng, 8), {3, 4}), Bits});
  corpus.push_back({"tm2mrc-scan", CompileSublogTmToMrc(ScanMachine(0b100110), {1, 2}), Bits});
  corpus.push_back(
      {"tm2mrc-random", CompileSublogTmToMrc(RandomTm(rng, {2, 2, 2, 0.1, 0.2}), {1, 2}), Bits});
  corpus.push_back({"tisp2mrc-flip", CompileTispToMrc(FlipMachine(), {1, 2}), Bits});
  corpus.push_back({"tisp2mrc-random", CompileTispToMrc(RandomTisp(rng, {3, 0.1, 48, 200}), {1, 2}), Bits});
  corpus.push_back({"padding-palindrome", CompilePaddedDecider(DeciderByName("palindrome")), Padded});
  corpus.push_back({"padding-majority", CompilePaddedDecider(DeciderByName("majority")), Padded});
  corpus.push_back({"unary-even", CompileUnary(OracleByName("even")), Ones});
  corpus.push_back({"unary-prime", CompileUnary(OracleByName("prime")), Ones});
  corpus.push_back({"wordcount", CompileWordCount(), Words});
  corpus.push_back({"always-accept", AlwaysAcceptProgram(), Bits});

  MrcProgram interpreted;
  interpreted.name = "interpreted-accept";
  interpreted.rounds = {0, 2};
  interpreted.behavior = std::make_shared<InterpretedBehavior>(HaltAt(true), ResourceLimits{});
  corpus.push_back({"interpreted-accept", interpreted, Bits});
  MrcProgram quiet = interpreted;
  quiet.name = "interpreted-reject";
  quiet.behavior = std::make_shared<InterpretedBehavior>(HaltAt(false), ResourceLimits{});
  corpus.push_back({"interpreted-reject", quiet, Bits});

  corpus.push_back({"bsp2mrc-ping-pong", BspToMrc(PingPongMachine(3)), Bits});
  corpus.push_back({"bsp2mrc-echo", BspToMrc(EchoMachine(4, 3)), Bits});
  return corpus;
}

std::vector<CorpusMachine> BspCorpus() {
  std::vector<CorpusMachine> corpus;
  corpus.push_back({"accept-immediately", AcceptImmediatelyMachine(3)});
  corpus.push_back({"ping-pong", PingPongMachine(2)});
  corpus.push_back({"echo", EchoMachine(4, 3)});
  corpus.push_back({"mrc2bsp-parity", MrcToBsp(CompileDfaToMrc(ParityDfa(), {1, 2}), 4)});
  corpus.push_back({"mrc2bsp-unary-even", MrcToBsp(CompileUnary(OracleByName("even")), 3)});
  corpus.push_back({"mrc2bsp-wordcount", MrcToBsp(CompileWordCount(), 5)});
  return corpus;
}

}  // namespace mrcsim::testing
