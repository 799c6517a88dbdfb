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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "corpus.h"
#include "json.hpp"
#include "mrcsim/automata/random.h"
#include "mrcsim/cli/commands.h"
#include "mrcsim/cli/report_io.h"
#include "mrcsim/cli/spec_io.h"
#include "mrcsim/translators/word_count.h"

namespace mrcsim {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Fixture(const std::string& name) { return std::string(MRCSIM_FIXTURES) + "/" + name; }

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mrcsim_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
    return Path(name);
  }
  int Binary(const std::string& args) const {
    std::string cmd = std::string(MRCSIM_BINARY) + " " + args + " > " + Path("stdout") + " 2> " +
                      Path("stderr");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(SpecTest, FixturesRoundTrip) {
  for (const char* name : {"parity_dfa.json", "parity_pipeline.json", "fanout.json",
                           "wordcount.json", "suffix01_dfa.json"}) {
    MachineSpec once = ParseSpec(Slurp(Fixture(name)));
    std::string text = SerializeSpec(once);
    MachineSpec twice = ParseSpec(text);
    EXPECT_EQ(twice.kind, once.kind) << name;
    EXPECT_EQ(twice.doc, once.doc) << name;
    EXPECT_EQ(SerializeSpec(twice), text) << name;
  }
}

json Top(json doc) {
  doc["schema"] = kSchema;
  return doc;
}

TEST(SpecTest, RandomMachinesRoundTrip) {
  std::mt19937_64 rng(101);
  std::vector<std::string> inputs = testing::AllBinaryStrings(6);
  for (int t = 0; t < 30; ++t) {
    Dfa dfa = RandomDfa(rng, 6);
    MachineSpec s = ParseSpec(SerializeSpec(NormalizeSpec(Top(DfaToSpec(dfa)))));
    Dfa back = DfaFromSpec(s.doc);
    Tm tm = RandomTm(rng, {2, 2, 3, 0.1, 0.2});
    Tm tm_back = TmFromSpec(ParseSpec(SerializeSpec(NormalizeSpec(Top(TmToSpec(tm))))).doc);
    TispMachine m = RandomTisp(rng, {3, 0.1, 30, 30});
    TispMachine m_back =
        TispFromSpec(ParseSpec(SerializeSpec(NormalizeSpec(Top(TispToSpec(m))))).doc);
    EXPECT_EQ(DfaToSpec(back), DfaToSpec(dfa));
    EXPECT_EQ(TmToSpec(tm_back), TmToSpec(tm));
    EXPECT_EQ(TispToSpec(m_back), TispToSpec(m));
    for (const auto& x : inputs) {
      ASSERT_EQ(DfaAccepts(back, x), DfaAccepts(dfa, x));
      ASSERT_EQ(RunTm(tm_back, x), RunTm(tm, x));
      ASSERT_EQ(RunTisp(m_back, x).outcome, RunTisp(m, x).outcome);
    }
  }
}

TEST(SpecTest, ErrorsNameTheProblem) {
  try {
    ParseSpec(Slurp(Fixture("bad_state_dfa.json")));
    FAIL() << "accepted an undeclared state";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("undeclared state 'q7'"), std::string::npos) << e.what();
  }
  try {
    ParseSpec(R"({"schema": "mrcsim/1", "kind": "dfa", "regex": "0*", "colour": 1})");
    FAIL() << "accepted an unknown field";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown field 'colour'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseSpec(R"({"kind": "dfa", "regex": "0*"})"), SpecError);
  EXPECT_THROW(ParseSpec(R"({"schema": "mrcsim/9", "kind": "dfa", "regex": "0*"})"), SpecError);
  EXPECT_THROW(ParseSpec("{"), std::exception);
}

TEST(LimitsFlagTest, ParsesItems) {
  ResourceLimits l = ParseLimitsFlag("c=1/3,const=2,keys=5,enforce");
  EXPECT_EQ(l.space_exponent, (Rational{1, 3}));
  EXPECT_EQ(l.space_constant, (Rational{2, 1}));
  EXPECT_EQ(l.keys_constant, (Rational{5, 1}));
  EXPECT_TRUE(l.enforced());
  EXPECT_FALSE(ParseLimitsFlag("").enforced());
  EXPECT_THROW(ParseLimitsFlag("bogus=1"), std::invalid_argument);
}

TEST(ReportIoTest, Sha256Vectors) {
  EXPECT_EQ(Sha256Hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, RunExitCodesFollowVerdict) {
  RunArgs args;
  args.spec_path = Fixture("parity_pipeline.json");
  args.input_path = Fixture("input_0110.txt");
  args.report_path = Path("report.json");
  EXPECT_EQ(CmdRun(args, out_, err_), kExitAccept);
  EXPECT_EQ(out_.str(), "accept\n");
  json report = json::parse(Slurp(args.report_path));
  EXPECT_EQ(report["verdict"], "accept");
  EXPECT_EQ(report["rounds_executed"], 2);
  EXPECT_EQ(report["n"], 4);
  EXPECT_EQ(report["input_sha256"], Sha256Hex("0110\n"));

  args.input_path = Write("odd.txt", "0111\n");
  EXPECT_EQ(CmdRun(args, out_, err_), kExitReject);

  args.spec_path = Fixture("fanout.json");
  args.input_path = Fixture("input_16.txt");
  args.limits = "const=1,enforce";
  std::ostringstream err;
  EXPECT_EQ(CmdRun(args, out_, err), kExitViolation);
  EXPECT_NE(err.str().find("keys-per-invocation"), std::string::npos) << err.str();

  args.spec_path = Fixture("bad_state_dfa.json");
  args.limits = "";
  std::ostringstream bad;
  EXPECT_EQ(CmdRun(args, out_, bad), kExitInvalid);
  EXPECT_NE(bad.str().find("undeclared state 'q7'"), std::string::npos) << bad.str();
}

TEST_F(CliTest, BinaryExitCodes) {
  EXPECT_EQ(Binary("run --spec " + Fixture("parity_pipeline.json") + " --input " +
                   Fixture("input_0110.txt")),
            0);
  EXPECT_EQ(Binary("run --spec " + Fixture("parity_dfa.json") + " --input " +
                   Write("odd.txt", "1")),
            1);
  EXPECT_EQ(Binary("run --spec " + Fixture("fanout.json") + " --input " +
                   Fixture("input_16.txt") + " --limits const=1,enforce"),
            2);
  EXPECT_EQ(Binary("run --spec " + Fixture("bad_state_dfa.json") + " --input " +
                   Fixture("input_0110.txt")),
            3);
  EXPECT_NE(Slurp(Path("stderr")).find("q7"), std::string::npos);
  EXPECT_EQ(Binary("run --spec"), 3);
  EXPECT_EQ(Binary("run --spec " + Path("missing.json") + " --input " + Fixture("empty.txt")), 3);
}

TEST_F(CliTest, RunReportIsReproducibleAcrossSchedules) {
  std::vector<json> reports;
  for (int seed : {1, 2, 3}) {
    for (int threads : {1, 2}) {
      RunArgs args;
      args.spec_path = Fixture("wordcount.json");
      args.input_path = Fixture("fox.txt");
      args.report_path = Path("r.json");
      args.seed = seed;
      args.threads = threads;
      ASSERT_EQ(CmdRun(args, out_, err_), kExitReject);
      json r = json::parse(Slurp(args.report_path));
      r.erase("wall_clock_ms");
      reports.push_back(r);
    }
  }
  for (const auto& r : reports) EXPECT_EQ(r, reports.front());
}

TEST_F(CliTest, SequentialEngineReportsAccounting) {
  RunArgs args;
  args.spec_path = Fixture("parity_pipeline.json");
  args.input_path = Fixture("input_16.txt");
  args.report_path = Path("seq.json");
  args.sequential = true;
  EXPECT_EQ(CmdRun(args, out_, err_), kExitAccept);
  json r = json::parse(Slurp(args.report_path));
  EXPECT_EQ(r["engine"], "sequential");
  EXPECT_LE(r["report"]["accounting"]["total"].get<std::uint64_t>(),
            r["report"]["accounting"]["envelope"].get<std::uint64_t>());
}

TEST_F(CliTest, CompileDfaProducesRunnablePipeline) {
  CompileArgs args;
  args.kind = "dfa2mrc";
  args.spec_path = Fixture("parity_dfa.json");
  args.out_path = Path("compiled.json");
  ASSERT_EQ(CmdCompile(args, out_, err_), 0) << err_.str();
  MachineSpec compiled = ParseSpec(Slurp(args.out_path));
  EXPECT_EQ(compiled.kind, "mrc-pipeline");
  RunArgs run;
  run.spec_path = args.out_path;
  run.input_path = Fixture("input_0110.txt");
  EXPECT_EQ(CmdRun(run, out_, err_), kExitAccept);
}

TEST_F(CliTest, CompileTmChecksFeasibility) {
  json tm = {{"schema", kSchema},
             {"kind", "tm"},
             {"states", {"q", "acc", "rej"}},
             {"start", "q"},
             {"accept", "acc"},
             {"reject", "rej"},
             {"input_alphabet", "01"},
             {"work_alphabet", "_a"},
             {"work_space_bound", 8},
             {"delta", json::array()}};
  CompileArgs args;
  args.kind = "tm2mrc";
  args.spec_path = Write("tm.json", tm.dump());
  args.n = 16;
  std::ostringstream err;
  EXPECT_EQ(CmdCompile(args, out_, err), kExitInvalid);
  EXPECT_FALSE(err.str().empty());
  args.n.reset();
  EXPECT_EQ(CmdCompile(args, out_, err_), 0);
}

TEST_F(CliTest, CompileAcrossModelsAndBack) {
  CompileArgs to_bsp;
  to_bsp.kind = "mrc2bsp";
  to_bsp.spec_path = Fixture("parity_pipeline.json");
  to_bsp.processors = 3;
  to_bsp.out_path = Path("bsp.json");
  ASSERT_EQ(CmdCompile(to_bsp, out_, err_), 0) << err_.str();
  CompileArgs back;
  back.kind = "bsp2mrc";
  back.spec_path = to_bsp.out_path;
  back.out_path = Path("mrc.json");
  ASSERT_EQ(CmdCompile(back, out_, err_), 0) << err_.str();
  for (const std::string& spec : {to_bsp.out_path, back.out_path}) {
    RunArgs run;
    run.spec_path = spec;
    run.input_path = Fixture("input_0110.txt");
    EXPECT_EQ(CmdRun(run, out_, err_), kExitAccept) << spec;
    run.input_path = Write("odd.txt", "1011");
    EXPECT_EQ(CmdRun(run, out_, err_), kExitReject) << spec;
  }
  CompileArgs wrong;
  wrong.kind = "mrc2bsp";
  wrong.spec_path = Fixture("parity_dfa.json");
  EXPECT_EQ(CmdCompile(wrong, out_, err_), kExitInvalid);
}

TEST_F(CliTest, VerifyAgreesAndFindsMutations) {
  VerifyArgs args;
  args.spec_path = Fixture("suffix01_dfa.json");
  args.oracle = "dfa";
  args.trials = 100;
  EXPECT_EQ(CmdVerify(args, out_, err_), kExitAgree);
  args.mutate = "reverse-composition";
  std::ostringstream out;
  EXPECT_EQ(CmdVerify(args, out, err_), kExitDisagree);
  EXPECT_NE(out.str().find("reproduce: mrcsim verify"), std::string::npos);
  args.trials = 0;
  std::ostringstream warn;
  EXPECT_EQ(CmdVerify(args, out_, warn), kExitAgree);
  EXPECT_NE(warn.str().find("warning"), std::string::npos);
}

TEST_F(CliTest, VerifyEngineOracles) {
  VerifyArgs args;
  args.spec_path = Fixture("wordcount.json");
  args.oracle = "mrc-engine";
  args.trials = 30;
  EXPECT_EQ(CmdVerify(args, out_, err_), kExitAgree) << out_.str();
  args.spec_path = Fixture("parity_pipeline.json");
  args.oracle = "bsp-engine";
  EXPECT_EQ(CmdVerify(args, out_, err_), kExitAgree) << out_.str();
  args.oracle = "no-such-oracle";
  EXPECT_EQ(CmdVerify(args, out_, err_), kExitInvalid);
}

TEST_F(CliTest, WordCountCommand) {
  WordCountArgs args;
  args.input_path = Fixture("fox.txt");
  std::ostringstream out;
  EXPECT_EQ(CmdWordCount(args, out, err_), 0);
  EXPECT_EQ(out.str(), "fox\t1\nthe\t2\n");
  args.input_path = Fixture("empty.txt");
  std::ostringstream empty;
  EXPECT_EQ(CmdWordCount(args, empty, err_), 0);
  EXPECT_EQ(empty.str(), "");
  std::mt19937_64 rng(103);
  std::string text;
  for (int i = 0; i < 500; ++i) text += RandomString(rng, 1 + rng() % 4, "xyz") + " \n"[i % 2];
  args.input_path = Write("words.txt", text);
  std::ostringstream many;
  EXPECT_EQ(CmdWordCount(args, many, err_), 0);
  std::string expected;
  for (const auto& [w, c] : CountWords(text)) expected += w + "\t" + std::to_string(c) + "\n";
  EXPECT_EQ(many.str(), expected);
}

}  // namespace
}  // namespace mrcsim
