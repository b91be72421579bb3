// Copyright 2026 The Softgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softgame/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "softgame/io.h"
#include "test_util.h"

namespace softgame {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const char* name) { return std::string(SOFTGAME_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("softgame_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Temp(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolvePrintsOptimalSolutions) {
  Result r = Invoke({"solve", Data("fuzzy_basic.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "bbb : 0.5\n");
  EXPECT_EQ(Invoke({"solve", Data("fuzzy_four_optima.json")}).out,
            "aab : 0.2\nabb : 0.2\nbab : 0.2\nbbb : 0.2\n");
  EXPECT_EQ(Invoke({"solve", Data("weighted_single.json")}).out, "bb : 1\n");
}

TEST_F(CliTest, LocalMapThenNash) {
  Result mapped = Invoke({"map", "local", Data("fuzzy_basic.json")});
  ASSERT_EQ(mapped.code, kExitOk) << mapped.err;
  Result nash = Invoke({"nash", "-"}, mapped.out);
  EXPECT_EQ(nash.code, kExitOk);
  EXPECT_EQ(nash.out, "aaa : [0.4, 0.4, 0.4]\nbbb : [0.5, 0.5, 0.5]\n");
}

TEST_F(CliTest, InverseHardenMergeSolve) {
  std::string soft = Temp("soft.json");
  std::string hard = Temp("hard.json");
  std::string merged = Temp("merged.json");
  ASSERT_EQ(Invoke({"map", "inverse", "--f", "complement", "--ceiling", "10",
                 Data("prisoners_dilemma.json"), "-o", soft}).code, kExitOk);
  ASSERT_EQ(Invoke({"map", "harden", Data("prisoners_dilemma.json"), "-o", hard}).code, kExitOk);
  ASSERT_EQ(Invoke({"map", "merge", soft, hard, "-o", merged}).code, kExitOk);
  EXPECT_EQ(Invoke({"solve", merged}).out, "nn : [9, 9]\n");
  EXPECT_EQ(Invoke({"solve", soft}).out, "cc : [7, 7]\ncn : [10, 6]\nnc : [6, 10]\n");
}

TEST_F(CliTest, GameQueries) {
  std::string pd = Data("prisoners_dilemma.json");
  EXPECT_EQ(Invoke({"nash", pd}).out, "nn : [1, 1]\n");
  EXPECT_EQ(Invoke({"pareto", pd}).out, "cc : [3, 3]\ncn : [0, 4]\nnc : [4, 0]\n");
  EXPECT_EQ(Invoke({"pareto-nash", pd}).out, "nn : [1, 1]\n");
  Result both = Invoke({"nash-pareto-intersect", pd});
  EXPECT_EQ(both.code, kExitOk);
  EXPECT_EQ(both.out, "");
}

TEST_F(CliTest, JsonOutput) {
  Json solved = Json::parse(Invoke({"solve", "--json", Data("fuzzy_basic.json")}).out);
  ASSERT_EQ(solved.size(), 1u);
  EXPECT_EQ(solved[0]["assignment"]["y"], "b");
  EXPECT_EQ(solved[0]["preference"], "0.5");
  Json nash = Json::parse(Invoke({"nash", "--json", Data("prisoners_dilemma.json")}).out);
  EXPECT_EQ(nash[0]["payoffs"], Json::parse(R"(["1","1"])"));
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  Result missing = Invoke({"solve", Temp("absent.json")});
  EXPECT_EQ(missing.code, kExitParseError);
  EXPECT_NE(missing.err.find("error: ParseError"), std::string::npos);
  EXPECT_EQ(Invoke({"solve", "-"}, "{").code, kExitParseError);
  EXPECT_EQ(Invoke({"solve", Data("prisoners_dilemma.json")}).code, kExitParseError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(Invoke({}).code, kExitParseError);
  EXPECT_EQ(Invoke({"map", "sideways", Data("fuzzy_basic.json")}).code, kExitParseError);
}

TEST_F(CliTest, DomainErrorsExitOneWithTheErrorName) {
  std::string one_var = R"({"semiring":{"kind":"fuzzy"},
      "variables":[{"name":"x","domain":["a","b"]}],"constraints":[]})";
  Result r = Invoke({"map", "local", "-"}, one_var);
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("error: TooFewVariables"), std::string::npos) << r.err;
  Result small = Invoke({"map", "inverse", "--f", "complement", "--ceiling", "3",
                      Data("prisoners_dilemma.json")});
  EXPECT_EQ(small.code, kExitDomainError);
  EXPECT_NE(small.err.find("CeilingTooSmall"), std::string::npos);
  Result reversed = Invoke({"map", "inverse", "--f", "complement", "--ceiling", "10", "-"},
                        Invoke({"map", "local", Data("weighted_single.json")}).out);
  EXPECT_EQ(reversed.code, kExitDomainError);
  EXPECT_NE(reversed.err.find("NotOrderPreserving"), std::string::npos);
}

TEST_F(CliTest, FlagsAreCheckedBeforeInputsAreRead) {
  std::string absent = Temp("absent.json");
  Result f = Invoke({"map", "local", "--f", "complement", absent});
  EXPECT_EQ(f.code, kExitParseError);
  EXPECT_EQ(f.err.find("absent"), std::string::npos) << f.err;
  Result ceiling = Invoke({"map", "inverse", "--ceiling", "10", absent});
  EXPECT_EQ(ceiling.code, kExitParseError);
  EXPECT_EQ(ceiling.err.find("absent"), std::string::npos) << ceiling.err;
  Result arity = Invoke({"map", "merge", absent});
  EXPECT_EQ(arity.code, kExitParseError);
  EXPECT_EQ(arity.err.find("absent"), std::string::npos) << arity.err;
  EXPECT_EQ(Invoke({"solve", "--f", "identity", absent}).code, kExitParseError);
}

TEST_F(CliTest, VerifyExitCodeTracksFailures) {
  Result fuzzy = Invoke({"verify", "--family", "fuzzy", "--count", "50"});
  EXPECT_EQ(fuzzy.code, kExitOk);
  EXPECT_NE(fuzzy.out.find("result: PASS"), std::string::npos);
  Result game = Invoke({"verify", "--family", "game-weighted", "--count", "50", "--json"});
  EXPECT_EQ(game.code, kExitOk);
  EXPECT_TRUE(Json::parse(game.out)["ok"].get<bool>());
  Result bad = Invoke({"verify", "--count", "0"});
  EXPECT_EQ(bad.code, kExitDomainError);
  EXPECT_NE(bad.err.find("InvalidConfig"), std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--vars", "9"}).code, kExitDomainError);
}

TEST_F(CliTest, VerifyReplaysASingleInstance) {
  std::string counterexample = R"({"semiring":{"kind":"weighted"},
    "variables":[{"name":"x","domain":["a","b"]},{"name":"y","domain":["a","b"]}],
    "constraints":[{"scope":["x"],"table":{"a":"0","b":"3"}},
                   {"scope":["y"],"table":{"a":"0","b":"3"}},
                   {"scope":["x","y"],"table":{"a,a":"4","a,b":"10","b,a":"10","b,b":"0"}}]})";
  Result r = Invoke({"verify", "--replay", "-"}, counterexample);
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.out.find("property a-optimal-in-pareto-local: fail witness aa"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("property a-optimal-in-nash-local: pass"), std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--replay", Data("prisoners_dilemma.json")}).code, kExitOk);
}

TEST_F(CliTest, CheckSemiring) {
  Result fuzzy = Invoke({"check-semiring", "fuzzy", "--sample", "0.2", "0.5", "0.8"});
  EXPECT_EQ(fuzzy.code, kExitOk);
  EXPECT_NE(fuzzy.out.find("axioms: ok"), std::string::npos);
  EXPECT_NE(fuzzy.out.find("strictly monotonic: false (a=0.5, b=0.8, c=0.2)"), std::string::npos)
      << fuzzy.out;
  EXPECT_NE(Invoke({"check-semiring", "weighted"}).out.find("strictly monotonic: true"),
            std::string::npos);
  Result product = Invoke({"check-semiring", "product(fuzzy, weighted)"});
  EXPECT_EQ(product.code, kExitOk);
  EXPECT_NE(product.out.find("strictly monotonic: NotLinearlyOrdered"), std::string::npos);
  EXPECT_EQ(Invoke({"check-semiring", "fuzzy", "--sample", "7"}).code, kExitParseError);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRunsAndWorkers) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"solve", Data("fuzzy_four_optima.json")},
                                             {"map", "global", Data("fuzzy_basic.json")},
                                             {"pareto", Data("prisoners_dilemma.json")}}) {
    EXPECT_EQ(Invoke(args).out, Invoke(args).out);
  }
  Result one = Invoke({"verify", "--family", "weighted", "--count", "200", "--jobs", "1"});
  Result four = Invoke({"verify", "--family", "weighted", "--count", "200", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.code, four.code);
}

}  // namespace
}  // namespace softgame
