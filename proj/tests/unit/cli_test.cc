// Copyright 2026 The Robustfair Authors.
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

#include "commands.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace robustfair::cli {
namespace {

using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info =
        ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = std::filesystem::temp_directory_path() /
           (std::string("robustfair_cli_") + info->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  int Call(std::vector<std::string> args) {
    args.insert(args.begin(), "robustfair");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::Run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  json Report() const { return json::parse(out_.str()); }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

constexpr char kDiamond[] = "4 4\n0 1\n0 2\n1 3\n2 3\n";

TEST_F(CliTest, BuildThenVerifyPasses) {
  const std::string graph = Write("g.txt", kDiamond);
  const std::string pairs = Write("p.txt", "0 3\n");
  const std::string h = (dir_ / "h.json").string();
  ASSERT_EQ(Call({"ftrs", "build", "--graph", graph, "--pairs", pairs,
                  "--out", h}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(Report()["preserver_edges"], 4);
  ASSERT_EQ(Call({"ftrs", "verify", "--graph", graph, "--preserver", h}),
            kExitOk);
  const json r = Report();
  EXPECT_EQ(r["passed"], true);
  EXPECT_EQ(r["schema"], kSchema);
  EXPECT_TRUE(r.contains("seed"));
  EXPECT_TRUE(r["inputs"].contains("graph"));
}

TEST_F(CliTest, VerifyFailureReportsCounterexample) {
  const std::string graph = Write("g.txt", kDiamond);
  const std::string h = Write(
      "h.json", R"({"n":4,"k":2,"pairs":[[0,3]],"edges":[[0,1],[1,3]]})");
  EXPECT_EQ(Call({"ftrs", "verify", "--graph", graph, "--preserver", h}),
            kExitVerifyFailed);
  const json r = Report();
  EXPECT_EQ(r["passed"], false);
  EXPECT_EQ(r["counterexample"]["pair"], json::array({0, 3}));
}

TEST_F(CliTest, MalformedGraphNamesTheLine) {
  const std::string graph = Write("bad.txt", "3 2\n0 1\n1 x\n");
  const std::string pairs = Write("p.txt", "0 2\n");
  EXPECT_EQ(Call({"ftrs", "build", "--graph", graph, "--pairs", pairs}),
            kExitInputError);
  EXPECT_NE(err_.str().find("bad.txt:3"), std::string::npos) << err_.str();
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({"ftrs", "build", "--no-such-flag"}), kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Call({}), kExitUsage);
}

TEST_F(CliTest, ThreePartitionTau) {
  ASSERT_EQ(Call({"gen", "threepartition", "--items", "5,6,7", "--p", "2"}),
            kExitOk)
      << err_.str();
  const json r = Report();
  EXPECT_EQ(r["tau"], 755);
  EXPECT_EQ(r["witness_dist"], 755);
  EXPECT_EQ(r["witness_fair"], true);
  EXPECT_TRUE(r.contains("instance"));
  EXPECT_EQ(Call({"gen", "threepartition", "--items", "2,2,10", "--p", "2"}),
            kExitInputError);
}

TEST_F(CliTest, FairClosestAgreesWithOracle) {
  const std::string input = Write("c.txt", "0 0 0\n1 0 0\n2 1 1\n");
  ASSERT_EQ(Call({"fair", "closest", "--input", input}), kExitOk)
      << err_.str();
  const json fair = Report();
  ASSERT_EQ(Call({"oracle", "closest", "--input", input}), kExitOk)
      << err_.str();
  EXPECT_EQ(Report()["dist"], 2);
  EXPECT_EQ(fair["fair"], true);
}

TEST_F(CliTest, SameSeedSameReport) {
  const std::vector<std::string> args = {"gen", "random", "--kind", "digraph",
                                         "--n", "8", "--p", "0.3",
                                         "--seed", "7"};
  ASSERT_EQ(Call(args), kExitOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(Call(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
}

}  // namespace
}  // namespace robustfair::cli
