// Copyright 2026 The Chartgen Authors
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

#include "chartgen_tools/commands.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "support/corpus.h"

namespace chartgen::tools {
namespace {

namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("chartgen_cmd_" + std::to_string(rd()));
    fs::create_directories(dir_);
    unsetenv("CHARTGEN_CONFIG");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  static GeneralizeOptions Phone(const std::string& name) {
    GeneralizeOptions o;
    o.input = testing_support::CorpusPath(name);
    o.width = 750;
    o.height = 1334;
    return o;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CommandsTest, GeneralizeWritesSvgToStdout) {
  EXPECT_EQ(RunGeneralize(Phone("sine_wave"), out_, err_), kExitOk);
  EXPECT_EQ(out_.str().rfind("<?xml", 0), 0u);
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CommandsTest, GeneralizeWritesSvgAndJsonFiles) {
  GeneralizeOptions o = Phone("annotated");
  o.output = (dir_ / "a.svg").string();
  ASSERT_EQ(RunGeneralize(o, out_, err_), kExitOk) << err_.str();
  const std::string svg = testing_support::ReadText(o.output);
  const std::string json = testing_support::ReadText((dir_ / "a.json").string());
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(json.front(), '{');

  o.output = (dir_ / "b.svg").string();
  ASSERT_EQ(RunGeneralize(o, out_, err_), kExitOk);
  EXPECT_EQ(testing_support::ReadText(o.output), svg);
  EXPECT_EQ(testing_support::ReadText((dir_ / "b.json").string()), json);
}

TEST_F(CommandsTest, MissingInputIsAParseError) {
  GeneralizeOptions o = Phone("sine_wave");
  o.input = (dir_ / "nope.json").string();
  EXPECT_EQ(RunGeneralize(o, out_, err_), kExitParse);
  EXPECT_NE(err_.str().find("cannot read"), std::string::npos);
}

TEST_F(CommandsTest, InvalidSpecReportsFieldPath) {
  GeneralizeOptions o = Phone("sine_wave");
  o.input = Write("bad.json", R"({"series":[{"points":[{"x":1,"y":5},{"x":1,"y":7}]}]})");
  EXPECT_EQ(RunGeneralize(o, out_, err_), kExitParse);
  EXPECT_NE(err_.str().find("series[0].points[1].x"), std::string::npos);
}

TEST_F(CommandsTest, NonPositiveSizeIsALayoutError) {
  GeneralizeOptions o = Phone("sine_wave");
  o.width = 0;
  EXPECT_EQ(RunGeneralize(o, out_, err_), kExitLayout);
  o.width = 1;
  EXPECT_EQ(RunGeneralize(o, out_, err_), kExitLayout);
}

TEST_F(CommandsTest, ConfigFileAndEnvironmentFallback) {
  GeneralizeOptions o = Phone("sine_wave");
  o.config = Write("bad_config.json", R"({"maxPasses": 0})");
  EXPECT_EQ(RunGeneralize(o, out_, err_), kExitParse);
  EXPECT_NE(err_.str().find("maxPasses"), std::string::npos);

  const std::string good = Write("good.json", R"({"seed": 3})");
  EXPECT_EQ(LoadConfig(good).seed, 3u);
  setenv("CHARTGEN_CONFIG", good.c_str(), 1);
  EXPECT_EQ(LoadConfig(std::nullopt).seed, 3u);
  EXPECT_EQ(LoadConfig(Write("other.json", R"({"seed": 4})")).seed, 4u);
  unsetenv("CHARTGEN_CONFIG");
  EXPECT_EQ(LoadConfig(std::nullopt).seed, 42u);
}

TEST_F(CommandsTest, MetricsIsDeterministicJson) {
  MetricsOptions o{testing_support::CorpusPath("stock_daily"), 750, 1334, std::nullopt};
  ASSERT_EQ(RunMetrics(o, out_, err_), kExitOk);
  std::ostringstream again;
  ASSERT_EQ(RunMetrics(o, again, err_), kExitOk);
  EXPECT_EQ(out_.str(), again.str());
  EXPECT_NE(out_.str().find("\"grid\""), std::string::npos);
  o.width = -5;
  EXPECT_EQ(RunMetrics(o, out_, err_), kExitLayout);
}

TEST_F(CommandsTest, SizeListParsing) {
  auto sizes = ParseSizeList("750x1334,324x394");
  ASSERT_EQ(sizes.size(), 2u);
  EXPECT_EQ(sizes[1], (Size{324, 394}));
  EXPECT_THROW(ParseSizeList(""), ParseError);
  EXPECT_THROW(ParseSizeList("750"), ParseError);
  EXPECT_THROW(ParseSizeList("750x"), ParseError);
  EXPECT_THROW(ParseSizeList("7a0x100"), ParseError);
}

TEST_F(CommandsTest, SweepWritesEverySizeAndReportsFailures) {
  SweepOptions o;
  o.input = testing_support::CorpusPath("sparse_ten");
  o.targets = {{750, 1334}, {1, 1}, {324, 394}};
  o.output_dir = (dir_ / "sweep").string();
  EXPECT_EQ(RunSweep(o, out_, err_), kExitLayout);
  EXPECT_TRUE(fs::exists(dir_ / "sweep" / "sparse_ten_750x1334.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "sweep" / "sparse_ten_324x394.json"));
  EXPECT_FALSE(fs::exists(dir_ / "sweep" / "sparse_ten_1x1.svg"));
  EXPECT_NE(err_.str().find("sparse_ten_1x1"), std::string::npos);
  std::istringstream lines(out_.str());
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  EXPECT_EQ(count, 2);
}

int RunCli(const std::string& args) {
  const std::string cmd = std::string(CHARTGEN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CommandsTest, CliExitCodes) {
  const std::string input = testing_support::CorpusPath("sine_wave");
  EXPECT_EQ(RunCli("generalize " + input + " --width 324 --height 394"), kExitOk);
  EXPECT_EQ(RunCli("generalize"), kExitUsage);
  EXPECT_EQ(RunCli("frobnicate"), kExitUsage);
  EXPECT_EQ(RunCli("generalize missing.json --width 10 --height 10"), kExitParse);
  EXPECT_EQ(RunCli("generalize " + input + " --width 0 --height 10"), kExitLayout);
  EXPECT_EQ(RunCli("sweep " + input + " --sizes bogus"), kExitParse);
  EXPECT_EQ(RunCli("--help"), kExitOk);
}

}  // namespace
}  // namespace chartgen::tools
