/*
 * Copyright 2026 The VForest Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace {

namespace fs = std::filesystem;
using vforest::testing_util::ScratchDir;

const std::string kCli = VFOREST_CLI_PATH;
const std::string kConfigs = std::string(VFOREST_SOURCE_DIR) + "/configs";

int RunCli(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, HelpAndVersionSucceed) {
  EXPECT_EQ(RunCli("--help"), 0);
  EXPECT_EQ(RunCli("--version"), 0);
  EXPECT_EQ(RunCli("generate --help"), 0);
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(RunCli(""), 1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
  EXPECT_EQ(RunCli("generate --config x.json"), 1);
  EXPECT_EQ(RunCli("generate --config x.json --out y --threads 0"), 1);
}

TEST(CliTest, BadConfigExitsTwo) {
  ScratchDir dir("cli_badcfg");
  const fs::path cfg = dir.path() / "bad.json";
  { std::ofstream(cfg) << R"({"terrain": {"extent": 5}})"; }
  EXPECT_EQ(RunCli("generate -q --config " + cfg.string() + " --out " + (dir.path() / "o").string()), 2);
  { std::ofstream(cfg) << "{ nope"; }
  EXPECT_EQ(RunCli("generate -q --config " + cfg.string() + " --out " + (dir.path() / "o").string()), 2);
}

TEST(CliTest, MissingInputsExitThree) {
  ScratchDir dir("cli_missing");
  EXPECT_EQ(RunCli("generate -q --config " + (dir.path() / "none.json").string() + " --out " + dir.path().string()), 3);
  EXPECT_EQ(RunCli("stats " + dir.path().string()), 3);
  EXPECT_EQ(RunCli("eval --gt /nonexistent/gt.json --pred /nonexistent/p.json --out " + dir.path().string()), 3);
}

TEST(CliTest, EndToEnd) {
  ScratchDir dir("cli_e2e");
  const fs::path out = dir.path() / "ds";
  ASSERT_EQ(RunCli("generate -q --threads 2 --config " + kConfigs + "/smoke.json --out " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
  EXPECT_EQ(RunCli("stats " + out.string()), 0);
  EXPECT_EQ(RunCli("stats --json " + out.string()), 0);
  EXPECT_EQ(RunCli("preview " + out.string() + " --frame 3"), 0);
  EXPECT_TRUE(fs::exists(out / "preview" / "a_0002.png"));
  EXPECT_EQ(RunCli("preview " + out.string() + " --frame nope_0001"), 3);

  // Empty predictions are a valid results file scoring 0.
  const fs::path pred = dir.path() / "pred.json";
  { std::ofstream(pred) << "[]"; }
  const fs::path report = dir.path() / "report";
  EXPECT_EQ(RunCli("eval --gt " + (out / "annotations" / "test.json").string() + " --pred " + pred.string() + " --out " +
                report.string()),
            0);
  EXPECT_TRUE(fs::exists(report / "eval_report.json"));
  EXPECT_TRUE(fs::exists(report / "eval_report.txt"));
  { std::ofstream(pred) << R"([{"image_id": 99999, "category_id": 1, "bbox": [0, 0, 1, 1], "score": 0.5}])"; }
  EXPECT_EQ(RunCli("eval --gt " + (out / "annotations" / "test.json").string() + " --pred " + pred.string() + " --out " +
                report.string()),
            2);
}

}  // namespace
