/* Copyright 2026 The Smelt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "smelt/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "smelt/errors.h"
#include "support/test_support.h"

namespace smelt {
namespace {

using nlohmann::json;
using testing::FixtureDir;
using testing::RunSmelt;

struct Captured {
  int status;
  std::string out;
  std::string err;
};

Captured Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "smelt");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string Fixture(const char* name) { return (FixtureDir() / name).string(); }

TEST(CliTest, ListFormats) {
  Captured text = Cli({"list"});
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("str-human"), std::string::npos);
  Captured js = Cli({"list", "--format", "json"});
  EXPECT_EQ(json::parse(js.out)["smells"].size(), 14u);
  Captured md = Cli({"list", "--format", "markdown"});
  EXPECT_EQ(md.out.rfind("# ", 0), 0u);
}

TEST(CliTest, Explain) {
  Captured c = Cli({"explain", "miss-bin"});
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("Binary missing values"), std::string::npos);
  Captured bad = Cli({"explain", "nope"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("unknown"), std::string::npos);
}

TEST(CliTest, ScanJsonSingleFileIsObject) {
  Captured c = Cli({"scan", "--format", "json", Fixture("clean.csv")});
  EXPECT_EQ(c.status, 0);
  json doc = json::parse(c.out);
  EXPECT_TRUE(doc.is_object());
  EXPECT_EQ(doc["source"], "clean.csv");
}

TEST(CliTest, ScanManyFilesKeepsArgumentOrder) {
  Captured c = Cli({"scan", "--format", "json", "--fail-on", "never",
                    Fixture("str-num.positive.csv"), Fixture("clean.csv"),
                    "/nonexistent/missing.csv"});
  EXPECT_EQ(c.status, 2);
  json doc = json::parse(c.out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["source"], "str-num.positive.csv");
  EXPECT_EQ(doc[1]["source"], "clean.csv");
  EXPECT_EQ(doc[2]["kind"], "error");
  EXPECT_NE(c.err.find("missing.csv"), std::string::npos);
}

TEST(CliTest, ProfileEmitsJson) {
  Captured c = Cli({"profile", Fixture("clean.csv")});
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(json::parse(c.out)["kind"], "profile");
}

TEST(CliTest, ParseOptions) {
  testing::TempDir dir;
  const auto path = dir.path() / "semi.csv";
  testing::WriteFile(path, "a;b\n1;?\n2;x\n");
  Captured c = Cli({"profile", "--delimiter", ";", "--null-token", "?",
                    path.string()});
  json doc = json::parse(c.out);
  EXPECT_EQ(doc["columns"], 2);
  EXPECT_EQ(doc["column_profiles"][1]["missing_count"], 1);
  Captured capped = Cli({"profile", "--max-rows", "1", "--no-header",
                         "--delimiter", ";", path.string()});
  EXPECT_EQ(json::parse(capped.out)["rows"], 1);
  EXPECT_EQ(json::parse(capped.out)["column_profiles"][0]["name"], "col_0");
}

TEST(CliTest, SetEnableDisableAndOutputFile) {
  testing::TempDir dir;
  const auto out = dir.path() / "report.json";
  Captured c = Cli({"scan", "--format", "json", "--set", "corr_threshold=0.99",
                    "--disable", "str-human", "-o", out.string(),
                    Fixture("str-human.positive.csv")});
  EXPECT_EQ(c.status, 0);
  EXPECT_TRUE(c.out.empty());
  json doc = json::parse(testing::ReadFile(out));
  EXPECT_DOUBLE_EQ(doc["config"]["corr_threshold"].get<double>(), 0.99);
  EXPECT_EQ(doc["config"]["enabled"]["str-human"], false);
  EXPECT_EQ(doc["summary"]["total"], 0);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Cli({}).status, 2);
  EXPECT_EQ(Cli({"scan"}).status, 2);
  EXPECT_EQ(Cli({"scan", "--format", "xml", Fixture("clean.csv")}).status, 2);
  EXPECT_EQ(Cli({"scan", "--set", "nope=1", Fixture("clean.csv")}).status, 2);
  EXPECT_EQ(Cli({"scan", "--disable", "nope", Fixture("clean.csv")}).status, 2);
  EXPECT_EQ(Cli({"scan", "--delimiter", "ab", Fixture("clean.csv")}).status, 2);
  EXPECT_EQ(Cli({"scan", "--max-rows", "0", Fixture("clean.csv")}).status, 2);
  EXPECT_EQ(Cli({"--help"}).status, 0);
}

TEST(LoadConfigTest, PrecedenceFileThenSetThenToggles) {
  testing::TempDir dir;
  const auto path = dir.path() / "c.json";
  testing::WriteFile(path, R"({"corr_threshold": 0.7, "corr_min_pairs": 5,
                               "enabled": {"red-dup": false}})");
  ConfigOverrides overrides;
  overrides.set = {"corr_threshold=0.9"};
  overrides.enable = {"red-dup"};
  ScanConfig c = LoadConfig(path, overrides);
  EXPECT_DOUBLE_EQ(c.corr_threshold, 0.9);
  EXPECT_EQ(c.corr_min_pairs, 5u);
  EXPECT_TRUE(c.IsEnabled("red-dup"));
}

TEST(LoadConfigTest, EnvironmentVariableAndErrors) {
  testing::TempDir dir;
  const auto path = dir.path() / "c.json";
  testing::WriteFile(path, R"({"uid_min_rows": 3})");
  setenv(kConfigEnvVar, path.c_str(), 1);
  EXPECT_EQ(LoadConfig(std::nullopt, {}).uid_min_rows, 3u);
  unsetenv(kConfigEnvVar);
  EXPECT_EQ(LoadConfig(std::nullopt, {}).uid_min_rows, 10u);

  testing::WriteFile(path, "{not json");
  EXPECT_THROW(LoadConfig(path, {}), ConfigError);
  EXPECT_THROW(LoadConfig(dir.path() / "absent.json", {}), ConfigError);
}

// End-to-end through the installed binary.

TEST(BinaryTest, ExitStatusFollowsFailOn) {
  // str-human.positive: one warning; misc-balance.positive: one error.
  const std::string warn = Fixture("str-human.positive.csv");
  const std::string err = Fixture("misc-balance.positive.csv");
  const std::string clean = Fixture("clean.csv");
  EXPECT_EQ(RunSmelt({"scan", clean}).status, 0);
  EXPECT_EQ(RunSmelt({"scan", warn}).status, 1);
  EXPECT_EQ(RunSmelt({"scan", "--fail-on", "error", warn}).status, 0);
  EXPECT_EQ(RunSmelt({"scan", "--fail-on", "error", err}).status, 1);
  EXPECT_EQ(RunSmelt({"scan", "--fail-on", "never", err}).status, 0);
  EXPECT_EQ(RunSmelt({"scan", "/nonexistent.csv"}).status, 2);
}

TEST(BinaryTest, MalformedCsvReportsOffset) {
  testing::TempDir dir;
  const auto path = dir.path() / "bad.csv";
  testing::WriteFile(path, "a,b\n1,\"open\n");
  auto r = RunSmelt({"scan", path.string()});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("bad.csv"), std::string::npos);
  EXPECT_NE(r.err.find("6"), std::string::npos);
}

TEST(BinaryTest, VersionFlag) {
  auto r = RunSmelt({"--version"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
}

}  // namespace
}  // namespace smelt
