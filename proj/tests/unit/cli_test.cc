//
// Copyright 2026 The dpot Authors.
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
//

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dpot/cli/cli.h"
#include "gtest/gtest.h"

namespace dpot::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempFile(const std::string& name,
                               const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(CliParseTest, HelpListsEveryFlag) {
  const Outcome o = Invoke({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  for (const char* flag :
       {"--channel", "--eps", "--delta", "--n", "--ell", "--lambda1",
        "--lambda2", "--k", "--trials", "--seed", "--adversaries",
        "--leak-index", "--output", "--format", "--threads", "--gate",
        "--exact", "--config", "--attack", "--gamma", "--bits",
        "--pred-accuracy", "--trial-log"}) {
    EXPECT_NE(o.out.find(flag), std::string::npos) << flag;
  }
}

TEST(CliParseTest, UnknownFlagAndCommandAreConfigErrors) {
  EXPECT_EQ(Invoke({"awec", "--bogus", "1"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"awec", "--format", "xml", "--seed", "1"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"audit", "--trial-log", "x.csv", "--seed", "1"}).code,
            kExitConfig);
  EXPECT_EQ(Invoke({"awec", "--exact", "--seed", "1"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"awec", "--adversaries", "oracle", "--seed", "1"}).code,
            kExitConfig);
  EXPECT_EQ(Invoke({"awec", "--trials", "0", "--seed", "1"}).code, kExitConfig);
}

TEST(CliParseTest, FlagsOverrideTheConfigFile) {
  const auto path =
      TempFile("dpot_cli_layer.ini", "eps = 2\nn = 50\ntrials = 300\n");
  std::ostringstream out, err;
  const ParseResult r = parse_arguments(
      {"awec", "--config", path.string(), "--n", "60"}, out, err);
  ASSERT_FALSE(r.exit_now) << err.str();
  EXPECT_EQ(r.config.epsilon, 2.0);
  EXPECT_EQ(r.config.resolved_n(), 60u);
  EXPECT_EQ(r.config.resolved_trials(), 300u);
  EXPECT_EQ(r.config.ell, 14);
}

TEST(CliParseTest, UnknownConfigKeyIsAnError) {
  const auto path = TempFile("dpot_cli_bad.ini", "eps = 2\nwidth = 9\n");
  EXPECT_EQ(Invoke({"awec", "--config", path.string()}).code, kExitConfig);
}

TEST(CliParseTest, CommandDefaults) {
  std::ostringstream out, err;
  const auto audit = parse_arguments({"audit"}, out, err).config;
  EXPECT_EQ(audit.resolved_n(), 8u);
  EXPECT_EQ(audit.resolved_trials(), 10000u);
  const auto attack = parse_arguments({"attack"}, out, err).config;
  EXPECT_EQ(attack.resolved_n(), 100u);
  EXPECT_DOUBLE_EQ(attack.resolved_delta(), 1.0 / 300);
  const auto pipeline = parse_arguments({}, out, err).config;
  EXPECT_EQ(pipeline.command, "pipeline");
  EXPECT_EQ(pipeline.resolved_n(), 100000u);
  EXPECT_EQ(pipeline.awec_params().k, 5327u);
}

TEST(CliRunTest, GlDecodeGate) {
  const Outcome ok = Invoke({"gl-decode", "--trials", "200", "--seed", "3",
                          "--gate"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  const Outcome bad = Invoke({"gl-decode", "--trials", "200", "--seed", "3",
                           "--pred-accuracy", "0.6", "--gate"});
  EXPECT_EQ(bad.code, kExitGate);
  // Without --gate a failing certificate still exits 0.
  EXPECT_EQ(Invoke({"gl-decode", "--trials", "200", "--seed", "3",
                 "--pred-accuracy", "0.6"})
                .code,
            kExitOk);
}

TEST(CliRunTest, AuditReportCarriesConfigAndVerdict) {
  const Outcome o = Invoke({"audit", "--channel", "leaky", "--leak-index", "3",
                         "--eps", "1", "--delta", "0.01", "--trials", "2000",
                         "--seed", "4"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["config"]["command"], "audit");
  EXPECT_EQ(j["config"]["leak_index"], 3);
  EXPECT_FALSE(j["config"].contains("threads"));
  EXPECT_TRUE(j["result"]["any_violation"].get<bool>());
}

TEST(CliRunTest, CsvStartsWithTheConfigComment) {
  const Outcome o = Invoke({"appendix-a", "--trials", "300", "--seed", "5",
                         "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.rfind("# config {", 0), 0u);
  EXPECT_NE(o.out.find("appendix_a.tv_real_sim"), std::string::npos);
}

TEST(CliRunTest, MissingSeedIsEchoed) {
  const Outcome o = Invoke({"gl-decode", "--trials", "100", "--bits", "8"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.err.find("seed"), std::string::npos);
}

TEST(CliRunTest, ReportsAreByteIdenticalAcrossThreadCounts) {
  const std::vector<std::string> base = {
      "wec", "--n", "400", "--ell", "1", "--k", "12", "--trials", "600",
      "--seed", "6", "--adversaries", "hardwired-y", "random-bit"};
  auto with_threads = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return Invoke(args);
  };
  const Outcome one = with_threads("1");
  const Outcome four = with_threads("4");
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, four.out);
  EXPECT_FALSE(one.out.empty());
}

TEST(CliRunTest, OutputAndTrialLogFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto report = dir / "dpot_cli_report.json";
  const auto log = dir / "dpot_cli_log.csv";
  const Outcome o = Invoke({"awec", "--n", "200", "--k", "5", "--ell", "1",
                         "--trials", "150", "--seed", "7", "--output",
                         report.string(), "--trial-log", log.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(report);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["result"]["trials"], 150);
  std::ifstream log_in(log);
  std::string line;
  int lines = 0;
  while (std::getline(log_in, line)) ++lines;
  EXPECT_EQ(lines, 151);  // header plus one row per trial
}

TEST(CliRunTest, ModelFaultExitsThree) {
  // appendix-a supports n <= 16 only.
  EXPECT_EQ(Invoke({"appendix-a", "--n", "17", "--trials", "10", "--seed", "1"})
                .code,
            kExitFault);
}

}  // namespace
}  // namespace dpot::cli
