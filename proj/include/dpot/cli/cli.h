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

#ifndef DPOT_CLI_CLI_H_
#define DPOT_CLI_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpot/awec/awec.h"
#include "dpot/channels/channel.h"
#include "dpot/harness/report.h"

namespace dpot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitGate = 2;
inline constexpr int kExitFault = 3;

struct ExperimentConfig {
  std::string command = "pipeline";
  std::string channel = "trusted-laplace";
  double epsilon = 1.0;
  std::optional<double> delta;
  std::optional<std::size_t> n;
  std::int64_t ell = 14;
  double lambda1 = 1.0;
  double lambda2 = 10.0;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> adversaries;
  std::optional<std::size_t> leak_index;
  std::string output;  // empty: standard output
  std::string format = "json-tree";
  unsigned threads = 0;
  bool gate = false;
  bool exact = false;
  std::string attack = "a-tilde";
  std::optional<double> gamma;
  unsigned bits = 32;
  double pred_accuracy = 0.9;
  std::string trial_log;

  // Command-dependent defaults.
  std::size_t resolved_n() const;
  std::uint64_t resolved_trials() const;
  double resolved_delta() const;

  // Throws ConfigError on unknown adversary keys, zero trials, or flags the
  // command does not support.
  void validate() const;
  ChannelSpec channel_spec() const;
  AwecParams awec_params() const;
  // Resolved configuration, without the thread count (reports must not
  // depend on it).
  Json to_json() const;
};

struct ParseResult {
  ExperimentConfig config;
  bool exit_now = false;  // --help or a parse error was already reported
  int exit_code = kExitOk;
};

// Flags override the --config file, which overrides the defaults. Unknown
// flags and unknown config keys are errors.
ParseResult parse_arguments(const std::vector<std::string>& args,
                            std::ostream& out, std::ostream& err);

// Runs the experiment and writes the report to config.output (or `out`).
// Progress and the one-line summary go to `err`.
int execute(ExperimentConfig config, std::ostream& out, std::ostream& err);

// parse_arguments followed by execute; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dpot::cli

#endif  // DPOT_CLI_CLI_H_
