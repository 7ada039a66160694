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

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "dpot/attacks/adversaries.h"
#include "dpot/cli/cli.h"
#include "dpot/core/errors.h"

namespace dpot::cli {
namespace {

const std::vector<std::string> kCommands{
    "pipeline", "awec", "wec", "audit", "attack", "appendix-a", "gl-decode"};

bool IsOneOf(const std::string& v, std::initializer_list<const char*> set) {
  return std::any_of(set.begin(), set.end(),
                     [&](const char* s) { return v == s; });
}

}  // namespace

std::size_t ExperimentConfig::resolved_n() const {
  if (n) return *n;
  if (IsOneOf(command, {"audit", "appendix-a"})) return 8;
  if (command == "attack") return 100;
  return 100000;
}

std::uint64_t ExperimentConfig::resolved_trials() const {
  if (trials) return *trials;
  if (command == "appendix-a") return 100000;
  if (command == "gl-decode" || command == "attack") return 1000;
  return 10000;
}

double ExperimentConfig::resolved_delta() const {
  if (delta) return *delta;
  // The attack contracts are stated against delta = 1/(3n).
  if (command == "attack") return 1.0 / (3.0 * resolved_n());
  return 0.0;
}

void ExperimentConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) ==
      kCommands.end()) {
    throw ConfigError("unknown command '" + command + "'");
  }
  if (resolved_trials() == 0) throw ConfigError("trials must be at least 1");
  for (const auto& key : adversaries) {
    if (!is_adversary_key(key)) {
      throw ConfigError("unknown adversary '" + key + "'");
    }
  }
  if (exact && command != "audit") {
    throw ConfigError("--exact is supported by the audit command only");
  }
  if (!trial_log.empty() && !IsOneOf(command, {"awec", "wec"})) {
    throw ConfigError("--trial-log is supported by awec and wec only");
  }
  if (format != "json-tree" && format != "csv") {
    throw ConfigError("unknown format '" + format + "'");
  }
  if (attack != "a-tilde" && attack != "b-tilde") {
    throw ConfigError("unknown attack '" + attack + "'");
  }
  if (pred_accuracy < 0 || pred_accuracy > 1) {
    throw ConfigError("--pred-accuracy must lie in [0, 1]");
  }
  if (bits == 0 || bits > 64) throw ConfigError("--bits must lie in [1, 64]");
  parse_channel_kind(channel);
}

ChannelSpec ExperimentConfig::channel_spec() const {
  ChannelSpec spec;
  spec.kind = parse_channel_kind(channel);
  spec.n = resolved_n();
  spec.epsilon = epsilon;
  spec.delta = resolved_delta();
  if (leak_index) {
    spec.leak_index = *leak_index;
  } else if (spec.kind == ChannelKind::kLeaky) {
    spec.leak_index = 0;
  }
  spec.validate();
  return spec;
}

AwecParams ExperimentConfig::awec_params() const {
  return AwecParams::make(resolved_n(), ell, epsilon, lambda1, lambda2, k);
}

Json ExperimentConfig::to_json() const {
  Json j{{"command", command},
         {"channel", channel},
         {"epsilon", epsilon},
         {"delta", resolved_delta()},
         {"n", resolved_n()},
         {"ell", ell},
         {"lambda1", lambda1},
         {"lambda2", lambda2},
         {"trials", resolved_trials()},
         {"seed", seed.value_or(0)},
         {"adversaries", adversaries},
         {"format", format}};
  if (k) j["k"] = *k;
  if (leak_index) j["leak_index"] = *leak_index;
  if (command == "audit") j["exact"] = exact;
  if (command == "attack") {
    j["attack"] = attack;
    if (gamma) j["gamma"] = *gamma;
  }
  if (command == "gl-decode") {
    j["bits"] = bits;
    j["pred_accuracy"] = pred_accuracy;
  }
  return j;
}

ParseResult parse_arguments(const std::vector<std::string>& args,
                            std::ostream& out, std::ostream& err) {
  ParseResult result;
  ExperimentConfig& c = result.config;
  CLI::App app{"Simulation lab for the DP inner product to OT reduction",
               "dpot"};
  app.allow_config_extras(false);
  app.set_config("--config", "", "key=value configuration file");
  app.add_option("command", c.command, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--channel", c.channel, "Channel kind")
      ->check(CLI::IsMember({"randomized-response", "trusted-laplace",
                             "split-noise", "leaky", "wrapped-protocol"}));
  app.add_option("--eps", c.epsilon, "Privacy parameter epsilon");
  app.add_option("--delta", c.delta, "Privacy parameter delta");
  app.add_option("--n", c.n, "Input length");
  app.add_option("--ell", c.ell, "Accuracy radius ell");
  app.add_option("--lambda1", c.lambda1, "Noise-count exponent factor");
  app.add_option("--lambda2", c.lambda2, "Noise-count multiplier");
  app.add_option("--k", c.k, "Override the number of resampled coordinates");
  app.add_option("--trials", c.trials, "Monte Carlo trials");
  app.add_option("--seed", c.seed, "Root seed (random and echoed if absent)");
  app.add_option("--adversaries", c.adversaries,
                 "Comma-separated adversary keys")
      ->delimiter(',');
  app.add_option("--leak-index", c.leak_index, "Leaked coordinate (leaky)");
  app.add_option("--output", c.output, "Report path (default stdout)");
  app.add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json-tree", "csv"}));
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  app.add_flag("--gate", c.gate, "Exit 2 when the certificate fails");
  app.add_flag("--exact", c.exact, "Exact enumeration where supported");
  app.add_option("--attack", c.attack, "Attack for the attack command")
      ->check(CLI::IsMember({"a-tilde", "b-tilde"}));
  app.add_option("--gamma", c.gamma, "Predictor advantage (a-tilde)");
  app.add_option("--bits", c.bits, "String length for gl-decode");
  app.add_option("--pred-accuracy", c.pred_accuracy,
                 "Per-query oracle accuracy for gl-decode");
  app.add_option("--trial-log", c.trial_log, "Per-trial CSV log path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_now = true;
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kExitOk : kExitConfig;
  }
  return result;
}

}  // namespace dpot::cli
