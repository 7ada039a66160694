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

#ifndef DPOT_HARNESS_ESTIMATES_H_
#define DPOT_HARNESS_ESTIMATES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpot/awec/awec.h"
#include "dpot/channels/channel.h"
#include "dpot/core/rational.h"
#include "dpot/harness/report.h"
#include "dpot/wec/wec.h"

namespace dpot {

struct RunOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = all cores
};

// P[|out(v) - <x,y>| <= ell]. Requires trials >= 100; ChannelFault if the
// channel has no designated output.
EstimateReport estimate_accuracy(const Channel& channel, std::int64_t ell,
                                 const RunOptions& run);

// |P[D = 1 | kept] - P[D = 1 | erased]| with a conservative interval built
// from the two Clopper-Pearson intervals.
struct AdvantageEstimate {
  std::string adversary;
  EstimateReport accept_kept;
  EstimateReport accept_erased;
  double point = 0;
  Interval ci;

  Json to_json() const;
};

// Pass iff measured upper bound <= target + slack, slack = CI half-width.
struct TargetCheck {
  std::string metric;
  double upper = 0;
  double target = 0;
  double slack = 0;
  bool pass = false;

  Json to_json() const;
};

struct AwecCertificate {
  AwecParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  EstimateReport erasure;       // P[o_B = erasure]
  EstimateReport alpha;         // P[|o_A - o_B| > ell | kept]
  std::vector<AdvantageEstimate> p;
  std::vector<EstimateReport> q;  // P[|E(v_B) - o_A| <= 1000 ell | erased]
  // Trials where o_A - o_B != <x,y> - out(v) in the kept branch.
  std::uint64_t identity_violations = 0;
  std::vector<TargetCheck> checks;
  bool erasure_pass = false;
  bool pass = false;

  // Max over the registered adversaries: a lower bound on the true p, q.
  double p_upper() const;
  double q_upper() const;
  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

struct AwecTargets {
  double alpha = 0.001;
  double p = 0.001;
  double q = 0.001;
};

// Runs `run.trials` executions over `channel`. Distinguishers read v_A and
// estimators read v_B (keys from the adversary registry; at least one of
// each). When `log` is non-null it receives one record per trial, in trial
// order.
AwecCertificate estimate_awec(const Channel& channel, const AwecParams& params,
                              const std::vector<std::string>& distinguishers,
                              const std::vector<std::string>& estimators,
                              const RunOptions& run,
                              const AwecTargets& targets = {},
                              std::vector<AwecLogRecord>* log = nullptr);

struct GuessEstimate {
  EstimateReport probability;  // P[guess = o-hat_A | erased]
  double parameter = 0;        // 2 P - 1
  Interval parameter_ci;       // clamped to [-1, 1]

  Json to_json() const;
};

struct WecCertificate {
  BucketParams bucket;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  EstimateReport erasure;
  EstimateReport alpha;  // P[o-hat_A != o-hat_B | kept]
  std::vector<AdvantageEstimate> p;
  std::vector<GuessEstimate> q;
  // Trials where the WEC erasure disagrees with the AWEC erasure.
  std::uint64_t erasure_mismatches = 0;
  WecTargets targets;
  std::vector<TargetCheck> checks;
  bool erasure_pass = false;
  bool pass = false;

  double p_upper() const;
  // Upper bound of the q parameter, floored at 0.
  double q_upper() const;
  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

struct WecLogRecord {
  AwecLogRecord awec;
  std::int64_t s = 0;
  std::uint64_t r_gl = 0;
  int o_a = 0;
  std::optional<int> o_b;
};

// Runs the bucketing transform over fresh AWEC executions. Targets default
// to the image of the (0.001, 0.001, 0.001) AWEC targets.
WecCertificate estimate_wec(const Channel& channel, const AwecParams& params,
                            const std::vector<std::string>& distinguishers,
                            const std::vector<std::string>& guessers,
                            const RunOptions& run,
                            std::optional<WecTargets> targets = std::nullopt,
                            std::vector<WecLogRecord>* log = nullptr);

}  // namespace dpot

#endif  // DPOT_HARNESS_ESTIMATES_H_
