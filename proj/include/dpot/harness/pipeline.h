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

#ifndef DPOT_HARNESS_PIPELINE_H_
#define DPOT_HARNESS_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dpot/awec/awec.h"
#include "dpot/channels/channel.h"
#include "dpot/harness/audit.h"
#include "dpot/harness/estimates.h"
#include "dpot/harness/report.h"

namespace dpot {

struct PipelineConfig {
  ChannelSpec channel;
  AwecParams awec;
  // Baselines by default; see README for why stronger adversaries are
  // reported separately.
  std::vector<std::string> distinguishers{"constant"};
  std::vector<std::string> estimators{"constant"};
  std::vector<std::string> guessers{"random-bit"};
  RunOptions run;
  std::uint64_t audit_trials = 10000;

  // Throws ConfigError on zero trials or unknown adversary keys.
  void validate() const;
  Json to_json() const;
};

struct FeasibilityVerdict {
  Rational alpha;  // measured upper bounds, rounded to 1e-12
  Rational p;
  Rational q;
  bool feasible = false;

  Json to_json() const;
};

// A pure function of the measured WEC upper bounds (q as the 2P - 1
// parameter, floored at 0).
FeasibilityVerdict feasibility_from_bounds(double alpha_upper, double p_upper,
                                           double q_upper);

struct PipelineReport {
  Json config;
  EstimateReport accuracy;
  AwecCertificate awec;
  WecCertificate wec;
  FeasibilityVerdict feasibility;
  AuditSuite audit;

  bool dp_violation() const { return audit.any_violation; }
  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

// accuracy -> AWEC certificate -> WEC certificate -> OT feasibility, plus a DP
// audit of the channel on the default neighbor pairs.
PipelineReport pipeline_report(const PipelineConfig& config);

}  // namespace dpot

#endif  // DPOT_HARNESS_PIPELINE_H_
