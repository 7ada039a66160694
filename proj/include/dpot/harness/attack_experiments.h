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

#ifndef DPOT_HARNESS_ATTACK_EXPERIMENTS_H_
#define DPOT_HARNESS_ATTACK_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dpot/attacks/dp_violation.h"
#include "dpot/attacks/predictor.h"
#include "dpot/attacks/reconstruction.h"
#include "dpot/channels/channel.h"
#include "dpot/harness/estimates.h"
#include "dpot/harness/report.h"

namespace dpot {

// Aggregate of an attack run over uniformly drawn coordinates i, scored as a
// DP violation: lower(P[guess = truth]) > e^eps * upper(P[guess = -truth]) +
// delta.
struct AttackReport {
  std::string attack;
  std::string adversary;
  std::size_t n = 0;
  std::size_t k = 0;
  double gamma = 0;  // A-tilde only
  double epsilon = 0;
  double delta = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t answered = 0;  // trials with a sign output
  ViolationVerdict verdict;

  std::uint64_t abstentions() const { return trials - answered; }
  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

// Each trial draws (x, y, u) from the channel and i <- [n], instantiates the
// distinguisher with the trial's inputs as advice, and guesses y_i.
AttackReport a_tilde_experiment(const Channel& channel,
                                const std::string& distinguisher,
                                const ATildeParams& params, double epsilon,
                                double delta, const RunOptions& run);

// Each trial draws (x, y, v) from the channel and i <- [n] and guesses x_i
// with the reference Dist. The estimator's advice is the trial's inputs.
AttackReport b_tilde_experiment(const Channel& channel,
                                const std::string& estimator, std::size_t k,
                                const ReferenceDistParams& dist, double epsilon,
                                double delta, const RunOptions& run);

}  // namespace dpot

#endif  // DPOT_HARNESS_ATTACK_EXPERIMENTS_H_
