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

#ifndef DPOT_ATTACKS_DP_VIOLATION_H_
#define DPOT_ATTACKS_DP_VIOLATION_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "dpot/core/stats.h"

namespace dpot {

// One attack output: the coordinate, the guess (+1, -1 or kAbstain) and the
// true sign.
struct SignGuess {
  std::size_t index = 0;
  int guess = 0;
  int truth = 1;
};

struct ViolationVerdict {
  std::uint64_t guesses = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  double p_hit = 0;
  double p_miss = 0;
  Interval hit_ci;
  Interval miss_ci;
  // lower(hit) > e^eps * upper(miss) + delta.
  bool violation = false;
};

ViolationVerdict dp_violation_from_counts(std::uint64_t hits,
                                          std::uint64_t misses,
                                          std::uint64_t guesses,
                                          double epsilon, double delta);

// Throws ParameterError on an empty list.
ViolationVerdict dp_violation_score(std::span<const SignGuess> guesses,
                                    double epsilon, double delta);

}  // namespace dpot

#endif  // DPOT_ATTACKS_DP_VIOLATION_H_
