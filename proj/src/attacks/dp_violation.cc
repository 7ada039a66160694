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

#include "dpot/attacks/dp_violation.h"

#include <cmath>

#include "dpot/core/errors.h"

namespace dpot {

ViolationVerdict dp_violation_from_counts(std::uint64_t hits,
                                          std::uint64_t misses,
                                          std::uint64_t guesses,
                                          double epsilon, double delta) {
  if (guesses == 0) throw ParameterError("dp_violation_score: no guesses");
  if (hits + misses > guesses) {
    throw ParameterError("dp_violation_score: more answers than guesses");
  }
  ViolationVerdict v;
  v.guesses = guesses;
  v.hits = hits;
  v.misses = misses;
  v.p_hit = static_cast<double>(hits) / static_cast<double>(guesses);
  v.p_miss = static_cast<double>(misses) / static_cast<double>(guesses);
  v.hit_ci = clopper_pearson(hits, guesses);
  v.miss_ci = clopper_pearson(misses, guesses);
  v.violation = v.hit_ci.low > std::exp(epsilon) * v.miss_ci.high + delta;
  return v;
}

ViolationVerdict dp_violation_score(std::span<const SignGuess> guesses,
                                    double epsilon, double delta) {
  if (guesses.empty()) throw ParameterError("dp_violation_score: no guesses");
  std::uint64_t hits = 0, misses = 0;
  for (const SignGuess& g : guesses) {
    if (g.guess == 0) continue;
    if (g.guess == g.truth) {
      ++hits;
    } else if (g.guess == -g.truth) {
      ++misses;
    } else {
      throw ParameterError("dp_violation_score: guess must be +1, -1 or 0");
    }
  }
  return dp_violation_from_counts(hits, misses, guesses.size(), epsilon,
                                  delta);
}

}  // namespace dpot
