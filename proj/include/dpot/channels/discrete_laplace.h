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

#ifndef DPOT_CHANNELS_DISCRETE_LAPLACE_H_
#define DPOT_CHANNELS_DISCRETE_LAPLACE_H_

#include <cstdint>

#include "dpot/core/random_stream.h"

namespace dpot {

// Two-sided geometric distribution on the integers:
//   mass(k) = (1 - q) / (1 + q) * q^|k|,   q = exp(-1 / scale).
// With scale = sensitivity / epsilon, adding it to an integer-valued query of
// that sensitivity is exactly epsilon-DP.
class DiscreteLaplace {
 public:
  explicit DiscreteLaplace(double scale);
  // scale = sensitivity / epsilon. epsilon must be positive.
  static DiscreteLaplace for_epsilon(double epsilon, double sensitivity = 2.0);

  double scale() const { return scale_; }
  // Ratio of adjacent masses, exp(-1/scale).
  double decay() const { return decay_; }

  double mass(std::int64_t k) const;
  // P[|X| > m] for m >= 0.
  double tail_above(std::int64_t m) const;
  // P[|X| <= m].
  double central_mass(std::int64_t m) const { return 1.0 - tail_above(m); }
  // Smallest R with P[|X| > R] <= tail.
  std::int64_t truncation_radius(double tail) const;

  // Difference of two i.i.d. geometric draws.
  std::int64_t sample(RandomStream& stream) const;

 private:
  double scale_;
  double decay_;
};

}  // namespace dpot

#endif  // DPOT_CHANNELS_DISCRETE_LAPLACE_H_
