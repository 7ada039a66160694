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

#include "dpot/channels/discrete_laplace.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include "dpot/core/errors.h"

namespace dpot {

DiscreteLaplace::DiscreteLaplace(double scale)
    : scale_(scale), decay_(std::exp(-1.0 / scale)) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw ParameterError("DiscreteLaplace: scale must be positive and finite");
  }
}

DiscreteLaplace DiscreteLaplace::for_epsilon(double epsilon,
                                             double sensitivity) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw ParameterError("DiscreteLaplace: epsilon must be positive");
  }
  return DiscreteLaplace(sensitivity / epsilon);
}

double DiscreteLaplace::mass(std::int64_t k) const {
  const double q = decay_;
  return (1.0 - q) / (1.0 + q) *
         std::pow(q, static_cast<double>(k < 0 ? -k : k));
}

double DiscreteLaplace::tail_above(std::int64_t m) const {
  if (m < 0) return 1.0;
  // 2 * sum_{k > m} mass(k) = 2 q^{m+1} / (1 + q).
  const double q = decay_;
  return 2.0 * std::pow(q, static_cast<double>(m + 1)) / (1.0 + q);
}

std::int64_t DiscreteLaplace::truncation_radius(double tail) const {
  if (!(tail > 0)) throw ParameterError("truncation_radius: tail must be > 0");
  std::int64_t r = 0;
  while (tail_above(r) > tail) ++r;
  return r;
}

std::int64_t DiscreteLaplace::sample(RandomStream& stream) const {
  std::geometric_distribution<std::int64_t> geometric(1.0 - decay_);
  const std::int64_t a = geometric(stream);
  const std::int64_t b = geometric(stream);
  return a - b;
}

}  // namespace dpot
