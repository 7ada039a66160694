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

#ifndef DPOT_ATTACKS_CONDITIONING_H_
#define DPOT_ATTACKS_CONDITIONING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dpot/core/random_stream.h"
#include "dpot/core/sign_vector.h"

namespace dpot {

// Boolean function of a mask.
using MaskFunction = std::function<int(const IndexMask&)>;

enum class GapMode { kExact, kSampled };

struct ConditioningGap {
  std::size_t n = 0;
  double alpha = 0;
  // |E[F(R) | R_i = 0] - E[F(R) | R_i = 1]| per coordinate.
  std::vector<double> gaps;
  // Fraction of coordinates with gap >= alpha.
  double bad_fraction = 0;

  // 2 / (n alpha^2).
  double bound() const;
};

// kExact enumerates all 2^n masks (n <= 20, CapacityError otherwise).
// kSampled draws `samples` masks per conditioning value and coordinate.
ConditioningGap conditioning_gap(const MaskFunction& f, std::size_t n,
                                 double alpha, GapMode mode,
                                 RandomStream& stream,
                                 std::uint64_t samples = 4096);

// Exact gaps for a truth table indexed by the mask's low n bits.
ConditioningGap conditioning_gap_table(std::span<const std::uint8_t> table,
                                       std::size_t n, double alpha);

}  // namespace dpot

#endif  // DPOT_ATTACKS_CONDITIONING_H_
