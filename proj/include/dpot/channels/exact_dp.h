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

#ifndef DPOT_CHANNELS_EXACT_DP_H_
#define DPOT_CHANNELS_EXACT_DP_H_

#include <cstddef>
#include <cstdint>

#include "dpot/channels/channel.h"

namespace dpot {

// Result of an exact privacy-loss computation for one party's view.
struct ExactDpResult {
  // max over neighbouring inputs of the other party and over view values v
  // of ln(P[V = v | w] / P[V = v | w']). +infinity when some v has positive
  // mass under w and zero mass under w'.
  double max_log_ratio = 0;
  // Distinct (view-law, view-law') pairs compared after deduplication.
  std::size_t law_pairs = 0;
  // Support points visited across all compared pairs.
  std::size_t support_points = 0;
  // Mass of the noise support left out by truncation (per noise draw).
  double truncated_mass = 0;

  bool satisfies(double epsilon) const {
    return max_log_ratio <= epsilon + 1e-9;
  }
};

// Enumerates every input pair (w, w') of the non-observing party that
// differs in one coordinate, for every input of the observing party, and
// computes the exact likelihood ratio of the observer's view over its
// support. Noise support is truncated where the remaining tail mass drops
// below `tail`. Supported kinds: randomized-response, trusted-laplace,
// split-noise, leaky. Requires n <= 12 (CapacityError otherwise).
ExactDpResult exact_view_privacy(const ChannelSpec& spec, Party observer,
                                 double tail = 1e-12);

}  // namespace dpot

#endif  // DPOT_CHANNELS_EXACT_DP_H_
