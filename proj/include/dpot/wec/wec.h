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

#ifndef DPOT_WEC_WEC_H_
#define DPOT_WEC_WEC_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "dpot/awec/awec.h"
#include "dpot/core/random_stream.h"
#include "dpot/core/rational.h"

namespace dpot {

// ceil(numerator / denominator) for denominator > 0, exact for negatives.
std::int64_t ceil_div(std::int64_t numerator, std::int64_t denominator);

struct BucketParams {
  std::int64_t ell = 1;
  std::int64_t width = 1000;     // 1000 * ell
  std::int64_t n = 0;            // outputs lie in [-n, n]
  std::int64_t min_index = 0;    // smallest reachable bucket
  std::int64_t max_index = 0;    // largest reachable bucket
  unsigned bit_width = 1;        // bits of the predicate mask

  // Width and range for outputs in [-n, n] and offsets in [1, 1000*ell].
  // bit_width is ceil(log2((2n + W) / W) + 1), raised if needed so that
  // every reachable index fits. Throws ParameterError for ell < 1, n < 0,
  // and OverflowError when more than 64 bits would be needed.
  static BucketParams make(std::int64_t n, std::int64_t ell);
};

// ceil((o + s) / (1000 * ell)). Throws IndexError unless 1 <= s <= 1000*ell.
std::int64_t bucket(std::int64_t o, std::int64_t s, std::int64_t ell);

// parity(bits(value - min_index) & r_gl). Throws OverflowError when value is
// outside [min_index, max_index] and IndexError when r_gl has bits above
// bit_width.
int gl_predicate(std::int64_t value, std::uint64_t r_gl,
                 const BucketParams& params);

// Parity of (a & r); the predicate on an already-shifted bit string.
int gl_bits(std::uint64_t a, std::uint64_t r);

struct WecOutcome {
  int o_a = 0;
  std::optional<int> o_b;  // nullopt is the erasure symbol
  AwecOutcome awec;        // underlying outcome, including both views
  std::int64_t s = 1;
  std::uint64_t r_gl = 0;

  bool erased() const { return !o_b.has_value(); }
};

using AwecRunner = std::function<AwecOutcome(RandomStream&)>;

// One run of the bucketing transform on top of one AWEC outcome.
WecOutcome run_wec(const AwecRunner& awec, const BucketParams& params,
                   RandomStream& stream);

// Predictor oracle for the weak decoder.
using PredictorOracle = std::function<int(std::uint64_t)>;

// For each bit i < n_bits, queries pred at `samples_per_bit` random pairs
// (R, R ^ e_i) and sets bit i to the majority of the XORs (ties go to 0).
// samples_per_bit defaults to n_bits. n_bits must be in [1, 64].
std::uint64_t gl_weak_decode(const PredictorOracle& pred, unsigned n_bits,
                             RandomStream& stream,
                             std::optional<unsigned> samples_per_bit =
                                 std::nullopt);

// 44 (alpha + p) <= 1 - q in exact arithmetic. Inputs must lie in [0, 1].
bool ot_feasible(const Rational& alpha, const Rational& p, const Rational& q);

struct WecTargets {
  Rational alpha;  // alpha + 1/1000
  Rational p;      // unchanged
  Rational q;      // 1/2 + 2 (q + 1/100)
  // The other published form, 1/2 + 2.001 q. Reported alongside for
  // comparison only.
  Rational q_alternative;
};

WecTargets awec_to_wec_params(const Rational& alpha, const Rational& p,
                              const Rational& q);

}  // namespace dpot

#endif  // DPOT_WEC_WEC_H_
