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

#ifndef DPOT_AWEC_AWEC_H_
#define DPOT_AWEC_AWEC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpot/channels/channel.h"
#include "dpot/core/random_stream.h"
#include "dpot/core/sign_vector.h"

namespace dpot {

struct AwecParams {
  std::size_t n = 0;
  std::int64_t ell = 1;    // accuracy radius of the channel
  double epsilon = 1.0;    // channel privacy, nats
  double lambda1 = 1.0;
  double lambda2 = 10.0;
  std::size_t k = 0;       // number of resampled indices in the erasure branch

  // floor(e^{lambda1 * eps} * lambda2 * ell^2). Throws ParameterError when
  // the inputs are not positive or the value does not fit.
  static std::size_t noise_index_count(double epsilon, double lambda1,
                                       double lambda2, std::int64_t ell);

  // Fills k from the formula unless k_override is given, then validates.
  static AwecParams make(std::size_t n, std::int64_t ell, double epsilon,
                         double lambda1 = 1.0, double lambda2 = 10.0,
                         std::optional<std::size_t> k_override = std::nullopt);

  // Throws ParameterError unless 1 <= k <= n and ell >= 1.
  void validate() const;

  // Non-fatal notes on the asymptotic regime the construction is stated for
  // (eps <= log^0.9 n, delta <= 1/(3n)). Empty when all hold.
  std::vector<std::string> regime_diagnostics(double delta) const;
};

// A's side: its input, channel view, the mask it chose, and the part of B's
// (possibly perturbed) input it received.
struct AliceView {
  SignVector x;
  ViewPayload u;
  MaskedSigns y_hat;  // y-hat_{-r}: mask is the complement of r

  const IndexMask& revealed_mask() const { return y_hat.mask(); }
  IndexMask r() const { return y_hat.mask().complement(); }
};

// B's side: its input, channel view, the part of x it received, and in the
// erasure branch the resampled indices and the perturbed input.
struct BobView {
  SignVector y;
  ViewPayload v;
  MaskedSigns x_r;  // mask is r
  std::vector<std::size_t> resampled;   // i_1..i_k, draw order (erasure only)
  std::optional<SignVector> y_tilde;    // erasure only

  const IndexMask& r() const { return x_r.mask(); }
};

struct AwecOutcome {
  std::int64_t o_a = 0;
  std::optional<std::int64_t> o_b;  // nullopt is the erasure symbol
  AliceView view_a;
  BobView view_b;

  bool erased() const { return !o_b.has_value(); }
};

// One run of the construction over `channel`. Party randomness comes from
// labelled substreams of `stream`, so the outcome is a function of the
// stream's seed. Throws ParameterError if channel.n() != params.n and
// ChannelFault if the channel sample has no designated output.
AwecOutcome run_awec(const Channel& channel, const AwecParams& params,
                     RandomStream& stream);

// One line of the per-trial log.
struct AwecLogRecord {
  bool erased = false;
  std::int64_t o_a = 0;
  std::optional<std::int64_t> o_b;
  std::optional<std::int64_t> abs_gap;  // |o_a - o_b| when not erased

  static AwecLogRecord from(const AwecOutcome& outcome);
};

}  // namespace dpot

#endif  // DPOT_AWEC_AWEC_H_
