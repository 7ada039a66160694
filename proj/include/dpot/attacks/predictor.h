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

#ifndef DPOT_ATTACKS_PREDICTOR_H_
#define DPOT_ATTACKS_PREDICTOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "dpot/attacks/adversaries.h"
#include "dpot/channels/channel.h"
#include "dpot/core/random_stream.h"
#include "dpot/core/sign_vector.h"

namespace dpot {

struct PredictorParams {
  double gamma = 0.1;
  std::uint64_t samples = 1;  // per estimate
  double threshold = 0.025;   // gamma / 4

  // samples = ceil(128 ln(12 n) / gamma^2), threshold = gamma / 4.
  // Throws ParameterError unless 0 < gamma < 1 and n >= 1.
  static PredictorParams for_gamma(double gamma, std::size_t n);
};

// F(r, z_r, w): sees a mask and the signs it reveals. Any auxiliary input w
// is bound into the callable.
using RevealOracle = std::function<int(const MaskedSigns& revealed)>;

struct PredictorTrace {
  double mu_minus = 0;
  double mu_plus = 0;
  double mu_star = 0;
};

// The predictor G. z carries z_{-i}; its coordinate i is never read.
// Returns +1, -1 or kAbstain.
int predictor_g(const PredictorParams& params, const RevealOracle& f,
                std::size_t i, const SignVector& z, RandomStream& stream,
                PredictorTrace* trace = nullptr);

struct ATildeParams {
  std::size_t k = 1;
  // Advantage parameter handed to G. Defaults to 1 / (2000 k).
  std::optional<double> gamma;

  double effective_gamma() const;
};

// Algorithm A-tilde: guesses y_i from (i, y_{-i}, x, u) using a distinguisher
// for A's AWEC view. y's coordinate i is never read.
int attack_a_tilde(const Distinguisher& a, const ATildeParams& params,
                   std::size_t i, const SignVector& y, const SignVector& x,
                   const ViewPayload& u, RandomStream& stream);

}  // namespace dpot

#endif  // DPOT_ATTACKS_PREDICTOR_H_
