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

#include "dpot/attacks/predictor.h"

#include <cmath>
#include <string>

#include "dpot/core/errors.h"

namespace dpot {
namespace {

// Average of F over s masks drawn uniformly subject to r_i = bit.
double Estimate(const RevealOracle& f, const SignVector& z, std::size_t i,
                bool bit, std::uint64_t s, RandomStream& stream) {
  std::uint64_t ones = 0;
  for (std::uint64_t t = 0; t < s; ++t) {
    IndexMask r = IndexMask::uniform(z.size(), stream);
    r.set(i, bit);
    ones += f(MaskedSigns(z, std::move(r))) ? 1 : 0;
  }
  return static_cast<double>(ones) / static_cast<double>(s);
}

}  // namespace

PredictorParams PredictorParams::for_gamma(double gamma, std::size_t n) {
  if (!(gamma > 0 && gamma < 1)) {
    throw ParameterError("predictor: gamma must lie in (0, 1)");
  }
  if (n == 0) throw ParameterError("predictor: n must be positive");
  PredictorParams p;
  p.gamma = gamma;
  const double s =
      std::ceil(128.0 * std::log(12.0 * static_cast<double>(n)) /
                (gamma * gamma));
  if (s > 1e15) throw ParameterError("predictor: sample count overflows");
  p.samples = static_cast<std::uint64_t>(s);
  p.threshold = gamma / 4;
  return p;
}

int predictor_g(const PredictorParams& params, const RevealOracle& f,
                std::size_t i, const SignVector& z, RandomStream& stream,
                PredictorTrace* trace) {
  if (i >= z.size()) throw IndexError("predictor: index out of range");
  if (params.samples == 0) throw ParameterError("predictor: zero samples");
  SignVector z_minus = z;
  z_minus.set(i, -1);
  SignVector z_plus = z;
  z_plus.set(i, 1);
  const double mu_minus = Estimate(f, z_minus, i, true, params.samples, stream);
  const double mu_plus = Estimate(f, z_plus, i, true, params.samples, stream);
  // r_i = 0 here, so coordinate i is masked out of every query.
  const double mu_star = Estimate(f, z_plus, i, false, params.samples, stream);
  if (trace) *trace = {mu_minus, mu_plus, mu_star};

  const double t = params.threshold;
  const double d_minus = std::abs(mu_minus - mu_star);
  const double d_plus = std::abs(mu_plus - mu_star);
  if (d_plus < t && d_minus > t) return 1;
  if (d_minus < t && d_plus > t) return -1;
  return kAbstain;
}

double ATildeParams::effective_gamma() const {
  return gamma.value_or(1.0 / (2000.0 * static_cast<double>(k)));
}

int attack_a_tilde(const Distinguisher& a, const ATildeParams& params,
                   std::size_t i, const SignVector& y, const SignVector& x,
                   const ViewPayload& u, RandomStream& stream) {
  const std::size_t n = y.size();
  if (x.size() != n) throw DimensionError("attack_a_tilde: x, y lengths");
  if (i >= n) throw IndexError("attack_a_tilde: index out of range");
  if (params.k < 1) throw ParameterError("attack_a_tilde: k must be >= 1");

  const std::size_t j = 1 + stream.uniform_below(params.k);
  SignVector z = y;
  z.set(i, 1);  // placeholder; G overwrites coordinate i
  for (std::size_t t = 0; t + 1 < j; ++t) {
    const std::size_t idx = stream.uniform_below(n);
    if (idx != i) z.set(idx, stream.random_sign());
  }

  RandomStream coins = stream.derive("distinguisher");
  const RevealOracle f = [&](const MaskedSigns& revealed) {
    // A's AWEC view with mask 1 - r reveals y-hat exactly where r_i = 1.
    AliceView view{x, u, revealed};
    return a.evaluate(view, nullptr, coins);
  };
  const PredictorParams g =
      PredictorParams::for_gamma(params.effective_gamma(), n);
  return predictor_g(g, f, i, z, stream);
}

}  // namespace dpot
