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

#include "dpot/awec/awec.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dpot/core/errors.h"

namespace dpot {

std::size_t AwecParams::noise_index_count(double epsilon, double lambda1,
                                          double lambda2, std::int64_t ell) {
  if (!(epsilon >= 0) || !(lambda1 > 0) || !(lambda2 > 0) || ell < 1) {
    throw ParameterError(
        "noise index count needs eps >= 0, lambda1 > 0, lambda2 > 0, ell >= 1");
  }
  const long double value = std::exp(static_cast<long double>(lambda1) *
                                     static_cast<long double>(epsilon)) *
                            static_cast<long double>(lambda2) *
                            static_cast<long double>(ell) *
                            static_cast<long double>(ell);
  if (!std::isfinite(static_cast<double>(value)) ||
      value >= static_cast<long double>(
                   std::numeric_limits<std::int64_t>::max())) {
    throw ParameterError("noise index count overflows");
  }
  return static_cast<std::size_t>(std::floor(value));
}

AwecParams AwecParams::make(std::size_t n, std::int64_t ell, double epsilon,
                            double lambda1, double lambda2,
                            std::optional<std::size_t> k_override) {
  AwecParams p;
  p.n = n;
  p.ell = ell;
  p.epsilon = epsilon;
  p.lambda1 = lambda1;
  p.lambda2 = lambda2;
  p.k = k_override ? *k_override
                   : noise_index_count(epsilon, lambda1, lambda2, ell);
  p.validate();
  return p;
}

void AwecParams::validate() const {
  if (ell < 1) throw ParameterError("ell must be at least 1");
  if (k < 1 || k > n) {
    throw ParameterError("k = " + std::to_string(k) +
                         " must lie in [1, n] with n = " + std::to_string(n));
  }
}

std::vector<std::string> AwecParams::regime_diagnostics(double delta) const {
  std::vector<std::string> notes;
  const double log_n = std::log(static_cast<double>(n));
  if (n > 1 && epsilon > std::pow(log_n, 0.9)) {
    std::ostringstream os;
    os << "epsilon " << epsilon << " exceeds log(n)^0.9 = "
       << std::pow(log_n, 0.9);
    notes.push_back(os.str());
  }
  if (delta > 1.0 / (3.0 * static_cast<double>(n))) {
    std::ostringstream os;
    os << "delta " << delta << " exceeds 1/(3n) = "
       << 1.0 / (3.0 * static_cast<double>(n));
    notes.push_back(os.str());
  }
  // The secrecy argument needs the resampled mass to swamp the 1000*ell
  // window; report how far the configuration is from that.
  const double spread = std::sqrt(static_cast<double>(k));
  if (spread < 1000.0 * static_cast<double>(ell)) {
    std::ostringstream os;
    os << "sqrt(k) = " << spread << " is below the 1000*ell = " << 1000 * ell
       << " secrecy window; B-side secrecy is not expected at this size";
    notes.push_back(os.str());
  }
  return notes;
}

AwecOutcome run_awec(const Channel& channel, const AwecParams& params,
                     RandomStream& stream) {
  params.validate();
  if (channel.n() != params.n) {
    throw ParameterError("channel size " + std::to_string(channel.n()) +
                         " differs from AWEC size " + std::to_string(params.n));
  }
  const RandomStream base(stream());  // advance the caller's stream
  RandomStream channel_stream = base.derive("channel");
  RandomStream alice = base.derive("alice");
  RandomStream bob = base.derive("bob");

  ChannelSample sample = channel.sample(channel_stream);
  const std::optional<std::int64_t> out_v = sample.out_v();
  if (!out_v) {
    throw ChannelFault("channel " + channel.name() +
                       " produced no designated output");
  }
  if (sample.x.size() != params.n || sample.y.size() != params.n) {
    throw ChannelFault("channel " + channel.name() +
                       " produced inputs of the wrong length");
  }

  // A: choose r, reveal x_r.
  const IndexMask r = IndexMask::uniform(params.n, alice);
  MaskedSigns x_r(sample.x, r);

  // B: erasure coin.
  const bool erase = bob.fair_coin();
  AwecOutcome outcome;
  BobView& vb = outcome.view_b;
  if (!erase) {
    outcome.o_b = *out_v - x_r.inner_product(sample.y);
    outcome.view_a.y_hat = MaskedSigns(sample.y, r.complement());
  } else {
    SignVector y_tilde = sample.y;
    vb.resampled.reserve(params.k);
    for (std::size_t t = 0; t < params.k; ++t) {
      vb.resampled.push_back(bob.uniform_below(params.n));
    }
    for (std::size_t i : vb.resampled) {
      y_tilde.set(i, bob.random_sign());
    }
    outcome.view_a.y_hat = MaskedSigns(y_tilde, r.complement());
    vb.y_tilde = std::move(y_tilde);
  }
  outcome.o_a = outcome.view_a.y_hat.inner_product(sample.x);

  outcome.view_a.x = std::move(sample.x);
  outcome.view_a.u = std::move(sample.u);
  vb.y = std::move(sample.y);
  vb.v = std::move(sample.v);
  vb.x_r = std::move(x_r);
  return outcome;
}

AwecLogRecord AwecLogRecord::from(const AwecOutcome& outcome) {
  AwecLogRecord rec;
  rec.erased = outcome.erased();
  rec.o_a = outcome.o_a;
  rec.o_b = outcome.o_b;
  if (outcome.o_b) {
    const std::int64_t d = outcome.o_a - *outcome.o_b;
    rec.abs_gap = d < 0 ? -d : d;
  }
  return rec;
}

}  // namespace dpot
