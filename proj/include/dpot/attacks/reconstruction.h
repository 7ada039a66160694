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

#ifndef DPOT_ATTACKS_RECONSTRUCTION_H_
#define DPOT_ATTACKS_RECONSTRUCTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "dpot/attacks/adversaries.h"
#include "dpot/channels/channel.h"
#include "dpot/core/random_stream.h"
#include "dpot/core/sign_vector.h"

namespace dpot {

struct GenRandDraw {
  std::uint64_t psi = 0;             // estimator coins (a 64-bit seed)
  IndexMask r;
  std::vector<std::size_t> draws;    // i_1..i_k in draw order
  std::vector<std::size_t> h;        // H, in draw order; empty or size m
  std::vector<std::size_t> h_bar;    // zero-set of r minus H, increasing
  SignVector y_tilde_h_bar;          // one sign per element of h_bar

  bool h_empty() const { return h.empty(); }
};

// m = ceil(k / 4).
std::size_t reconstruction_block(std::size_t k);

GenRandDraw gen_rand(std::size_t n, std::size_t k, RandomStream& stream);

// t = (psi, t') with t' = (y, v, r, i_1..i_k, H, y-tilde_{-H}, x_{-H}).
struct GenViewTranscript {
  std::uint64_t psi = 0;
  SignVector y;
  ViewPayload v;
  IndexMask r;
  std::vector<std::size_t> draws;
  std::vector<std::size_t> h;
  std::vector<std::size_t> h_bar;
  MaskedSigns y_tilde;  // everything but H
  MaskedSigns x;        // everything but H
};

struct GenViewDraw {
  SignVector z;  // x_H, in the order of H
  GenViewTranscript t;
};

// Retries draws with H empty up to `max_retries` times, then throws
// ChannelFault.
GenViewDraw gen_view(const Channel& channel, std::size_t k,
                     RandomStream& stream, int max_retries = 100);

// B's AWEC view encoded by (s, t): y-tilde_H = s, the rest from t.
BobView bob_view_from(const SignVector& s, const GenViewTranscript& t);

using GenViewOracle = std::function<GenViewDraw(RandomStream&)>;
using ReconstructionTarget =
    std::function<std::int64_t(const SignVector& s,
                               const GenViewTranscript& t)>;

// f(s, t) = B_psi(s, t') - <x_{H-bar}, y-tilde_{H-bar}>, so that
// |f(s,t) - <z,s>| equals B's error in estimating o_A.
ReconstructionTarget make_reconstruction_target(const Estimator& b);

// Interface of the reconstruction distinguisher Dist^{D, f}(j, z, t).
class DistOracle {
 public:
  virtual ~DistOracle() = default;
  virtual int evaluate(const GenViewOracle& views,
                       const ReconstructionTarget& f, std::size_t j,
                       const SignVector& z, const GenViewTranscript& t,
                       RandomStream& stream) const = 0;
};

// Always answers `bit`.
class ConstantDist : public DistOracle {
 public:
  explicit ConstantDist(int bit) : bit_(bit) {}
  int evaluate(const GenViewOracle&, const ReconstructionTarget&, std::size_t,
               const SignVector&, const GenViewTranscript&,
               RandomStream&) const override {
    return bit_;
  }

 private:
  int bit_;
};

struct ReferenceDistParams {
  std::int64_t radius = 1;              // a
  std::uint64_t samples = 512;          // N_d
  std::uint64_t calibration_draws = 16; // fresh GenView draws
};

// Heuristic stand-in for Dist: accepts when the fraction of random s with
// |f(s,t) - <z,s>| <= a exceeds a threshold. The threshold is the midpoint
// of the mean acceptance fractions on calibration draws with the true z and
// with z flipped at one random coordinate.
class ReferenceDist : public DistOracle {
 public:
  explicit ReferenceDist(ReferenceDistParams params) : params_(params) {}

  int evaluate(const GenViewOracle& views, const ReconstructionTarget& f,
               std::size_t j, const SignVector& z, const GenViewTranscript& t,
               RandomStream& stream) const override;

  // Fraction of s in `samples` draws with |f(s,t) - <z,s>| <= a.
  double acceptance(const ReconstructionTarget& f, const SignVector& z,
                    const GenViewTranscript& t, RandomStream& stream) const;
  double calibrate(const GenViewOracle& views, const ReconstructionTarget& f,
                   RandomStream& stream) const;

  const ReferenceDistParams& params() const { return params_; }

 private:
  ReferenceDistParams params_;
};

// Algorithm B-tilde: guesses x_i from (i, x_{-i}, y, v). x's coordinate i is
// never read.
int attack_b_tilde(const Estimator& b, const DistOracle& dist,
                   const Channel& channel, std::size_t k, std::size_t i,
                   const SignVector& x, const SignVector& y,
                   const ViewPayload& v, RandomStream& stream);

}  // namespace dpot

#endif  // DPOT_ATTACKS_RECONSTRUCTION_H_
