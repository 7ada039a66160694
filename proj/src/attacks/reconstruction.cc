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

#include "dpot/attacks/reconstruction.h"

#include <algorithm>
#include <string>
#include <utility>

#include "dpot/core/errors.h"

namespace dpot {
namespace {

IndexMask MaskOf(std::size_t n, const std::vector<std::size_t>& indices) {
  return IndexMask::from_indices(n, indices);
}

// y with y-tilde_{H-bar} written in; coordinates of H are left as in y and
// are hidden by the transcript mask.
SignVector PerturbedY(const SignVector& y, const GenRandDraw& g) {
  SignVector y_tilde = y;
  for (std::size_t t = 0; t < g.h_bar.size(); ++t) {
    y_tilde.set(g.h_bar[t], g.y_tilde_h_bar.at(t));
  }
  return y_tilde;
}

}  // namespace

std::size_t reconstruction_block(std::size_t k) { return (k + 3) / 4; }

GenRandDraw gen_rand(std::size_t n, std::size_t k, RandomStream& stream) {
  if (n == 0 || k == 0) throw ParameterError("gen_rand: n and k must be >= 1");
  GenRandDraw g;
  g.psi = stream();
  g.r = IndexMask::uniform(n, stream);
  g.draws.reserve(k);
  for (std::size_t t = 0; t < k; ++t) g.draws.push_back(stream.uniform_below(n));

  const std::size_t m = reconstruction_block(k);
  std::vector<char> in_h(n, 0);
  for (std::size_t idx : g.draws) {
    if (g.h.size() == m) break;
    if (!g.r.selected(idx) && !in_h[idx]) {
      in_h[idx] = 1;
      g.h.push_back(idx);
    }
  }
  if (g.h.size() < m) {
    g.h.clear();
    std::fill(in_h.begin(), in_h.end(), 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.r.selected(i) && !in_h[i]) g.h_bar.push_back(i);
  }
  g.y_tilde_h_bar = SignVector::uniform(g.h_bar.size(), stream);
  return g;
}

GenViewDraw gen_view(const Channel& channel, std::size_t k,
                     RandomStream& stream, int max_retries) {
  const std::size_t n = channel.n();
  const RandomStream base(stream());
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    RandomStream channel_stream = base.derive("channel", attempt);
    RandomStream rand_stream = base.derive("gen-rand", attempt);
    ChannelSample sample = channel.sample(channel_stream);
    GenRandDraw g = gen_rand(n, k, rand_stream);
    if (g.h_empty()) continue;

    GenViewDraw d;
    d.z = SignVector(g.h.size());
    for (std::size_t t = 0; t < g.h.size(); ++t) {
      d.z.set(t, sample.x.at(g.h[t]));
    }
    const IndexMask outside_h = MaskOf(n, g.h).complement();
    d.t.psi = g.psi;
    d.t.y_tilde = MaskedSigns(PerturbedY(sample.y, g), outside_h);
    d.t.x = MaskedSigns(sample.x, outside_h);
    d.t.y = std::move(sample.y);
    d.t.v = std::move(sample.v);
    d.t.r = std::move(g.r);
    d.t.draws = std::move(g.draws);
    d.t.h = std::move(g.h);
    d.t.h_bar = std::move(g.h_bar);
    return d;
  }
  throw ChannelFault("gen_view: H stayed empty after " +
                     std::to_string(max_retries) + " retries");
}

BobView bob_view_from(const SignVector& s, const GenViewTranscript& t) {
  if (s.size() != t.h.size()) {
    throw DimensionError("bob_view_from: s must have one sign per index of H");
  }
  const std::size_t n = t.y.size();
  SignVector y_tilde(n);
  SignVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.y_tilde.revealed(i)) y_tilde.set(i, t.y_tilde.at(i));
    if (t.x.revealed(i)) x.set(i, t.x.at(i));
  }
  for (std::size_t j = 0; j < t.h.size(); ++j) y_tilde.set(t.h[j], s.at(j));
  BobView view;
  view.y = t.y;
  view.v = t.v;
  view.x_r = MaskedSigns(x, t.r);  // r selects only coordinates outside H
  view.resampled = t.draws;
  view.y_tilde = std::move(y_tilde);
  return view;
}

ReconstructionTarget make_reconstruction_target(const Estimator& b) {
  return [&b](const SignVector& s, const GenViewTranscript& t) {
    RandomStream coins(t.psi);
    const std::int64_t estimate = b.evaluate(bob_view_from(s, t), coins);
    std::int64_t offset = 0;
    for (std::size_t i : t.h_bar) offset += t.x.at(i) * t.y_tilde.at(i);
    return estimate - offset;
  };
}

double ReferenceDist::acceptance(const ReconstructionTarget& f,
                                 const SignVector& z,
                                 const GenViewTranscript& t,
                                 RandomStream& stream) const {
  if (params_.samples == 0) throw ParameterError("reference_dist: N_d = 0");
  std::uint64_t hits = 0;
  for (std::uint64_t c = 0; c < params_.samples; ++c) {
    const SignVector s = SignVector::uniform(z.size(), stream);
    std::int64_t residual = f(s, t) - inner_product(z, s);
    if (residual < 0) residual = -residual;
    if (residual <= params_.radius) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(params_.samples);
}

double ReferenceDist::calibrate(const GenViewOracle& views,
                                const ReconstructionTarget& f,
                                RandomStream& stream) const {
  if (params_.calibration_draws == 0) {
    throw ParameterError("reference_dist: zero calibration draws");
  }
  double matched = 0, mismatched = 0;
  for (std::uint64_t c = 0; c < params_.calibration_draws; ++c) {
    RandomStream draw_stream = stream.derive("calibration", c);
    GenViewDraw d = views(draw_stream);
    matched += acceptance(f, d.z, d.t, draw_stream);
    const std::size_t j = draw_stream.uniform_below(d.z.size());
    mismatched += acceptance(f, flip_at(d.z, j), d.t, draw_stream);
  }
  const double draws = static_cast<double>(params_.calibration_draws);
  return (matched / draws + mismatched / draws) / 2;
}

int ReferenceDist::evaluate(const GenViewOracle& views,
                            const ReconstructionTarget& f, std::size_t,
                            const SignVector& z, const GenViewTranscript& t,
                            RandomStream& stream) const {
  RandomStream calibration = stream.derive("calibrate");
  const double threshold = calibrate(views, f, calibration);
  return acceptance(f, z, t, stream) > threshold ? 1 : 0;
}

int attack_b_tilde(const Estimator& b, const DistOracle& dist,
                   const Channel& channel, std::size_t k, std::size_t i,
                   const SignVector& x, const SignVector& y,
                   const ViewPayload& v, RandomStream& stream) {
  const std::size_t n = channel.n();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("attack_b_tilde: input lengths differ from channel");
  }
  if (i >= n) throw IndexError("attack_b_tilde: index out of range");

  GenRandDraw g = gen_rand(n, k, stream);
  const auto pos = std::find(g.h.begin(), g.h.end(), i);
  if (pos == g.h.end()) return kAbstain;

  const IndexMask outside_h = MaskOf(n, g.h).complement();
  GenViewTranscript t;
  t.psi = g.psi;
  t.y = y;
  t.v = v;
  t.y_tilde = MaskedSigns(PerturbedY(y, g), outside_h);
  t.x = MaskedSigns(x, outside_h);  // i is in H, so x_i is dropped here
  t.r = g.r;
  t.draws = g.draws;
  t.h = g.h;
  t.h_bar = g.h_bar;

  const std::size_t j = static_cast<std::size_t>(pos - g.h.begin());
  SignVector z(g.h.size());
  for (std::size_t q = 0; q < g.h.size(); ++q) {
    if (q != j) z.set(q, x.at(g.h[q]));
  }
  const int guess = stream.random_sign();
  z.set(j, guess);

  const GenViewOracle views = [&channel, k](RandomStream& s) {
    return gen_view(channel, k, s);
  };
  const ReconstructionTarget f = make_reconstruction_target(b);
  return dist.evaluate(views, f, j, z, t, stream) == 1 ? guess : kAbstain;
}

}  // namespace dpot
