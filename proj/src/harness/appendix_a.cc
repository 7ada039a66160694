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

#include "dpot/harness/appendix_a.h"

#include <algorithm>
#include <cmath>

#include "dpot/channels/discrete_laplace.h"
#include "dpot/core/errors.h"
#include "dpot/harness/trial_runner.h"

namespace dpot {
namespace {

constexpr std::size_t kFeatureBins = 1 << 16;
constexpr int kNoiseClip = 10;
constexpr int kEstimateClip = 20;

int Clip(std::int64_t v, int bound) {
  return static_cast<int>(std::clamp<std::int64_t>(v, -bound, bound));
}

struct Histograms {
  std::vector<std::uint64_t> real, real_again, sim, broken;
  std::vector<std::uint64_t> z_real, z_sim, ea_real, ea_sim, eb_real, eb_sim;

  Histograms()
      : real(kFeatureBins),
        real_again(kFeatureBins),
        sim(kFeatureBins),
        broken(kFeatureBins),
        z_real(2 * kEstimateClip + 1),
        z_sim(2 * kEstimateClip + 1),
        ea_real(2 * kNoiseClip + 1),
        ea_sim(2 * kNoiseClip + 1),
        eb_real(2 * kNoiseClip + 1),
        eb_sim(2 * kNoiseClip + 1) {}

  void merge(const Histograms& o) {
    auto add = [](std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    };
    add(real, o.real);
    add(real_again, o.real_again);
    add(sim, o.sim);
    add(broken, o.broken);
    add(z_real, o.z_real);
    add(z_sim, o.z_sim);
    add(ea_real, o.ea_real);
    add(ea_sim, o.ea_sim);
    add(eb_real, o.eb_real);
    add(eb_sim, o.eb_sim);
  }
};

Json ChiJson(const ChiSquareResult& r) {
  return Json{{"statistic", r.statistic},
              {"degrees_of_freedom", r.degrees_of_freedom},
              {"p_value", r.p_value}};
}

}  // namespace

KaJointView run_key_agreement(const Channel& split_noise,
                              RandomStream& stream) {
  const RandomStream base(stream());
  RandomStream channel_stream = base.derive("channel");
  const ChannelSample s = split_noise.sample(channel_stream);
  const auto z = s.u.get(view_keys::kEstimate);
  const auto e_a = s.u.get(view_keys::kOwnNoise);
  const auto e_b = s.v.get(view_keys::kOwnNoise);
  if (!z || !e_a || !e_b) {
    throw ChannelFault("key agreement needs a channel revealing own noise");
  }
  RandomStream alice = base.derive("alice");
  return {s.x, s.y, IndexMask::uniform(s.x.size(), alice), *z, *e_a, *e_b};
}

KaJointView simulate_key_agreement(std::size_t n, double epsilon,
                                   RandomStream& stream, bool broken) {
  const DiscreteLaplace noise = DiscreteLaplace::for_epsilon(epsilon);
  const RandomStream base(stream());
  RandomStream alice = base.derive("alice");
  RandomStream bob = base.derive("bob");
  KaJointView v;
  v.x = SignVector::uniform(n, alice);
  v.y = SignVector::uniform(n, bob);
  v.r = IndexMask::uniform(n, alice);
  v.e_a = noise.sample(alice);
  const std::int64_t z_a =
      masked_inner_product(v.x, v.y, v.r.complement()) + v.e_a;
  v.e_b = noise.sample(bob);
  const std::int64_t z_b = masked_inner_product(v.x, v.y, v.r) + v.e_b;
  v.z = z_a + z_b;
  if (broken) v.e_b = noise.sample(bob);
  return v;
}

std::uint16_t view_feature(const KaJointView& v) {
  const std::int64_t ip_r = masked_inner_product(v.x, v.y, v.r);
  const std::int64_t ip_rest =
      masked_inner_product(v.x, v.y, v.r.complement());
  const int residual = Clip(v.z - v.e_a - v.e_b - ip_r - ip_rest,
                            kFeatureClip);
  const std::uint64_t key = (static_cast<std::uint64_t>(ip_r + 128) << 16) |
                            (static_cast<std::uint64_t>(ip_rest + 128) << 8) |
                            static_cast<std::uint64_t>(residual + 128);
  return static_cast<std::uint16_t>(mix64(key) & 0xFFFF);
}

double histogram_tv(std::span<const std::uint64_t> a,
                    std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) {
    throw DimensionError("histograms have different bin counts");
  }
  double ta = 0, tb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ta += static_cast<double>(a[i]);
    tb += static_cast<double>(b[i]);
  }
  if (ta == 0 || tb == 0) throw ParameterError("empty histogram");
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::abs(static_cast<double>(a[i]) / ta -
                    static_cast<double>(b[i]) / tb);
  }
  return sum / 2;
}

Json AppendixAReport::to_json() const {
  return Json{{"n", n},
              {"epsilon", epsilon},
              {"trials", trials},
              {"seed", seed},
              {"tv_real_sim", tv_real_sim},
              {"tv_null", tv_null},
              {"tv_real_broken", tv_real_broken},
              {"tv_limit", tv_limit},
              {"broken_floor", broken_floor},
              {"equivalent", equivalent()},
              {"broken_detected", broken_detected()},
              {"chi_square",
               {{"z", ChiJson(z_marginal)},
                {"e_a", ChiJson(e_a_marginal)},
                {"e_b", ChiJson(e_b_marginal)}}}};
}

std::vector<CsvRow> AppendixAReport::csv_rows() const {
  return {
      {"appendix_a.tv_real_sim", tv_real_sim, tv_real_sim, tv_real_sim,
       trials, seed},
      {"appendix_a.tv_null", tv_null, tv_null, tv_null, trials, seed},
      {"appendix_a.tv_real_broken", tv_real_broken, tv_real_broken,
       tv_real_broken, trials, seed},
      {"appendix_a.chi2_p.z", z_marginal.p_value, z_marginal.p_value,
       z_marginal.p_value, trials, seed},
      {"appendix_a.chi2_p.e_a", e_a_marginal.p_value, e_a_marginal.p_value,
       e_a_marginal.p_value, trials, seed},
      {"appendix_a.chi2_p.e_b", e_b_marginal.p_value, e_b_marginal.p_value,
       e_b_marginal.p_value, trials, seed},
  };
}

AppendixAReport view_equivalence_appendix_a(std::size_t n, double epsilon,
                                            const RunOptions& run) {
  if (n == 0 || n > 16) {
    throw ParameterError("appendix-a experiment needs 1 <= n <= 16");
  }
  if (run.trials == 0) throw ConfigError("trials must be at least 1");
  ChannelSpec spec;
  spec.kind = ChannelKind::kSplitNoise;
  spec.n = n;
  spec.epsilon = epsilon;
  const auto channel = make_channel(spec);

  const RandomStream root(run.seed);
  const Histograms h = run_trials(
      run.trials, root, "appendix-a", run.threads, Histograms{},
      [&](std::uint64_t, RandomStream& stream, Histograms& acc) {
        RandomStream real_stream = stream.derive("real");
        RandomStream again_stream = stream.derive("real-again");
        RandomStream sim_stream = stream.derive("sim");
        RandomStream broken_stream = stream.derive("broken");
        const KaJointView real = run_key_agreement(*channel, real_stream);
        const KaJointView again = run_key_agreement(*channel, again_stream);
        const KaJointView sim =
            simulate_key_agreement(n, epsilon, sim_stream, false);
        const KaJointView broken =
            simulate_key_agreement(n, epsilon, broken_stream, true);
        ++acc.real[view_feature(real)];
        ++acc.real_again[view_feature(again)];
        ++acc.sim[view_feature(sim)];
        ++acc.broken[view_feature(broken)];
        ++acc.z_real[Clip(real.z, kEstimateClip) + kEstimateClip];
        ++acc.z_sim[Clip(sim.z, kEstimateClip) + kEstimateClip];
        ++acc.ea_real[Clip(real.e_a, kNoiseClip) + kNoiseClip];
        ++acc.ea_sim[Clip(sim.e_a, kNoiseClip) + kNoiseClip];
        ++acc.eb_real[Clip(real.e_b, kNoiseClip) + kNoiseClip];
        ++acc.eb_sim[Clip(sim.e_b, kNoiseClip) + kNoiseClip];
      });

  AppendixAReport report;
  report.n = n;
  report.epsilon = epsilon;
  report.trials = run.trials;
  report.seed = run.seed;
  report.tv_real_sim = histogram_tv(h.real, h.sim);
  report.tv_null = histogram_tv(h.real, h.real_again);
  report.tv_real_broken = histogram_tv(h.real, h.broken);
  report.z_marginal = chi_square_homogeneity(h.z_real, h.z_sim);
  report.e_a_marginal = chi_square_homogeneity(h.ea_real, h.ea_sim);
  report.e_b_marginal = chi_square_homogeneity(h.eb_real, h.eb_sim);
  return report;
}

}  // namespace dpot
