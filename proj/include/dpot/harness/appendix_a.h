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

#ifndef DPOT_HARNESS_APPENDIX_A_H_
#define DPOT_HARNESS_APPENDIX_A_H_

#include <cstdint>
#include <vector>

#include "dpot/channels/channel.h"
#include "dpot/core/stats.h"
#include "dpot/harness/estimates.h"
#include "dpot/harness/report.h"

namespace dpot {

// Joint view of one run of the key-agreement protocol (or of a simulation of
// it): A sees (x, z, e_A, r, y_{-r}) and B sees (y, z, e_B, r, x_r).
struct KaJointView {
  SignVector x;
  SignVector y;
  IndexMask r;
  std::int64_t z = 0;
  std::int64_t e_a = 0;
  std::int64_t e_b = 0;
};

// The key-agreement protocol run over a split-noise channel.
KaJointView run_key_agreement(const Channel& split_noise, RandomStream& stream);

// Plain-communication simulation. A sends <x_{-r}, y_{-r}> + e_A (A holds
// y_{-r} after the exchange) and B sends <x_r, y_r> + e_B; z is their sum.
// With `broken`, B's reported noise is redrawn after z is fixed.
KaJointView simulate_key_agreement(std::size_t n, double epsilon,
                                   RandomStream& stream, bool broken = false);

constexpr int kFeatureClip = 10;

// 16-bit hash of (<x_r,y_r>, <x_{-r},y_{-r}>, clip(z - e_A - e_B - <x,y>)).
std::uint16_t view_feature(const KaJointView& view);

// Total variation between two histograms over the same bins, each
// normalized by its own total.
double histogram_tv(std::span<const std::uint64_t> a,
                    std::span<const std::uint64_t> b);

struct AppendixAReport {
  std::size_t n = 0;
  double epsilon = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double tv_real_sim = 0;
  double tv_null = 0;  // two independent runs of the real protocol
  double tv_real_broken = 0;
  ChiSquareResult z_marginal;
  ChiSquareResult e_a_marginal;
  ChiSquareResult e_b_marginal;
  double tv_limit = 0.02;
  double broken_floor = 0.1;

  bool equivalent() const { return tv_real_sim <= tv_limit; }
  bool broken_detected() const { return tv_real_broken > broken_floor; }
  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

// Requires 1 <= n <= 16 (ParameterError otherwise).
AppendixAReport view_equivalence_appendix_a(std::size_t n, double epsilon,
                                            const RunOptions& run);

}  // namespace dpot

#endif  // DPOT_HARNESS_APPENDIX_A_H_
