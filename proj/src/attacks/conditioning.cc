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

#include "dpot/attacks/conditioning.h"

#include <cmath>
#include <string>

#include "dpot/core/errors.h"

namespace dpot {
namespace {

void Finish(ConditioningGap& g) {
  std::size_t bad = 0;
  for (double gap : g.gaps) {
    if (gap >= g.alpha) ++bad;
  }
  g.bad_fraction =
      g.n == 0 ? 0.0 : static_cast<double>(bad) / static_cast<double>(g.n);
}

}  // namespace

double ConditioningGap::bound() const {
  return 2.0 / (static_cast<double>(n) * alpha * alpha);
}

ConditioningGap conditioning_gap_table(std::span<const std::uint8_t> table,
                                       std::size_t n, double alpha) {
  if (n == 0 || n > 20) {
    throw CapacityError("conditioning_gap: exact mode needs 1 <= n <= 20");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw DimensionError("conditioning_gap: truth table must have 2^n rows");
  }
  if (!(alpha > 0)) throw ParameterError("conditioning_gap: alpha must be > 0");
  // ones[i] = #{m : F(m) = 1, m_i = 1}; total = #{m : F(m) = 1}.
  std::vector<std::uint64_t> ones(n, 0);
  std::uint64_t total = 0;
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (!table[m]) continue;
    ++total;
    for (std::size_t i = 0; i < n; ++i) ones[i] += (m >> i) & 1u;
  }
  const double half = static_cast<double>(table.size() / 2);
  ConditioningGap g;
  g.n = n;
  g.alpha = alpha;
  g.gaps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mu1 = static_cast<double>(ones[i]) / half;
    const double mu0 = static_cast<double>(total - ones[i]) / half;
    g.gaps[i] = std::abs(mu0 - mu1);
  }
  Finish(g);
  return g;
}

ConditioningGap conditioning_gap(const MaskFunction& f, std::size_t n,
                                 double alpha, GapMode mode,
                                 RandomStream& stream, std::uint64_t samples) {
  if (!(alpha > 0)) throw ParameterError("conditioning_gap: alpha must be > 0");
  if (mode == GapMode::kExact) {
    if (n == 0 || n > 20) {
      throw CapacityError("conditioning_gap: exact mode needs n <= 20, got " +
                          std::to_string(n));
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    IndexMask mask(n);
    for (std::size_t m = 0; m < table.size(); ++m) {
      mask.assign_low_word(m);
      table[m] = f(mask) ? 1 : 0;
    }
    return conditioning_gap_table(table, n, alpha);
  }
  if (samples == 0) throw ParameterError("conditioning_gap: zero samples");
  ConditioningGap g;
  g.n = n;
  g.alpha = alpha;
  g.gaps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t hits[2] = {0, 0};
    for (int side = 0; side < 2; ++side) {
      for (std::uint64_t t = 0; t < samples; ++t) {
        IndexMask r = IndexMask::uniform(n, stream);
        r.set(i, side == 1);
        hits[side] += f(r) ? 1 : 0;
      }
    }
    g.gaps[i] = std::abs(static_cast<double>(hits[0]) -
                         static_cast<double>(hits[1])) /
                static_cast<double>(samples);
  }
  Finish(g);
  return g;
}

}  // namespace dpot
