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

#include "dpot/channels/exact_dp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <tuple>

#include "dpot/channels/discrete_laplace.h"
#include "dpot/core/errors.h"

namespace dpot {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// <x, y> for sign vectors packed into the low n bits (bit 1 = -1).
int PackedInner(std::uint32_t x, std::uint32_t y, int n) {
  return n - 2 * std::popcount(x ^ y);
}

// log P[X = k] for the discrete Laplace law; never underflows.
struct LogMass {
  explicit LogMass(const DiscreteLaplace& d)
      : log_norm(std::log((1 - d.decay()) / (1 + d.decay()))),
        log_decay(-1.0 / d.scale()) {}
  double operator()(std::int64_t k) const {
    return log_norm + static_cast<double>(k < 0 ? -k : k) * log_decay;
  }
  double log_norm;
  double log_decay;
};

// Inner-product pairs (a, a') reachable by flipping one coordinate of the
// non-observer's input, optionally tagged with that party's leaked bit.
struct LawPair {
  int a, leak, a_prime, leak_prime;
  auto operator<=>(const LawPair&) const = default;
};

std::set<LawPair> EnumerateLawPairs(int n, std::optional<int> leak_bit) {
  std::set<LawPair> pairs;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t own = 0; own < limit; ++own) {
    for (std::uint32_t other = 0; other < limit; ++other) {
      const int a = PackedInner(own, other, n);
      for (int i = 0; i < n; ++i) {
        const std::uint32_t flipped = other ^ (1u << i);
        LawPair p{a, 0, PackedInner(own, flipped, n), 0};
        if (leak_bit) {
          p.leak = (other >> *leak_bit) & 1u;
          p.leak_prime = (flipped >> *leak_bit) & 1u;
        }
        pairs.insert(p);
      }
    }
  }
  return pairs;
}

ExactDpResult LaplaceView(const ChannelSpec& spec, bool split,
                          std::optional<int> leak_bit, double tail) {
  const DiscreteLaplace noise = DiscreteLaplace::for_epsilon(spec.epsilon);
  const LogMass log_mass(noise);
  const std::int64_t radius = noise.truncation_radius(tail);
  ExactDpResult result;
  result.truncated_mass = noise.tail_above(radius);
  for (const LawPair& p : EnumerateLawPairs(static_cast<int>(spec.n),
                                            leak_bit)) {
    ++result.law_pairs;
    if (leak_bit && p.leak != p.leak_prime) {
      // The view under w carries a bit value that has zero mass under w'.
      result.max_log_ratio = kInf;
      continue;
    }
    // View value z, and for split noise the observer's own draw e_own.
    // The unseen noise is z - e_own - a under w and z - e_own - a' under w'.
    const std::int64_t own_radius = split ? radius : 0;
    for (std::int64_t own = -own_radius; own <= own_radius; ++own) {
      for (std::int64_t e = -radius; e <= radius; ++e) {
        const std::int64_t e_prime = e + p.a - p.a_prime;
        const double lr = (log_mass(own) + log_mass(e)) -
                          (log_mass(own) + log_mass(e_prime));
        result.max_log_ratio = std::max(result.max_log_ratio, lr);
        ++result.support_points;
      }
    }
  }
  return result;
}

ExactDpResult RandomizedResponseView(const ChannelSpec& spec) {
  const int n = static_cast<int>(spec.n);
  const double p = std::isinf(spec.epsilon)
                       ? 1.0
                       : std::exp(spec.epsilon) / (1 + std::exp(spec.epsilon));
  const double log_keep = std::log(p);
  const double log_flip = p < 1 ? std::log1p(-p) : -kInf;
  auto log_prob = [&](std::uint32_t x, std::uint32_t x_noisy) {
    const int flips = std::popcount(x ^ x_noisy);
    double lp = 0;
    if (n - flips > 0) lp += (n - flips) * log_keep;
    if (flips > 0) lp += flips * log_flip;
    return lp;
  };
  ExactDpResult result;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t x = 0; x < limit; ++x) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t x_prime = x ^ (1u << i);
      ++result.law_pairs;
      for (std::uint32_t view = 0; view < limit; ++view) {
        const double a = log_prob(x, view);
        const double b = log_prob(x_prime, view);
        ++result.support_points;
        if (a == -kInf) continue;
        result.max_log_ratio =
            std::max(result.max_log_ratio, b == -kInf ? kInf : a - b);
      }
    }
  }
  return result;
}

}  // namespace

ExactDpResult exact_view_privacy(const ChannelSpec& spec, Party observer,
                                 double tail) {
  spec.validate();
  if (spec.n > 12) {
    throw CapacityError("exact_view_privacy: n = " + std::to_string(spec.n) +
                        " exceeds the enumeration limit of 12");
  }
  switch (spec.kind) {
    case ChannelKind::kRandomizedResponse:
      if (observer == Party::kAlice) {
        ExactDpResult empty;
        empty.law_pairs = 1;
        return empty;  // A's view is empty
      }
      return RandomizedResponseView(spec);
    case ChannelKind::kTrustedLaplace:
      return LaplaceView(spec, false, std::nullopt, tail);
    case ChannelKind::kSplitNoise:
      return LaplaceView(spec, true, std::nullopt, tail);
    case ChannelKind::kLeaky:
      if (observer == Party::kAlice) {
        return LaplaceView(spec, false, static_cast<int>(*spec.leak_index),
                           tail);
      }
      return LaplaceView(spec, false, std::nullopt, tail);
    case ChannelKind::kWrappedProtocol:
      break;
  }
  throw ParameterError("exact_view_privacy: no enumeration for " +
                       std::string(to_string(spec.kind)));
}

}  // namespace dpot
