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

#ifndef DPOT_CORE_RANDOM_STREAM_H_
#define DPOT_CORE_RANDOM_STREAM_H_

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace dpot {

// A seeded, single-owner source of randomness.
//
// Every stream is identified by a 64-bit seed. Two streams built from the
// same seed produce the same draw sequence. Independent substreams are derived
// from (seed, label[, index]) by hashing, so each party and each trial of an
// experiment owns its own stream and results do not depend on scheduling.
//
// Satisfies UniformRandomBitGenerator so it can drive <random> distributions.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  std::uint64_t seed() const { return seed_; }
  // Number of 64-bit words drawn so far.
  std::uint64_t position() const { return position_; }

  RandomStream derive(std::string_view label) const;
  RandomStream derive(std::string_view label, std::uint64_t index) const;

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform_unit();
  bool bernoulli(double p);
  bool fair_coin();
  // Uniform in {-1, +1}.
  int random_sign();

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to spread seeds and hash labels.
std::uint64_t mix64(std::uint64_t value);

}  // namespace dpot

#endif  // DPOT_CORE_RANDOM_STREAM_H_
