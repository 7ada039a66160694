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

#include "dpot/core/random_stream.h"

#include "dpot/core/errors.h"

namespace dpot {
namespace {

std::uint64_t HashLabel(std::string_view label) {
  // FNV-1a, then mixed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

}  // namespace

std::uint64_t mix64(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

RandomStream::RandomStream(std::uint64_t seed)
    : seed_(seed), engine_(mix64(seed)) {}

RandomStream::result_type RandomStream::operator()() {
  ++position_;
  return engine_();
}

RandomStream RandomStream::derive(std::string_view label) const {
  return RandomStream(mix64(seed_ ^ HashLabel(label)));
}

RandomStream RandomStream::derive(std::string_view label,
                                  std::uint64_t index) const {
  return RandomStream(mix64(mix64(seed_ ^ HashLabel(label)) + index));
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_below: bound must be positive");
  // Rejection on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = (*this)();
  } while (v > limit);
  return v % bound;
}

double RandomStream::uniform_unit() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

bool RandomStream::bernoulli(double p) { return uniform_unit() < p; }

bool RandomStream::fair_coin() { return ((*this)() >> 63) != 0; }

int RandomStream::random_sign() { return fair_coin() ? -1 : 1; }

}  // namespace dpot
