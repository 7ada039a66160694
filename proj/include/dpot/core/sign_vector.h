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

#ifndef DPOT_CORE_SIGN_VECTOR_H_
#define DPOT_CORE_SIGN_VECTOR_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dpot/core/random_stream.h"

namespace dpot {

// Coordinates are 0-based everywhere, including reports and CLI flags.

// Packed bit storage shared by sign vectors and masks. Bits beyond size() are
// always zero.
class PackedBits {
 public:
  PackedBits() = default;
  explicit PackedBits(std::size_t n);

  std::size_t size() const { return size_; }
  bool bit(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set_bit(std::size_t i, bool value);
  std::size_t count() const;
  std::span<const std::uint64_t> words() const { return words_; }

  void fill_random(RandomStream& stream);
  // Replaces the storage word-wise; bits past size() are dropped.
  void assign_words(std::span<const std::uint64_t> words);

  friend bool operator==(const PackedBits&, const PackedBits&) = default;

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// An element of {-1,+1}^n. Stored packed (bit 1 encodes -1); every accessor
// speaks +1/-1.
class SignVector : public PackedBits {
 public:
  SignVector() = default;
  // All +1.
  explicit SignVector(std::size_t n) : PackedBits(n) {}
  SignVector(std::initializer_list<int> signs);

  static SignVector from_signs(std::span<const int> signs);
  static SignVector uniform(std::size_t n, RandomStream& stream);

  int at(std::size_t i) const;
  void set(std::size_t i, int sign);
  std::vector<int> to_signs() const;
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

// r in {0,1}^n. Bit 1 means "selected".
class IndexMask : public PackedBits {
 public:
  IndexMask() = default;
  explicit IndexMask(std::size_t n) : PackedBits(n) {}
  IndexMask(std::initializer_list<int> bits);

  static IndexMask uniform(std::size_t n, RandomStream& stream);
  static IndexMask all(std::size_t n);
  static IndexMask from_indices(std::size_t n,
                                std::span<const std::size_t> indices);

  bool selected(std::size_t i) const { return bit(i); }
  void set(std::size_t i, bool selected) { set_bit(i, selected); }
  IndexMask complement() const;
  std::vector<std::size_t> selected_indices() const;

  // Sets the first 64 bits from a word; n must be at most 64.
  void assign_low_word(std::uint64_t bits);

  friend bool operator==(const IndexMask&, const IndexMask&) = default;
};

// Signs of a vector at the positions a mask selects, e.g. x_r. The values
// outside the mask are not stored and cannot be read.
class MaskedSigns {
 public:
  MaskedSigns() = default;
  MaskedSigns(const SignVector& source, IndexMask mask);

  std::size_t size() const { return mask_.size(); }
  const IndexMask& mask() const { return mask_; }
  bool revealed(std::size_t i) const { return mask_.selected(i); }
  // Throws IndexError for an unrevealed coordinate.
  int at(std::size_t i) const;
  // Order-preserving subsequence (the shorter vector).
  SignVector compact() const;
  // Sum over the revealed coordinates.
  std::int64_t sum() const;
  // <values, other> restricted to the revealed coordinates.
  std::int64_t inner_product(const SignVector& other) const;

  friend bool operator==(const MaskedSigns&, const MaskedSigns&) = default;

 private:
  IndexMask mask_;
  SignVector values_;  // canonical +1 outside the mask
};

std::int64_t inner_product(const SignVector& x, const SignVector& y);

// <x_r, y_r> without materializing the subsequences.
std::int64_t masked_inner_product(const SignVector& x, const SignVector& y,
                                  const IndexMask& r);

// x_r (selected) or x_{-r} (unselected), order preserving.
SignVector extract(const SignVector& x, const IndexMask& r, bool selected);

SignVector flip_at(const SignVector& x, std::size_t i);

// Number of coordinates where the two vectors differ.
std::size_t count_flipped(const SignVector& y, const SignVector& y_tilde);

}  // namespace dpot

#endif  // DPOT_CORE_SIGN_VECTOR_H_
