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

#include "dpot/core/sign_vector.h"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "dpot/core/errors.h"

namespace dpot {
namespace {

std::size_t WordCount(std::size_t n) { return (n + 63) / 64; }

void CheckSameLength(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void CheckIndex(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    throw IndexError(std::string(what) + ": index " + std::to_string(i) +
                     " out of range for length " + std::to_string(n));
  }
}

int CheckedSign(int sign) {
  if (sign != 1 && sign != -1) {
    throw ParameterError("sign entries must be -1 or +1, got " +
                         std::to_string(sign));
  }
  return sign;
}

}  // namespace

// PackedBits

PackedBits::PackedBits(std::size_t n) : size_(n), words_(WordCount(n), 0) {}

void PackedBits::set_bit(std::size_t i, bool value) {
  CheckIndex(i, size_, "set_bit");
  const std::uint64_t m = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= m;
  } else {
    words_[i >> 6] &= ~m;
  }
}

std::size_t PackedBits::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

void PackedBits::fill_random(RandomStream& stream) {
  for (auto& w : words_) w = stream();
  clear_tail();
}

void PackedBits::assign_words(std::span<const std::uint64_t> words) {
  CheckSameLength(words.size(), words_.size(), "assign_words");
  std::copy(words.begin(), words.end(), words_.begin());
  clear_tail();
}

void PackedBits::clear_tail() {
  const std::size_t tail = size_ & 63;
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

// SignVector

SignVector::SignVector(std::initializer_list<int> signs)
    : PackedBits(signs.size()) {
  std::size_t i = 0;
  for (int s : signs) set(i++, s);
}

SignVector SignVector::from_signs(std::span<const int> signs) {
  SignVector v(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) v.set(i, signs[i]);
  return v;
}

SignVector SignVector::uniform(std::size_t n, RandomStream& stream) {
  SignVector v(n);
  v.fill_random(stream);
  return v;
}

int SignVector::at(std::size_t i) const {
  CheckIndex(i, size(), "SignVector::at");
  return bit(i) ? -1 : 1;
}

void SignVector::set(std::size_t i, int sign) {
  set_bit(i, CheckedSign(sign) == -1);
}

std::vector<int> SignVector::to_signs() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = bit(i) ? -1 : 1;
  return out;
}

std::string SignVector::to_string() const {
  std::string s;
  s.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) s.push_back(bit(i) ? '-' : '+');
  return s;
}

// IndexMask

IndexMask::IndexMask(std::initializer_list<int> bits)
    : PackedBits(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw ParameterError("mask entries must be 0 or 1");
    set(i++, b == 1);
  }
}

IndexMask IndexMask::uniform(std::size_t n, RandomStream& stream) {
  IndexMask m(n);
  m.fill_random(stream);
  return m;
}

IndexMask IndexMask::all(std::size_t n) {
  IndexMask m(n);
  std::vector<std::uint64_t> ones(WordCount(n), ~std::uint64_t{0});
  m.assign_words(ones);
  return m;
}

IndexMask IndexMask::from_indices(std::size_t n,
                                  std::span<const std::size_t> indices) {
  IndexMask m(n);
  for (std::size_t i : indices) m.set(i, true);
  return m;
}

IndexMask IndexMask::complement() const {
  IndexMask out(size());
  std::vector<std::uint64_t> w(words().begin(), words().end());
  for (auto& x : w) x = ~x;
  out.assign_words(w);
  return out;
}

std::vector<std::size_t> IndexMask::selected_indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  const auto w = words();
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::uint64_t bits = w[k];
    while (bits != 0) {
      out.push_back(k * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

void IndexMask::assign_low_word(std::uint64_t bits) {
  if (size() > 64) throw CapacityError("assign_low_word: mask longer than 64");
  if (size() == 0) return;
  const std::uint64_t w[1] = {bits};
  assign_words(w);
}

// MaskedSigns

MaskedSigns::MaskedSigns(const SignVector& source, IndexMask mask)
    : mask_(std::move(mask)), values_(source.size()) {
  CheckSameLength(source.size(), mask_.size(), "MaskedSigns");
  std::vector<std::uint64_t> w(source.words().begin(), source.words().end());
  const auto m = mask_.words();
  for (std::size_t k = 0; k < w.size(); ++k) w[k] &= m[k];
  values_.assign_words(w);
}

int MaskedSigns::at(std::size_t i) const {
  CheckIndex(i, size(), "MaskedSigns::at");
  if (!mask_.selected(i)) {
    throw IndexError("MaskedSigns::at: coordinate " + std::to_string(i) +
                     " is not revealed");
  }
  return values_.at(i);
}

SignVector MaskedSigns::compact() const {
  return extract(values_, mask_, true);
}

std::int64_t MaskedSigns::sum() const {
  // Revealed count minus twice the revealed -1 entries.
  return static_cast<std::int64_t>(mask_.count()) -
         2 * static_cast<std::int64_t>(values_.count());
}

std::int64_t MaskedSigns::inner_product(const SignVector& other) const {
  return masked_inner_product(values_, other, mask_);
}

// Free functions

std::int64_t inner_product(const SignVector& x, const SignVector& y) {
  CheckSameLength(x.size(), y.size(), "inner_product");
  const auto a = x.words();
  const auto b = y.words();
  std::int64_t differ = 0;
  for (std::size_t k = 0; k < a.size(); ++k) differ += std::popcount(a[k] ^ b[k]);
  return static_cast<std::int64_t>(x.size()) - 2 * differ;
}

std::int64_t masked_inner_product(const SignVector& x, const SignVector& y,
                                  const IndexMask& r) {
  CheckSameLength(x.size(), y.size(), "masked_inner_product");
  CheckSameLength(x.size(), r.size(), "masked_inner_product");
  const auto a = x.words();
  const auto b = y.words();
  const auto m = r.words();
  std::int64_t selected = 0;
  std::int64_t differ = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    selected += std::popcount(m[k]);
    differ += std::popcount((a[k] ^ b[k]) & m[k]);
  }
  return selected - 2 * differ;
}

SignVector extract(const SignVector& x, const IndexMask& r, bool selected) {
  CheckSameLength(x.size(), r.size(), "extract");
  const std::size_t kept = selected ? r.count() : r.size() - r.count();
  SignVector out(kept);
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (r.selected(i) == selected) out.set_bit(j++, x.bit(i));
  }
  return out;
}

SignVector flip_at(const SignVector& x, std::size_t i) {
  CheckIndex(i, x.size(), "flip_at");
  SignVector out = x;
  out.set_bit(i, !x.bit(i));
  return out;
}

std::size_t count_flipped(const SignVector& y, const SignVector& y_tilde) {
  CheckSameLength(y.size(), y_tilde.size(), "count_flipped");
  const auto a = y.words();
  const auto b = y_tilde.words();
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] ^ b[k]);
  return c;
}

}  // namespace dpot
