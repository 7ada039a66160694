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

#ifndef DPOT_CORE_RATIONAL_H_
#define DPOT_CORE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dpot {

// Exact fraction with 64-bit numerator and positive denominator, kept in
// lowest terms. Intermediate products use 128-bit arithmetic; a result that
// does not fit throws OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  // Parses "3", "-1/2", "0.022" or "1e-3" exactly.
  static Rational parse(std::string_view text);
  // Nearest fraction with the given denominator (used to lift measured
  // floating point bounds into exact comparisons).
  static Rational from_double(double value, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const;
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational normalized(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace dpot

#endif  // DPOT_CORE_RATIONAL_H_
