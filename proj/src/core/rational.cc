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

#include "dpot/core/rational.h"

#include <cctype>
#include <cmath>
#include <limits>

#include "dpot/core/errors.h"

namespace dpot {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

__int128 Pow10(int e) {
  __int128 p = 1;
  for (int i = 0; i < e; ++i) {
    p *= 10;
    if (p > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("Rational: exponent too large");
    }
  }
  return p;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = normalized(numerator, denominator);
}

Rational Rational::normalized(__int128 num, __int128 den) {
  if (den == 0) throw ParameterError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw OverflowError("Rational: value does not fit in 64 bits");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Rational {
    throw ParameterError("Rational: cannot parse '" + std::string(original) +
                         "'");
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational a = parse(text.substr(0, slash));
    Rational b = parse(text.substr(slash + 1));
    return a / b;
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  __int128 mantissa = 0;
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t pos = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > std::numeric_limits<std::int64_t>::max()) {
        throw OverflowError("Rational: too many digits");
      }
      if (seen_point) ++scale;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    std::string exp_text(text.substr(pos + 1));
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stoi(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
  }
  exponent -= scale;
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return normalized(mantissa * Pow10(exponent), 1);
  return normalized(mantissa, Pow10(-exponent));
}

Rational Rational::from_double(double value, std::int64_t denominator) {
  if (!std::isfinite(value)) throw ParameterError("Rational: non-finite value");
  if (denominator <= 0) throw ParameterError("Rational: bad denominator");
  const long double scaled =
      std::nearbyintl(static_cast<long double>(value) * denominator);
  if (std::fabs(scaled) > 9.2e18L) throw OverflowError("Rational: too large");
  return normalized(static_cast<__int128>(scaled), denominator);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::normalized(
      static_cast<__int128>(a.num_) * b.den_ +
          static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::normalized(
      static_cast<__int128>(a.num_) * b.den_ -
          static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::normalized(static_cast<__int128>(a.num_) * b.num_,
                              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ParameterError("Rational: division by zero");
  return Rational::normalized(static_cast<__int128>(a.num_) * b.den_,
                              static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace dpot
