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

#include "dpot/wec/wec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "dpot/core/errors.h"

namespace dpot {

std::int64_t ceil_div(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw ParameterError("ceil_div: denominator <= 0");
  std::int64_t q = numerator / denominator;  // truncates toward zero
  if (numerator % denominator != 0 && numerator > 0) ++q;
  return q;
}

BucketParams BucketParams::make(std::int64_t n, std::int64_t ell) {
  if (ell < 1) throw ParameterError("bucket: ell must be at least 1");
  if (n < 0) throw ParameterError("bucket: n must be non-negative");
  BucketParams p;
  p.ell = ell;
  p.width = 1000 * ell;
  p.n = n;
  p.min_index = ceil_div(-n + 1, p.width);
  p.max_index = ceil_div(n + p.width, p.width);
  const double formula =
      std::ceil(std::log2(static_cast<double>(2 * n + p.width) /
                          static_cast<double>(p.width)) +
                1.0);
  const std::uint64_t span =
      static_cast<std::uint64_t>(p.max_index - p.min_index);
  const unsigned needed = span == 0 ? 1u : std::bit_width(span);
  p.bit_width = std::max(static_cast<unsigned>(formula), needed);
  if (p.bit_width > 64) throw OverflowError("bucket index needs > 64 bits");
  return p;
}

std::int64_t bucket(std::int64_t o, std::int64_t s, std::int64_t ell) {
  if (ell < 1) throw ParameterError("bucket: ell must be at least 1");
  const std::int64_t width = 1000 * ell;
  if (s < 1 || s > width) {
    throw IndexError("bucket offset " + std::to_string(s) +
                     " outside [1, " + std::to_string(width) + "]");
  }
  return ceil_div(o + s, width);
}

int gl_bits(std::uint64_t a, std::uint64_t r) {
  return std::popcount(a & r) & 1;
}

int gl_predicate(std::int64_t value, std::uint64_t r_gl,
                 const BucketParams& params) {
  if (value < params.min_index || value > params.max_index) {
    throw OverflowError("bucket index " + std::to_string(value) +
                        " outside representable range [" +
                        std::to_string(params.min_index) + ", " +
                        std::to_string(params.max_index) + "]");
  }
  if (params.bit_width < 64 && (r_gl >> params.bit_width) != 0) {
    throw IndexError("predicate mask wider than bit_width");
  }
  return gl_bits(static_cast<std::uint64_t>(value - params.min_index), r_gl);
}

WecOutcome run_wec(const AwecRunner& awec, const BucketParams& params,
                   RandomStream& stream) {
  const RandomStream base(stream());
  RandomStream awec_stream = base.derive("awec");
  RandomStream alice = base.derive("wec-alice");
  WecOutcome out;
  out.awec = awec(awec_stream);
  out.s = 1 + static_cast<std::int64_t>(
                  alice.uniform_below(static_cast<std::uint64_t>(params.width)));
  out.r_gl = params.bit_width == 64
                 ? alice()
                 : alice() & ((std::uint64_t{1} << params.bit_width) - 1);
  out.o_a = gl_predicate(bucket(out.awec.o_a, out.s, params.ell), out.r_gl,
                         params);
  if (out.awec.o_b) {
    out.o_b = gl_predicate(bucket(*out.awec.o_b, out.s, params.ell), out.r_gl,
                           params);
  }
  return out;
}

std::uint64_t gl_weak_decode(const PredictorOracle& pred, unsigned n_bits,
                             RandomStream& stream,
                             std::optional<unsigned> samples_per_bit) {
  if (n_bits < 1 || n_bits > 64) {
    throw ParameterError("gl_weak_decode: n_bits must be in [1, 64]");
  }
  const unsigned samples = samples_per_bit.value_or(n_bits);
  if (samples == 0) throw ParameterError("gl_weak_decode: zero samples");
  const std::uint64_t mask =
      n_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_bits) - 1;
  std::uint64_t decoded = 0;
  for (unsigned i = 0; i < n_bits; ++i) {
    const std::uint64_t e_i = std::uint64_t{1} << i;
    unsigned ones = 0;
    for (unsigned t = 0; t < samples; ++t) {
      const std::uint64_t r = stream() & mask;
      ones += static_cast<unsigned>((pred(r) ^ pred(r ^ e_i)) & 1);
    }
    if (2 * ones > samples) decoded |= e_i;
  }
  return decoded;
}

bool ot_feasible(const Rational& alpha, const Rational& p, const Rational& q) {
  const Rational zero(0), one(1);
  for (const Rational* v : {&alpha, &p, &q}) {
    if (*v < zero || *v > one) {
      throw ParameterError("ot_feasible: inputs must lie in [0, 1], got " +
                           v->to_string());
    }
  }
  return Rational(44) * (alpha + p) <= one - q;
}

WecTargets awec_to_wec_params(const Rational& alpha, const Rational& p,
                              const Rational& q) {
  WecTargets t;
  t.alpha = alpha + Rational(1, 1000);
  t.p = p;
  t.q = Rational(1, 2) + Rational(2) * (q + Rational(1, 100));
  t.q_alternative = Rational(1, 2) + Rational(2001, 1000) * q;
  return t;
}

}  // namespace dpot
