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

#include <cmath>
#include <cstdint>
#include <limits>

#include "dpot/channels/channel.h"
#include "dpot/core/errors.h"
#include "dpot/core/stats.h"
#include "dpot/wec/wec.h"
#include "gtest/gtest.h"

namespace dpot {
namespace {

// ceil(a / b) through floating point, fine for the small values used here.
std::int64_t CeilOracle(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(
      std::ceil(static_cast<long double>(a) / static_cast<long double>(b)));
}

TEST(CeilDivTest, MatchesFloatingPointOracle) {
  for (std::int64_t a = -50; a <= 50; ++a) {
    for (std::int64_t b = 1; b <= 9; ++b) {
      EXPECT_EQ(ceil_div(a, b), CeilOracle(a, b)) << a << "/" << b;
    }
  }
  EXPECT_THROW(ceil_div(1, 0), ParameterError);
  EXPECT_THROW(ceil_div(1, -3), ParameterError);
}

TEST(BucketParamsTest, RangeCoversAllOutputsAndOffsets) {
  for (std::int64_t n : {0L, 1L, 100L, 14000L, 100000L}) {
    for (std::int64_t ell : {1L, 5L, 14L}) {
      const BucketParams p = BucketParams::make(n, ell);
      EXPECT_EQ(p.width, 1000 * ell);
      EXPECT_EQ(p.min_index, CeilOracle(-n + 1, p.width));
      EXPECT_EQ(p.max_index, CeilOracle(n + p.width, p.width));
      const auto span = static_cast<std::uint64_t>(p.max_index - p.min_index);
      EXPECT_LT(span >> (p.bit_width - 1) >> 1, 1u);  // span < 2^bit_width
      const double formula = std::ceil(
          std::log2(double(2 * n + p.width) / double(p.width)) + 1.0);
      EXPECT_GE(p.bit_width, static_cast<unsigned>(formula));
    }
  }
  EXPECT_THROW(BucketParams::make(10, 0), ParameterError);
  EXPECT_THROW(BucketParams::make(-1, 1), ParameterError);
}

TEST(BucketTest, OffsetRangeIsChecked) {
  EXPECT_EQ(bucket(0, 1, 1), 1);
  EXPECT_EQ(bucket(-1, 1, 1), 0);
  EXPECT_EQ(bucket(999, 1, 1), 1);
  EXPECT_EQ(bucket(1000, 1, 1), 2);
  EXPECT_THROW(bucket(0, 0, 1), IndexError);
  EXPECT_THROW(bucket(0, 1001, 1), IndexError);
  EXPECT_THROW(bucket(0, 1, 0), ParameterError);
}

// For every pair with |o_a - o_b| <= ell the buckets disagree on at most
// |o_a - o_b| of the 1000*ell offsets. Checked by enumerating all offsets.
TEST(BucketTest, ExhaustiveDisagreementBound) {
  for (std::int64_t ell : {1L, 5L, 14L}) {
    const std::int64_t width = 1000 * ell;
    for (std::int64_t o_a : std::initializer_list<std::int64_t>{
             -2 * width - 3, -width, -7, 0, 1, 999, width + 11}) {
      for (std::int64_t d = -ell; d <= ell; ++d) {
        std::int64_t disagree = 0;
        for (std::int64_t s = 1; s <= width; ++s) {
          disagree += CeilOracle(o_a + s, width) != CeilOracle(o_a + d + s, width);
          ASSERT_EQ(bucket(o_a, s, ell), CeilOracle(o_a + s, width));
        }
        EXPECT_EQ(disagree, std::abs(d)) << "ell=" << ell << " o=" << o_a;
        EXPECT_LE(disagree * 1000, width);
      }
    }
  }
}

TEST(GlTest, InnerProductParity) {
  EXPECT_EQ(gl_bits(0b1011, 0b0110), 1);
  EXPECT_EQ(gl_bits(0b1011, 0b1010), 0);
  EXPECT_EQ(gl_bits(~0ull, ~0ull), 0);
}

TEST(GlTest, PredicateShiftsByMinIndexAndChecksRange) {
  const BucketParams p = BucketParams::make(3000, 1);
  ASSERT_EQ(p.min_index, -2);
  EXPECT_EQ(gl_predicate(-2, 0b1, p), 0);
  EXPECT_EQ(gl_predicate(-1, 0b1, p), 1);
  EXPECT_THROW(gl_predicate(p.max_index + 1, 0, p), OverflowError);
  EXPECT_THROW(gl_predicate(p.min_index - 1, 0, p), OverflowError);
  EXPECT_THROW(gl_predicate(0, std::uint64_t{1} << p.bit_width, p),
               IndexError);
}

// Binomial upper tail P[Bin(m, p) >= k] by direct summation.
double BinomialUpperTail(unsigned m, double p, unsigned k) {
  double total = 0;
  for (unsigned j = k; j <= m; ++j) {
    total += std::exp(std::lgamma(m + 1.0) - std::lgamma(j + 1.0) -
                      std::lgamma(m - j + 1.0) + j * std::log(p) +
                      (m - j) * std::log1p(-p));
  }
  return total;
}

TEST(GlDecodeTest, RecoveryMatchesBinomialOracle) {
  const unsigned bits = 32;
  const double accuracy = 0.9;
  RandomStream stream(11);
  const int trials = 1000;
  int recovered = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t secret = stream() & 0xffffffffull;
    RandomStream noise = stream.derive("noise", t);
    const PredictorOracle pred = [&](std::uint64_t r) {
      const int truth = gl_bits(secret, r);
      return noise.bernoulli(accuracy) ? truth : 1 - truth;
    };
    RandomStream coins = stream.derive("decode", t);
    recovered += gl_weak_decode(pred, bits, coins) == secret;
  }
  // A pair of answers gives the right bit with probability a^2 + (1-a)^2;
  // a bit is right when a strict majority of the 32 pairs is.
  const double pair = accuracy * accuracy + (1 - accuracy) * (1 - accuracy);
  const double per_bit = BinomialUpperTail(bits, pair, bits / 2 + 1);
  const double expected = std::pow(per_bit, bits);
  const Interval ci = clopper_pearson(recovered, trials);
  EXPECT_TRUE(ci.contains(expected)) << recovered << " vs " << expected;
  EXPECT_GE(recovered, 990);
}

TEST(GlDecodeTest, PerfectOracleAlwaysRecovers) {
  RandomStream s(3);
  for (unsigned bits : {1u, 7u, 64u}) {
    const std::uint64_t mask =
        bits == 64 ? ~0ull : (std::uint64_t{1} << bits) - 1;
    const std::uint64_t secret = s() & mask;
    EXPECT_EQ(gl_weak_decode([&](std::uint64_t r) { return gl_bits(secret, r); },
                             bits, s, 3),
              secret);
  }
  EXPECT_THROW(gl_weak_decode([](std::uint64_t) { return 0; }, 0, s),
               ParameterError);
  EXPECT_THROW(gl_weak_decode([](std::uint64_t) { return 0; }, 65, s),
               ParameterError);
  EXPECT_THROW(gl_weak_decode([](std::uint64_t) { return 0; }, 8, s, 0u),
               ParameterError);
}

TEST(OtFeasibleTest, ParameterChainIsExact) {
  const Rational milli(1, 1000);
  const WecTargets t = awec_to_wec_params(milli, milli, milli);
  EXPECT_EQ(t.alpha, Rational::parse("0.002"));
  EXPECT_EQ(t.p, Rational::parse("0.001"));
  EXPECT_EQ(t.q, Rational::parse("0.522"));
  EXPECT_EQ(t.q_alternative, Rational::parse("0.502001"));
  EXPECT_EQ(Rational(44) * (t.alpha + t.p), Rational::parse("0.132"));
  EXPECT_EQ(Rational(1) - t.q, Rational::parse("0.478"));
  EXPECT_TRUE(ot_feasible(t.alpha, t.p, t.q));
}

TEST(OtFeasibleTest, BoundaryIsInclusive) {
  // 44 (a + p) = 1 - q exactly.
  EXPECT_TRUE(ot_feasible(Rational(1, 88), Rational(1, 88), Rational(0)));
  EXPECT_FALSE(ot_feasible(Rational(1, 88), Rational(1, 88), Rational(1, 1000000)));
  EXPECT_THROW(ot_feasible(Rational(-1, 2), Rational(0), Rational(0)),
               ParameterError);
  EXPECT_THROW(ot_feasible(Rational(0), Rational(0), Rational(3, 2)),
               ParameterError);
}

TEST(RunWecTest, KeptOutputsAgreeWhenAwecOutputsAgree) {
  ChannelSpec spec;
  spec.kind = ChannelKind::kRandomizedResponse;
  spec.n = 256;
  spec.epsilon = std::numeric_limits<double>::infinity();
  const auto ch = make_channel(spec);
  const AwecParams ap = AwecParams::make(256, 2, 1.0, 1.0, 10.0, 8);
  const BucketParams bp = BucketParams::make(256, 2);
  const AwecRunner runner = [&](RandomStream& s) { return run_awec(*ch, ap, s); };
  RandomStream s(7);
  int erased = 0;
  for (int t = 0; t < 200; ++t) {
    const WecOutcome o = run_wec(runner, bp, s);
    EXPECT_EQ(o.erased(), o.awec.erased());
    EXPECT_GE(o.s, 1);
    EXPECT_LE(o.s, bp.width);
    EXPECT_EQ(o.r_gl >> bp.bit_width, 0u);
    EXPECT_EQ(o.o_a, gl_predicate(bucket(o.awec.o_a, o.s, 2), o.r_gl, bp));
    if (o.erased()) {
      ++erased;
    } else {
      EXPECT_EQ(o.o_a, *o.o_b);
    }
  }
  EXPECT_GT(erased, 50);
  EXPECT_LT(erased, 150);
}

}  // namespace
}  // namespace dpot
