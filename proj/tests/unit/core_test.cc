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
#include <set>
#include <vector>

#include "dpot/core/errors.h"
#include "dpot/core/random_stream.h"
#include "dpot/core/rational.h"
#include "dpot/core/sign_vector.h"
#include "dpot/core/stats.h"
#include "gtest/gtest.h"

namespace dpot {
namespace {

std::int64_t NaiveInnerProduct(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TEST(RandomStreamTest, SameSeedSameSequence) {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
  EXPECT_EQ(a.position(), 100u);
}

TEST(RandomStreamTest, DerivedStreamsDependOnLabelAndIndex) {
  const RandomStream root(7);
  EXPECT_EQ(root.derive("x").seed(), root.derive("x").seed());
  EXPECT_NE(root.derive("x").seed(), root.derive("y").seed());
  EXPECT_NE(root.derive("x", 0).seed(), root.derive("x", 1).seed());
  EXPECT_NE(root.derive("x").seed(), RandomStream(8).derive("x").seed());
}

TEST(RandomStreamTest, UniformBelowCoversRangeEvenly) {
  RandomStream s(3);
  std::vector<std::uint64_t> counts(6);
  for (int i = 0; i < 60000; ++i) ++counts[s.uniform_below(6)];
  std::vector<double> probs(6, 1.0 / 6);
  EXPECT_GT(chi_square_goodness_of_fit(counts, probs).p_value, 1e-4);
  EXPECT_THROW(s.uniform_below(0), ParameterError);
}

TEST(RandomStreamTest, RandomSignIsPlusOrMinusOne) {
  RandomStream s(5);
  int plus = 0;
  for (int i = 0; i < 10000; ++i) {
    const int v = s.random_sign();
    ASSERT_TRUE(v == 1 || v == -1);
    plus += v == 1;
  }
  EXPECT_NEAR(plus / 10000.0, 0.5, 0.02);
}

TEST(SignVectorTest, InnerProductMatchesNaiveSum) {
  RandomStream s(11);
  for (std::size_t n : {1u, 63u, 64u, 65u, 200u, 1000u}) {
    const SignVector x = SignVector::uniform(n, s);
    const SignVector y = SignVector::uniform(n, s);
    EXPECT_EQ(inner_product(x, y), NaiveInnerProduct(x.to_signs(), y.to_signs()))
        << "n=" << n;
  }
}

TEST(SignVectorTest, FromSignsRoundTripsAndRejectsZero) {
  const std::vector<int> signs{1, -1, -1, 1, 1};
  EXPECT_EQ(SignVector::from_signs(signs).to_signs(), signs);
  const std::vector<int> bad{1, 0, -1};
  EXPECT_THROW(SignVector::from_signs(bad), ParameterError);
}

TEST(SignVectorTest, InnerProductRejectsLengthMismatch) {
  EXPECT_THROW(inner_product(SignVector(3), SignVector(4)), DimensionError);
}

TEST(SignVectorTest, FlipAtChangesExactlyOneCoordinate) {
  const SignVector x{1, -1, 1, 1};
  const SignVector f = flip_at(x, 2);
  EXPECT_EQ(f.at(2), -1);
  EXPECT_EQ(count_flipped(x, f), 1u);
  EXPECT_THROW(flip_at(x, 4), IndexError);
}

TEST(IndexMaskTest, ComplementPartitionsCoordinates) {
  RandomStream s(2);
  const IndexMask r = IndexMask::uniform(130, s);
  const IndexMask c = r.complement();
  EXPECT_EQ(r.count() + c.count(), 130u);
  for (std::size_t i = 0; i < 130; ++i) EXPECT_NE(r.selected(i), c.selected(i));
}

TEST(MaskedSignsTest, UnrevealedCoordinateCannotBeRead) {
  const SignVector x{1, -1, 1, -1};
  const MaskedSigns m(x, IndexMask{1, 0, 1, 0});
  EXPECT_EQ(m.at(0), 1);
  EXPECT_EQ(m.at(2), 1);
  EXPECT_THROW(m.at(1), IndexError);
  EXPECT_EQ(m.compact(), (SignVector{1, 1}));
  EXPECT_EQ(m.sum(), 2);
}

TEST(MaskedSignsTest, MaskedInnerProductSplitsTheFullOne) {
  RandomStream s(9);
  const SignVector x = SignVector::uniform(100, s);
  const SignVector y = SignVector::uniform(100, s);
  const IndexMask r = IndexMask::uniform(100, s);
  EXPECT_EQ(masked_inner_product(x, y, r) +
                masked_inner_product(x, y, r.complement()),
            inner_product(x, y));
  EXPECT_EQ(MaskedSigns(x, r).inner_product(y), masked_inner_product(x, y, r));
  std::int64_t naive = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    if (r.selected(i)) naive += x.at(i) * y.at(i);
  }
  EXPECT_EQ(masked_inner_product(x, y, r), naive);
}

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::parse("0.022"), Rational(22, 1000));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_THROW(Rational::parse("abc"), ParameterError);
}

TEST(RationalTest, ArithmeticIsExact) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(Rational(1, 1000), Rational(1, 999));
  EXPECT_THROW(Rational(1, 0), ParameterError);
}

TEST(ClopperPearsonTest, ZeroSuccessesMatchesClosedForm) {
  for (std::uint64_t n : {10u, 100u, 10000u}) {
    const Interval ci = clopper_pearson(0, n);
    EXPECT_EQ(ci.low, 0.0);
    EXPECT_NEAR(ci.high, 1 - std::pow(0.005, 1.0 / n), 1e-12);
  }
  const Interval full = clopper_pearson(10, 10);
  EXPECT_NEAR(full.low, std::pow(0.005, 0.1), 1e-12);
  EXPECT_EQ(full.high, 1.0);
}

TEST(ClopperPearsonTest, IntervalIsSymmetricUnderComplement) {
  const Interval a = clopper_pearson(37, 250);
  const Interval b = clopper_pearson(213, 250);
  EXPECT_NEAR(a.low, 1 - b.high, 1e-12);
  EXPECT_NEAR(a.high, 1 - b.low, 1e-12);
  EXPECT_TRUE(a.contains(37.0 / 250));
}

TEST(ClopperPearsonTest, CoverageAtLeastNominal) {
  // Exact coverage of the interval at p = 0.3, n = 40 by summing binomial
  // masses over the outcomes whose interval contains p.
  const int n = 40;
  const double p = 0.3;
  double covered = 0;
  for (int k = 0; k <= n; ++k) {
    if (clopper_pearson(k, n).contains(p)) {
      covered += std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) -
                          std::lgamma(n - k + 1) + k * std::log(p) +
                          (n - k) * std::log(1 - p));
    }
  }
  EXPECT_GE(covered, 0.99);
}

TEST(StatsTest, AbsDifferenceIntervalContainsTrueGap) {
  const Interval d = abs_difference_interval({0.1, 0.2}, {0.5, 0.6});
  EXPECT_NEAR(d.low, 0.3, 1e-12);
  EXPECT_NEAR(d.high, 0.5, 1e-12);
  const Interval overlap = abs_difference_interval({0.1, 0.3}, {0.2, 0.4});
  EXPECT_EQ(overlap.low, 0.0);
}

TEST(ChiSquareTest, HomogeneityMatchesHandComputation) {
  const std::vector<std::uint64_t> a{10, 20}, b{20, 10};
  const ChiSquareResult r = chi_square_homogeneity(a, b);
  // Expected 15 in every cell.
  EXPECT_NEAR(r.statistic, 4 * 25.0 / 15, 1e-12);
  EXPECT_EQ(r.degrees_of_freedom, 1.0);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(r.statistic / 2)), 1e-9);
}

TEST(ChiSquareTest, EmptyBinsAreDropped) {
  const std::vector<std::uint64_t> a{10, 0, 20}, b{20, 0, 10};
  EXPECT_EQ(chi_square_homogeneity(a, b).degrees_of_freedom, 1.0);
}

TEST(BinomialTest, UpperTailMatchesDirectSum) {
  // P[X >= 3], X ~ Bin(5, 0.5) = (10 + 5 + 1) / 32.
  EXPECT_NEAR(binomial_upper_tail(3, 5, 0.5), 16.0 / 32, 1e-12);
  EXPECT_NEAR(binomial_upper_tail(0, 5, 0.2), 1.0, 1e-12);
}

}  // namespace
}  // namespace dpot
