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

#include "dpot/core/stats.h"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "dpot/core/errors.h"

namespace dpot {

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double confidence) {
  if (trials == 0) throw ParameterError("clopper_pearson: zero trials");
  if (successes > trials) {
    throw ParameterError("clopper_pearson: successes exceed trials");
  }
  if (!(confidence > 0 && confidence < 1)) {
    throw ParameterError("clopper_pearson: confidence must be in (0, 1)");
  }
  const double tail = (1 - confidence) / 2;
  const double k = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  Interval ci;
  ci.low = successes == 0
               ? 0.0
               : boost::math::quantile(
                     boost::math::beta_distribution<>(k, n - k + 1), tail);
  ci.high = successes == trials
                ? 1.0
                : boost::math::quantile(
                      boost::math::beta_distribution<>(k + 1, n - k),
                      1 - tail);
  return ci;
}

Interval abs_difference_interval(const Interval& a, const Interval& b) {
  Interval d;
  d.low = std::max({0.0, a.low - b.high, b.low - a.high});
  d.high = std::max(a.high - b.low, b.high - a.low);
  d.high = std::clamp(d.high, 0.0, 1.0);
  return d;
}

ChiSquareResult chi_square_homogeneity(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) {
    throw DimensionError("chi_square_homogeneity: bin counts differ");
  }
  double total_a = 0, total_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total_a += static_cast<double>(a[i]);
    total_b += static_cast<double>(b[i]);
  }
  if (total_a == 0 || total_b == 0) {
    throw ParameterError("chi_square_homogeneity: empty sample");
  }
  const double total = total_a + total_b;
  ChiSquareResult r;
  std::size_t used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double row = static_cast<double>(a[i] + b[i]);
    if (row == 0) continue;
    ++used;
    const double ea = row * total_a / total;
    const double eb = row * total_b / total;
    const double da = static_cast<double>(a[i]) - ea;
    const double db = static_cast<double>(b[i]) - eb;
    r.statistic += da * da / ea + db * db / eb;
  }
  r.degrees_of_freedom = used > 1 ? static_cast<double>(used - 1) : 0;
  r.p_value = r.degrees_of_freedom == 0
                  ? 1.0
                  : boost::math::cdf(boost::math::complement(
                        boost::math::chi_squared(r.degrees_of_freedom),
                        r.statistic));
  return r;
}

ChiSquareResult chi_square_goodness_of_fit(
    std::span<const std::uint64_t> observed,
    std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) {
    throw DimensionError("chi_square_goodness_of_fit: bin counts differ");
  }
  double total = 0;
  for (std::uint64_t c : observed) total += static_cast<double>(c);
  if (total == 0) throw ParameterError("chi_square_goodness_of_fit: empty");
  ChiSquareResult r;
  std::size_t used = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * probabilities[i];
    if (e <= 0) continue;
    ++used;
    const double d = static_cast<double>(observed[i]) - e;
    r.statistic += d * d / e;
  }
  r.degrees_of_freedom = used > 1 ? static_cast<double>(used - 1) : 0;
  r.p_value = r.degrees_of_freedom == 0
                  ? 1.0
                  : boost::math::cdf(boost::math::complement(
                        boost::math::chi_squared(r.degrees_of_freedom),
                        r.statistic));
  return r;
}

double binomial_upper_tail(std::uint64_t k, std::uint64_t n, double p) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  const boost::math::binomial_distribution<> dist(static_cast<double>(n), p);
  return boost::math::cdf(boost::math::complement(dist, static_cast<double>(k - 1)));
}

}  // namespace dpot
