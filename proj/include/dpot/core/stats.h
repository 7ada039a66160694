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

#ifndef DPOT_CORE_STATS_H_
#define DPOT_CORE_STATS_H_

#include <cstdint>
#include <span>

namespace dpot {

inline constexpr double kConfidence = 0.99;

struct Interval {
  double low = 0;
  double high = 1;

  bool contains(double v) const { return low <= v && v <= high; }
  double half_width() const { return (high - low) / 2; }
};

// Exact two-sided Clopper-Pearson interval for successes out of trials.
// Throws ParameterError when trials == 0 or successes > trials.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double confidence = kConfidence);

// Conservative interval for |p1 - p2| from intervals on p1 and p2.
Interval abs_difference_interval(const Interval& a, const Interval& b);

struct ChiSquareResult {
  double statistic = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;
};

// Homogeneity test of two histograms over the same bins. Bins empty in both
// samples are dropped.
ChiSquareResult chi_square_homogeneity(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b);

// Goodness of fit of observed counts to expected probabilities.
ChiSquareResult chi_square_goodness_of_fit(
    std::span<const std::uint64_t> observed,
    std::span<const double> probabilities);

// Upper tail P[X >= k] for X ~ Binomial(n, p).
double binomial_upper_tail(std::uint64_t k, std::uint64_t n, double p);

}  // namespace dpot

#endif  // DPOT_CORE_STATS_H_
