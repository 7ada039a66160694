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

#ifndef DPOT_HARNESS_REPORT_H_
#define DPOT_HARNESS_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dpot/core/stats.h"
#include "json.hpp"

namespace dpot {

using Json = nlohmann::json;

// A Monte Carlo estimate of a probability with its 99% Clopper-Pearson
// interval.
struct EstimateReport {
  std::string name;
  double point = 0;
  double ci_low = 0;
  double ci_high = 1;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  static EstimateReport from_counts(std::string name, std::uint64_t successes,
                                    std::uint64_t trials, std::uint64_t seed);

  Interval interval() const { return {ci_low, ci_high}; }
  double half_width() const { return (ci_high - ci_low) / 2; }
  Json to_json() const;
};

// One row of the flat CSV export.
struct CsvRow {
  std::string metric;
  double point = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

CsvRow csv_row(const EstimateReport& r, const std::string& prefix = "");

// Header plus rows; numbers use a fixed 17-significant-digit format so equal
// inputs give byte-identical files.
std::string to_csv(const std::vector<CsvRow>& rows);

// Serialized JSON tree with sorted keys and two-space indentation.
std::string to_json_text(const Json& tree);

}  // namespace dpot

#endif  // DPOT_HARNESS_REPORT_H_
