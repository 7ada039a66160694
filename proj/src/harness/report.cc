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

#include "dpot/harness/report.h"

#include <cstdio>
#include <sstream>
#include <thread>
#include <utility>

#include "dpot/core/errors.h"
#include "dpot/harness/trial_runner.h"

namespace dpot {
namespace {

std::string Number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

EstimateReport EstimateReport::from_counts(std::string name,
                                           std::uint64_t successes,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
  if (trials == 0) {
    throw ParameterError("estimate '" + name + "' has no trials");
  }
  EstimateReport r;
  r.name = std::move(name);
  r.successes = successes;
  r.trials = trials;
  r.seed = seed;
  r.point = static_cast<double>(successes) / static_cast<double>(trials);
  const Interval ci = clopper_pearson(successes, trials);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  return r;
}

Json EstimateReport::to_json() const {
  return Json{{"name", name},       {"point", point},
              {"ci_low", ci_low},   {"ci_high", ci_high},
              {"trials", trials},   {"successes", successes},
              {"seed", seed}};
}

CsvRow csv_row(const EstimateReport& r, const std::string& prefix) {
  return {prefix + r.name, r.point, r.ci_low, r.ci_high, r.trials, r.seed};
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "metric,point,ci_low,ci_high,trials,seed\n";
  for (const CsvRow& row : rows) {
    os << CsvField(row.metric) << ',' << Number(row.point) << ','
       << Number(row.ci_low) << ',' << Number(row.ci_high) << ','
       << row.trials << ',' << row.seed << '\n';
  }
  return os.str();
}

std::string to_json_text(const Json& tree) { return tree.dump(2) + "\n"; }

}  // namespace dpot
