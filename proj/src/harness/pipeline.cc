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

#include "dpot/harness/pipeline.h"

#include <algorithm>

#include "dpot/attacks/adversaries.h"
#include "dpot/core/errors.h"

namespace dpot {
namespace {

constexpr std::int64_t kBoundDenominator = 1'000'000'000'000;

void CheckKeys(const std::vector<std::string>& keys, const char* kind,
               bool (*known)(std::string_view)) {
  if (keys.empty()) {
    throw ConfigError(std::string("no ") + kind + " registered");
  }
  for (const auto& k : keys) {
    if (!known(k)) {
      throw ConfigError(std::string("unknown ") + kind + " '" + k + "'");
    }
  }
}

bool KnownDistinguisher(std::string_view k) {
  const auto keys = distinguisher_keys();
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}
bool KnownEstimator(std::string_view k) {
  const auto keys = estimator_keys();
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}
bool KnownGuesser(std::string_view k) {
  const auto keys = guesser_keys();
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}

}  // namespace

void PipelineConfig::validate() const {
  if (run.trials == 0) throw ConfigError("trials must be at least 1");
  if (audit_trials == 0) throw ConfigError("audit trials must be at least 1");
  CheckKeys(distinguishers, "distinguisher", KnownDistinguisher);
  CheckKeys(estimators, "estimator", KnownEstimator);
  CheckKeys(guessers, "guesser", KnownGuesser);
  channel.validate();
  awec.validate();
  if (awec.n != channel.n) {
    throw ConfigError("AWEC size differs from the channel size");
  }
}

Json PipelineConfig::to_json() const {
  Json channel_json{{"kind", std::string(to_string(channel.kind))},
                    {"n", channel.n},
                    {"epsilon", channel.epsilon},
                    {"delta", channel.delta}};
  if (channel.leak_index) channel_json["leak_index"] = *channel.leak_index;
  return Json{{"channel", channel_json},
              {"awec",
               {{"n", awec.n},
                {"ell", awec.ell},
                {"epsilon", awec.epsilon},
                {"lambda1", awec.lambda1},
                {"lambda2", awec.lambda2},
                {"k", awec.k}}},
              {"distinguishers", distinguishers},
              {"estimators", estimators},
              {"guessers", guessers},
              {"trials", run.trials},
              {"audit_trials", audit_trials},
              {"seed", run.seed}};
}

Json FeasibilityVerdict::to_json() const {
  return Json{{"alpha_upper", alpha.to_string()},
              {"p_upper", p.to_string()},
              {"q_upper", q.to_string()},
              {"lhs_44_alpha_plus_p", (Rational(44) * (alpha + p)).to_double()},
              {"rhs_1_minus_q", (Rational(1) - q).to_double()},
              {"ot_feasible", feasible}};
}

FeasibilityVerdict feasibility_from_bounds(double alpha_upper, double p_upper,
                                           double q_upper) {
  FeasibilityVerdict v;
  v.alpha = Rational::from_double(alpha_upper, kBoundDenominator);
  v.p = Rational::from_double(p_upper, kBoundDenominator);
  v.q = Rational::from_double(std::max(0.0, q_upper), kBoundDenominator);
  v.feasible = ot_feasible(v.alpha, v.p, v.q);
  return v;
}

Json PipelineReport::to_json() const {
  return Json{{"config", config},
              {"accuracy", accuracy.to_json()},
              {"awec", awec.to_json()},
              {"wec", wec.to_json()},
              {"feasibility", feasibility.to_json()},
              {"dp_audit", audit.to_json()},
              {"dp_violation", dp_violation()}};
}

std::vector<CsvRow> PipelineReport::csv_rows() const {
  std::vector<CsvRow> rows{csv_row(accuracy, "channel.")};
  for (auto& r : awec.csv_rows()) rows.push_back(std::move(r));
  for (auto& r : wec.csv_rows()) rows.push_back(std::move(r));
  const double f = feasibility.feasible ? 1.0 : 0.0;
  rows.push_back({"ot_feasible", f, f, f, wec.trials, wec.seed});
  for (auto& r : audit.csv_rows()) rows.push_back(std::move(r));
  return rows;
}

PipelineReport pipeline_report(const PipelineConfig& config) {
  config.validate();
  const auto channel = make_channel(config.channel);
  const RandomStream root(config.run.seed);
  auto stage = [&](const char* label) {
    RunOptions r = config.run;
    r.seed = root.derive(label).seed();
    return r;
  };

  PipelineReport report;
  report.config = config.to_json();
  report.accuracy = estimate_accuracy(*channel, config.awec.ell,
                                      stage("accuracy"));
  report.awec = estimate_awec(*channel, config.awec, config.distinguishers,
                              config.estimators, stage("awec"));
  report.wec = estimate_wec(*channel, config.awec, config.distinguishers,
                            config.guessers, stage("wec"));
  report.feasibility = feasibility_from_bounds(
      report.wec.alpha.ci_high, report.wec.p_upper(), report.wec.q_upper());

  RunOptions audit = stage("audit");
  audit.trials = config.audit_trials;
  report.audit = dp_audit_suite(
      *channel, default_neighbor_pairs(*channel, audit.seed),
      config.channel.epsilon, config.channel.delta, audit);
  return report;
}

}  // namespace dpot
