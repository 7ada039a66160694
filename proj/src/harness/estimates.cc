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

#include "dpot/harness/estimates.h"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "dpot/attacks/adversaries.h"
#include "dpot/core/errors.h"
#include "dpot/harness/trial_runner.h"

namespace dpot {
namespace {

void AddInto(std::vector<std::uint64_t>& into,
             const std::vector<std::uint64_t>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

void RequireAdversaries(const std::vector<std::string>& keys,
                        const char* kind) {
  if (keys.empty()) {
    throw ConfigError(std::string("at least one ") + kind + " is required");
  }
}

AdvantageEstimate Advantage(const std::string& name, std::uint64_t kept_hits,
                            std::uint64_t kept, std::uint64_t erased_hits,
                            std::uint64_t erased, std::uint64_t seed) {
  AdvantageEstimate a;
  a.adversary = name;
  a.accept_kept = EstimateReport::from_counts("accept_given_kept", kept_hits,
                                              kept, seed);
  a.accept_erased = EstimateReport::from_counts("accept_given_erased",
                                                erased_hits, erased, seed);
  a.point = std::abs(a.accept_kept.point - a.accept_erased.point);
  a.ci = abs_difference_interval(a.accept_kept.interval(),
                                 a.accept_erased.interval());
  return a;
}

TargetCheck Check(std::string metric, const Interval& ci, double target) {
  TargetCheck c;
  c.metric = std::move(metric);
  c.upper = ci.high;
  c.target = target;
  c.slack = ci.half_width();
  c.pass = c.upper <= c.target + c.slack;
  return c;
}

void RequireTrials(const RunOptions& run) {
  if (run.trials == 0) throw ConfigError("trials must be at least 1");
}

struct AccuracyCounts {
  std::uint64_t within = 0;
  void merge(const AccuracyCounts& o) { within += o.within; }
};

struct AwecCounts {
  std::uint64_t erased = 0, kept = 0, kept_far = 0, identity_bad = 0;
  std::vector<std::uint64_t> d_kept, d_erased, e_close;

  void merge(const AwecCounts& o) {
    erased += o.erased;
    kept += o.kept;
    kept_far += o.kept_far;
    identity_bad += o.identity_bad;
    AddInto(d_kept, o.d_kept);
    AddInto(d_erased, o.d_erased);
    AddInto(e_close, o.e_close);
  }
};

struct WecCounts {
  std::uint64_t erased = 0, kept = 0, disagree = 0, erasure_mismatch = 0;
  std::vector<std::uint64_t> d_kept, d_erased, g_right;

  void merge(const WecCounts& o) {
    erased += o.erased;
    kept += o.kept;
    disagree += o.disagree;
    erasure_mismatch += o.erasure_mismatch;
    AddInto(d_kept, o.d_kept);
    AddInto(d_erased, o.d_erased);
    AddInto(g_right, o.g_right);
  }
};

}  // namespace

Json AdvantageEstimate::to_json() const {
  return Json{{"adversary", adversary},
              {"accept_given_kept", accept_kept.to_json()},
              {"accept_given_erased", accept_erased.to_json()},
              {"point", point},
              {"ci_low", ci.low},
              {"ci_high", ci.high}};
}

Json TargetCheck::to_json() const {
  return Json{{"metric", metric}, {"upper", upper}, {"target", target},
              {"slack", slack},   {"pass", pass}};
}

Json GuessEstimate::to_json() const {
  return Json{{"probability", probability.to_json()},
              {"parameter", parameter},
              {"parameter_ci_low", parameter_ci.low},
              {"parameter_ci_high", parameter_ci.high}};
}

EstimateReport estimate_accuracy(const Channel& channel, std::int64_t ell,
                                 const RunOptions& run) {
  if (run.trials < 100) {
    throw ConfigError("estimate_accuracy needs at least 100 trials");
  }
  const RandomStream root(run.seed);
  const AccuracyCounts counts = run_trials(
      run.trials, root, "accuracy", run.threads, AccuracyCounts{},
      [&](std::uint64_t, RandomStream& stream, AccuracyCounts& acc) {
        const ChannelSample s = channel.sample(stream);
        const auto out = s.out_v();
        if (!out) {
          throw ChannelFault("channel " + channel.name() +
                             " has no designated output");
        }
        const std::int64_t err = *out - inner_product(s.x, s.y);
        if ((err < 0 ? -err : err) <= ell) ++acc.within;
      });
  return EstimateReport::from_counts("accuracy", counts.within, run.trials,
                                     run.seed);
}

double AwecCertificate::p_upper() const {
  double m = 0;
  for (const auto& a : p) m = std::max(m, a.ci.high);
  return m;
}

double AwecCertificate::q_upper() const {
  double m = 0;
  for (const auto& e : q) m = std::max(m, e.ci_high);
  return m;
}

Json AwecCertificate::to_json() const {
  Json j;
  j["params"] = {{"n", params.n},         {"ell", params.ell},
                 {"epsilon", params.epsilon}, {"lambda1", params.lambda1},
                 {"lambda2", params.lambda2}, {"k", params.k}};
  j["trials"] = trials;
  j["seed"] = seed;
  j["erasure"] = erasure.to_json();
  j["erasure_pass"] = erasure_pass;
  j["alpha"] = alpha.to_json();
  j["p"] = Json::array();
  for (const auto& a : p) j["p"].push_back(a.to_json());
  j["q"] = Json::object();
  for (const auto& e : q) j["q"][e.name] = e.to_json();
  j["p_max_upper"] = p_upper();
  j["q_max_upper"] = q_upper();
  j["regime_notes"] = params.regime_diagnostics(0.0);
  j["secrecy_note"] =
      "p and q are maxima over the registered adversaries only; they lower "
      "bound the true parameters";
  j["identity_violations"] = identity_violations;
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["pass"] = pass;
  return j;
}

std::vector<CsvRow> AwecCertificate::csv_rows() const {
  std::vector<CsvRow> rows;
  rows.push_back(csv_row(erasure, "awec."));
  rows.push_back(csv_row(alpha, "awec."));
  for (const auto& a : p) {
    rows.push_back({"awec.p." + a.adversary, a.point, a.ci.low, a.ci.high,
                    trials, seed});
  }
  for (const auto& e : q) rows.push_back(csv_row(e, "awec.q."));
  return rows;
}

AwecCertificate estimate_awec(const Channel& channel, const AwecParams& params,
                              const std::vector<std::string>& distinguishers,
                              const std::vector<std::string>& estimators,
                              const RunOptions& run,
                              const AwecTargets& targets,
                              std::vector<AwecLogRecord>* log) {
  RequireTrials(run);
  RequireAdversaries(distinguishers, "distinguisher");
  RequireAdversaries(estimators, "estimator");
  params.validate();
  // Fail on unknown keys before running anything.
  for (const auto& k : distinguishers) make_distinguisher(k, Advice{});
  for (const auto& k : estimators) make_estimator(k, Advice{});
  if (log) log->assign(run.trials, AwecLogRecord{});

  const std::int64_t window = 1000 * params.ell;
  AwecCounts zero;
  zero.d_kept.assign(distinguishers.size(), 0);
  zero.d_erased.assign(distinguishers.size(), 0);
  zero.e_close.assign(estimators.size(), 0);

  const RandomStream root(run.seed);
  const AwecCounts c = run_trials(
      run.trials, root, "awec", run.threads, zero,
      [&](std::uint64_t t, RandomStream& stream, AwecCounts& acc) {
        RandomStream run_stream = stream.derive("run");
        const AwecOutcome out = run_awec(channel, params, run_stream);
        if (log) (*log)[t] = AwecLogRecord::from(out);
        const Advice advice{out.view_a.x, out.view_b.y};
        if (out.erased()) {
          ++acc.erased;
        } else {
          ++acc.kept;
          const std::int64_t gap = out.o_a - *out.o_b;
          if (std::abs(gap) > params.ell) ++acc.kept_far;
          const std::int64_t truth =
              inner_product(out.view_a.x, out.view_b.y) -
              *out.view_b.v.designated_output();
          if (gap != truth) ++acc.identity_bad;
        }
        for (std::size_t d = 0; d < distinguishers.size(); ++d) {
          RandomStream coins = stream.derive("distinguisher", d);
          const auto adv = make_distinguisher(distinguishers[d], advice);
          if (adv->evaluate(out.view_a, nullptr, coins) == 1) {
            ++(out.erased() ? acc.d_erased : acc.d_kept)[d];
          }
        }
        if (!out.erased()) return;
        for (std::size_t e = 0; e < estimators.size(); ++e) {
          RandomStream coins = stream.derive("estimator", e);
          const auto est = make_estimator(estimators[e], advice);
          if (std::abs(est->evaluate(out.view_b, coins) - out.o_a) <= window) {
            ++acc.e_close[e];
          }
        }
      });

  if (c.kept == 0 || c.erased == 0) {
    throw ParameterError(
        "estimate_awec: a conditioning branch received no trials");
  }
  AwecCertificate cert;
  cert.params = params;
  cert.trials = run.trials;
  cert.seed = run.seed;
  cert.erasure =
      EstimateReport::from_counts("erasure", c.erased, run.trials, run.seed);
  cert.erasure_pass = cert.erasure.interval().contains(0.5);
  cert.alpha = EstimateReport::from_counts("alpha", c.kept_far, c.kept,
                                           run.seed);
  cert.identity_violations = c.identity_bad;
  cert.checks.push_back(Check("alpha", cert.alpha.interval(), targets.alpha));
  for (std::size_t d = 0; d < distinguishers.size(); ++d) {
    cert.p.push_back(Advantage(distinguishers[d], c.d_kept[d], c.kept,
                               c.d_erased[d], c.erased, run.seed));
    cert.checks.push_back(
        Check("p." + distinguishers[d], cert.p.back().ci, targets.p));
  }
  for (std::size_t e = 0; e < estimators.size(); ++e) {
    cert.q.push_back(EstimateReport::from_counts(estimators[e], c.e_close[e],
                                                 c.erased, run.seed));
    cert.checks.push_back(
        Check("q." + estimators[e], cert.q.back().interval(), targets.q));
  }
  cert.pass = cert.erasure_pass && cert.identity_violations == 0 &&
              std::all_of(cert.checks.begin(), cert.checks.end(),
                          [](const TargetCheck& k) { return k.pass; });
  return cert;
}

double WecCertificate::p_upper() const {
  double m = 0;
  for (const auto& a : p) m = std::max(m, a.ci.high);
  return m;
}

double WecCertificate::q_upper() const {
  double m = 0;
  for (const auto& g : q) m = std::max(m, g.parameter_ci.high);
  return m;
}

Json WecCertificate::to_json() const {
  Json j;
  j["bucket"] = {{"ell", bucket.ell},
                 {"width", bucket.width},
                 {"n", bucket.n},
                 {"min_index", bucket.min_index},
                 {"max_index", bucket.max_index},
                 {"bit_width", bucket.bit_width}};
  j["trials"] = trials;
  j["seed"] = seed;
  j["erasure"] = erasure.to_json();
  j["erasure_pass"] = erasure_pass;
  j["erasure_mismatches"] = erasure_mismatches;
  j["alpha"] = alpha.to_json();
  j["p"] = Json::array();
  for (const auto& a : p) j["p"].push_back(a.to_json());
  j["q"] = Json::object();
  for (const auto& g : q) j["q"][g.probability.name] = g.to_json();
  j["p_max_upper"] = p_upper();
  j["q_max_upper"] = q_upper();
  j["targets"] = {{"alpha", targets.alpha.to_string()},
                  {"p", targets.p.to_string()},
                  {"q", targets.q.to_string()},
                  {"q_alternative",
                   targets.q_alternative.to_string()}};
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["pass"] = pass;
  return j;
}

std::vector<CsvRow> WecCertificate::csv_rows() const {
  std::vector<CsvRow> rows;
  rows.push_back(csv_row(erasure, "wec."));
  rows.push_back(csv_row(alpha, "wec."));
  for (const auto& a : p) {
    rows.push_back({"wec.p." + a.adversary, a.point, a.ci.low, a.ci.high,
                    trials, seed});
  }
  for (const auto& g : q) {
    rows.push_back(csv_row(g.probability, "wec.q_probability."));
    rows.push_back({"wec.q_parameter." + g.probability.name, g.parameter,
                    g.parameter_ci.low, g.parameter_ci.high,
                    g.probability.trials, seed});
  }
  return rows;
}

WecCertificate estimate_wec(const Channel& channel, const AwecParams& params,
                            const std::vector<std::string>& distinguishers,
                            const std::vector<std::string>& guessers,
                            const RunOptions& run,
                            std::optional<WecTargets> targets,
                            std::vector<WecLogRecord>* log) {
  RequireTrials(run);
  RequireAdversaries(distinguishers, "distinguisher");
  RequireAdversaries(guessers, "guesser");
  params.validate();
  for (const auto& k : distinguishers) make_distinguisher(k, Advice{});
  for (const auto& k : guessers) make_guesser(k, Advice{});
  if (log) log->assign(run.trials, WecLogRecord{});

  const BucketParams bucket =
      BucketParams::make(static_cast<std::int64_t>(params.n), params.ell);
  const AwecRunner awec = [&](RandomStream& s) {
    return run_awec(channel, params, s);
  };
  WecCounts zero;
  zero.d_kept.assign(distinguishers.size(), 0);
  zero.d_erased.assign(distinguishers.size(), 0);
  zero.g_right.assign(guessers.size(), 0);

  const RandomStream root(run.seed);
  const WecCounts c = run_trials(
      run.trials, root, "wec", run.threads, zero,
      [&](std::uint64_t t, RandomStream& stream, WecCounts& acc) {
        RandomStream run_stream = stream.derive("run");
        const WecOutcome out = run_wec(awec, bucket, run_stream);
        if (log) {
          (*log)[t] = {AwecLogRecord::from(out.awec), out.s, out.r_gl,
                       out.o_a, out.o_b};
        }
        if (out.erased() != out.awec.erased()) ++acc.erasure_mismatch;
        const WecExtension ext{out.s, out.r_gl, &bucket};
        const Advice advice{out.awec.view_a.x, out.awec.view_b.y};
        if (out.erased()) {
          ++acc.erased;
        } else {
          ++acc.kept;
          if (out.o_a != *out.o_b) ++acc.disagree;
        }
        for (std::size_t d = 0; d < distinguishers.size(); ++d) {
          RandomStream coins = stream.derive("distinguisher", d);
          const auto adv = make_distinguisher(distinguishers[d], advice);
          if (adv->evaluate(out.awec.view_a, &ext, coins) == 1) {
            ++(out.erased() ? acc.d_erased : acc.d_kept)[d];
          }
        }
        if (!out.erased()) return;
        for (std::size_t g = 0; g < guessers.size(); ++g) {
          RandomStream coins = stream.derive("guesser", g);
          const auto guess = make_guesser(guessers[g], advice);
          if (guess->evaluate(out.awec.view_b, ext, coins) == out.o_a) {
            ++acc.g_right[g];
          }
        }
      });

  if (c.kept == 0 || c.erased == 0) {
    throw ParameterError(
        "estimate_wec: a conditioning branch received no trials");
  }
  WecCertificate cert;
  cert.bucket = bucket;
  cert.trials = run.trials;
  cert.seed = run.seed;
  cert.targets = targets.value_or(awec_to_wec_params(
      Rational(1, 1000), Rational(1, 1000), Rational(1, 1000)));
  cert.erasure =
      EstimateReport::from_counts("erasure", c.erased, run.trials, run.seed);
  cert.erasure_pass = cert.erasure.interval().contains(0.5);
  cert.erasure_mismatches = c.erasure_mismatch;
  cert.alpha =
      EstimateReport::from_counts("alpha", c.disagree, c.kept, run.seed);
  cert.checks.push_back(
      Check("alpha", cert.alpha.interval(), cert.targets.alpha.to_double()));
  for (std::size_t d = 0; d < distinguishers.size(); ++d) {
    cert.p.push_back(Advantage(distinguishers[d], c.d_kept[d], c.kept,
                               c.d_erased[d], c.erased, run.seed));
    cert.checks.push_back(Check("p." + distinguishers[d], cert.p.back().ci,
                                cert.targets.p.to_double()));
  }
  for (std::size_t g = 0; g < guessers.size(); ++g) {
    GuessEstimate est;
    est.probability = EstimateReport::from_counts(guessers[g], c.g_right[g],
                                                  c.erased, run.seed);
    est.parameter = 2 * est.probability.point - 1;
    est.parameter_ci = {2 * est.probability.ci_low - 1,
                        2 * est.probability.ci_high - 1};
    cert.q.push_back(est);
    cert.checks.push_back(Check("q." + guessers[g], est.parameter_ci,
                                cert.targets.q.to_double()));
  }
  cert.pass = cert.erasure_pass && cert.erasure_mismatches == 0 &&
              std::all_of(cert.checks.begin(), cert.checks.end(),
                          [](const TargetCheck& k) { return k.pass; });
  return cert;
}

}  // namespace dpot
