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

#include "dpot/harness/attack_experiments.h"

#include "dpot/attacks/adversaries.h"
#include "dpot/core/errors.h"
#include "dpot/harness/trial_runner.h"

namespace dpot {
namespace {

struct GuessCounts {
  std::uint64_t guesses = 0, hits = 0, misses = 0;

  void add(int guess, int truth) {
    if (guess == kAbstain) return;
    ++guesses;
    ++(guess == truth ? hits : misses);
  }
  void merge(const GuessCounts& o) {
    guesses += o.guesses;
    hits += o.hits;
    misses += o.misses;
  }
};

AttackReport Finish(AttackReport report, const GuessCounts& c) {
  // Abstentions count toward the denominator: the contract averages over
  // i <- [n] including trials that output nothing.
  report.verdict = dp_violation_from_counts(c.hits, c.misses, report.trials,
                                            report.epsilon, report.delta);
  report.answered = c.guesses;
  return report;
}

void RequireRun(const RunOptions& run) {
  if (run.trials == 0) throw ConfigError("trials must be at least 1");
}

}  // namespace

Json AttackReport::to_json() const {
  return Json{{"attack", attack},
              {"adversary", adversary},
              {"n", n},
              {"k", k},
              {"gamma", gamma},
              {"epsilon", epsilon},
              {"delta", delta},
              {"trials", trials},
              {"seed", seed},
              {"answered", answered},
              {"abstentions", abstentions()},
              {"p_hit", verdict.p_hit},
              {"p_hit_ci", {verdict.hit_ci.low, verdict.hit_ci.high}},
              {"p_miss", verdict.p_miss},
              {"p_miss_ci", {verdict.miss_ci.low, verdict.miss_ci.high}},
              {"violation", verdict.violation}};
}

std::vector<CsvRow> AttackReport::csv_rows() const {
  const std::string prefix = attack + "." + adversary + ".";
  return {{prefix + "p_hit", verdict.p_hit, verdict.hit_ci.low,
           verdict.hit_ci.high, trials, seed},
          {prefix + "p_miss", verdict.p_miss, verdict.miss_ci.low,
           verdict.miss_ci.high, trials, seed}};
}

AttackReport a_tilde_experiment(const Channel& channel,
                                const std::string& distinguisher,
                                const ATildeParams& params, double epsilon,
                                double delta, const RunOptions& run) {
  RequireRun(run);
  make_distinguisher(distinguisher, Advice{});  // rejects unknown keys early
  const std::size_t n = channel.n();
  const RandomStream root(run.seed);
  const GuessCounts c = run_trials(
      run.trials, root, "a-tilde", run.threads, GuessCounts{},
      [&](std::uint64_t, RandomStream& stream, GuessCounts& acc) {
        RandomStream channel_stream = stream.derive("channel");
        const ChannelSample s = channel.sample(channel_stream);
        RandomStream attack = stream.derive("attack");
        const std::size_t i = attack.uniform_below(n);
        const auto a = make_distinguisher(distinguisher, Advice{s.x, s.y});
        acc.add(attack_a_tilde(*a, params, i, s.y, s.x, s.u, attack),
                s.y.at(i));
      });
  AttackReport report;
  report.attack = "a-tilde";
  report.adversary = distinguisher;
  report.n = n;
  report.k = params.k;
  report.gamma = params.effective_gamma();
  report.epsilon = epsilon;
  report.delta = delta;
  report.trials = run.trials;
  report.seed = run.seed;
  return Finish(report, c);
}

AttackReport b_tilde_experiment(const Channel& channel,
                                const std::string& estimator, std::size_t k,
                                const ReferenceDistParams& dist_params,
                                double epsilon, double delta,
                                const RunOptions& run) {
  RequireRun(run);
  make_estimator(estimator, Advice{});
  const std::size_t n = channel.n();
  const ReferenceDist dist(dist_params);
  const RandomStream root(run.seed);
  const GuessCounts c = run_trials(
      run.trials, root, "b-tilde", run.threads, GuessCounts{},
      [&](std::uint64_t, RandomStream& stream, GuessCounts& acc) {
        RandomStream channel_stream = stream.derive("channel");
        const ChannelSample s = channel.sample(channel_stream);
        RandomStream attack = stream.derive("attack");
        const std::size_t i = attack.uniform_below(n);
        const auto b = make_estimator(estimator, Advice{s.x, s.y});
        acc.add(attack_b_tilde(*b, dist, channel, k, i, s.x, s.y, s.v, attack),
                s.x.at(i));
      });
  AttackReport report;
  report.attack = "b-tilde";
  report.adversary = estimator;
  report.n = n;
  report.k = k;
  report.epsilon = epsilon;
  report.delta = delta;
  report.trials = run.trials;
  report.seed = run.seed;
  return Finish(report, c);
}

}  // namespace dpot
