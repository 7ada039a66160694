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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dpot/attacks/adversaries.h"
#include "dpot/attacks/conditioning.h"
#include "dpot/attacks/predictor.h"
#include "dpot/channels/channel.h"
#include "dpot/channels/exact_dp.h"
#include "dpot/cli/cli.h"
#include "dpot/core/rational.h"
#include "dpot/core/stats.h"
#include "dpot/harness/appendix_a.h"
#include "dpot/harness/audit.h"
#include "dpot/harness/estimates.h"
#include "dpot/wec/wec.h"
#include "support/predictor_oracles.h"

namespace dpot {
namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

std::unique_ptr<Channel> Trusted(std::size_t n) {
  ChannelSpec s;
  s.kind = ChannelKind::kTrustedLaplace;
  s.n = n;
  s.epsilon = 1.0;
  return make_channel(s);
}

const AwecParams& DeskParams() {
  static const AwecParams p = AwecParams::make(100000, 14, 1.0, 1.0, 10.0);
  return p;
}

// Criteria 1 and 3 share the 10^4-trial run, 2 and 3 the 10^5-trial run.
const AwecCertificate& AwecRun(std::uint64_t trials) {
  static std::vector<std::pair<std::uint64_t, AwecCertificate>> cache;
  for (const auto& [t, c] : cache) {
    if (t == trials) return c;
  }
  const auto ch = Trusted(100000);
  cache.emplace_back(trials,
                     estimate_awec(*ch, DeskParams(), {"constant"},
                                   {"constant"}, {trials, 2024, 0}));
  return cache.back().second;
}

Result ErasureRate() {
  const AwecCertificate& c = AwecRun(10000);
  const bool pass = c.erasure.point >= 0.487 && c.erasure.point <= 0.513;
  return {pass, Format("erasure %.4f over %llu trials, k = %zu", c.erasure.point,
                       static_cast<unsigned long long>(c.trials), c.params.k)};
}

Result AwecAccuracy() {
  const AwecCertificate& c = AwecRun(100000);
  const bool pass = c.alpha.ci_high <= 0.002;
  return {pass, Format("P[|o_A - o_B| > ell | kept] = %.5f, 99%% upper %.5f "
                       "(%llu of %llu kept)",
                       c.alpha.point, c.alpha.ci_high,
                       static_cast<unsigned long long>(c.alpha.successes),
                       static_cast<unsigned long long>(c.alpha.trials))};
}

Result Identity() {
  std::uint64_t kept = 0, bad = 0;
  for (std::uint64_t t : {10000ull, 100000ull}) {
    const AwecCertificate& c = AwecRun(t);
    kept += c.alpha.trials;
    bad += c.identity_violations;
  }
  return {bad == 0, Format("%llu violations over %llu kept trials",
                           static_cast<unsigned long long>(bad),
                           static_cast<unsigned long long>(kept))};
}

Result Bucketing() {
  std::int64_t worst_num = 0, worst_den = 1;
  bool pass = true;
  for (std::int64_t ell : {1, 5, 14}) {
    const std::int64_t width = 1000 * ell;
    for (std::int64_t o : {-100000L, -width - 1, -1L, 0L, 1L, 12345L, 100000L}) {
      for (std::int64_t d = -ell; d <= ell; ++d) {
        std::int64_t disagree = 0;
        for (std::int64_t s = 1; s <= width; ++s) {
          disagree += bucket(o, s, ell) != bucket(o + d, s, ell);
        }
        // disagree / width <= 1 / 1000, compared exactly.
        if (disagree * 1000 > width) pass = false;
        if (disagree * worst_den > worst_num * width) {
          worst_num = disagree;
          worst_den = width;
        }
      }
    }
  }
  return {pass, Format("worst disagreement %lld/%lld (limit 1/1000)",
                       static_cast<long long>(worst_num),
                       static_cast<long long>(worst_den))};
}

Result Conditioning() {
  RandomStream s(55);
  double worst = 0;
  bool pass = true;
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint8_t> table(1u << 16);
    for (auto& v : table) v = s.fair_coin();
    const auto g = conditioning_gap_table(table, 16, 0.5);
    worst = std::max(worst, g.bad_fraction);
    if (g.bad_fraction > g.bound()) pass = false;
  }
  const auto single = conditioning_gap(
      [](const IndexMask& r) { return r.selected(0) ? 1 : 0; }, 8, 0.5,
      GapMode::kExact, s);
  pass = pass && single.bad_fraction == 1.0 / 8;
  return {pass, Format("max bad fraction %.4f over 1000 tables (bound 0.5); "
                       "F = r_0 at n = 8 gives %.4f",
                       worst, single.bad_fraction)};
}

Result Audit() {
  ChannelSpec leaky;
  leaky.kind = ChannelKind::kLeaky;
  leaky.n = 8;
  leaky.leak_index = 3;
  const auto lc = make_channel(leaky);
  const AuditSuite flagged = dp_audit_suite(
      *lc, default_neighbor_pairs(*lc, 6), 1.0, 0.01, {10000, 6, 0});

  ChannelSpec trusted;
  trusted.n = 8;
  const auto tc = make_channel(trusted);
  const AuditSuite clean = dp_audit_suite(
      *tc, default_neighbor_pairs(*tc, 6), 1.0, 0.0, {10000, 6, 0});
  std::size_t false_positives = 0;
  for (const auto& v : clean.verdicts) false_positives += v.violation;
  const ExactDpResult alice = exact_view_privacy(trusted, Party::kAlice);
  const ExactDpResult bob = exact_view_privacy(trusted, Party::kBob);
  const bool pass = flagged.any_violation && !clean.any_violation &&
                    alice.satisfies(1.0) && bob.satisfies(1.0);
  return {pass,
          Format("leaky flagged: %s; trusted-laplace: %zu of %zu tests "
                 "flagged, exact loss %.6f (alice) %.6f (bob)",
                 flagged.any_violation ? "yes" : "no", false_positives,
                 clean.verdicts.size(), alice.max_log_ratio,
                 bob.max_log_ratio)};
}

// Revealed-majority F at n = 12: the bound on wrong guesses is checked, and
// G is compared with the exact decision rule. At this n the correct-guess
// bound is negative, so it is checked separately below.
Result PredictorMajority(std::string& detail) {
  using namespace testing;
  const unsigned n = 12;
  const double q = 0.25;
  const double premise = std::abs(ExactPremise(RevealedMajority, n, q));
  const double gamma = std::floor(premise * 1000) / 1000;
  const double wrong_bound = 512 / (n * gamma * gamma) + 1.0 / (2 * n);

  // Exhaustive oracle for the exact rule's wrong-guess rate.
  double exact_wrong = 0;
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    const double w = ProductWeight(z, n, q);
    for (unsigned i = 0; i < n; ++i) {
      const int truth = (z >> i) & 1u ? -1 : 1;
      exact_wrong += w * (ExactRule(ExactMus(RevealedMajority, n, i, z),
                                    gamma) == -truth) / n;
    }
  }

  const PredictorParams p = PredictorParams::for_gamma(gamma, n);
  RandomStream s(77);
  const std::uint64_t pairs = 120;
  std::uint64_t agree = 0, wrong = 0;
  for (std::uint64_t t = 0; t < pairs; ++t) {
    std::uint32_t z = 0;
    for (unsigned j = 0; j < n; ++j) z |= s.bernoulli(q) ? 1u << j : 0u;
    const unsigned i = static_cast<unsigned>(s.uniform_below(n));
    const int truth = (z >> i) & 1u ? -1 : 1;
    const RevealOracle f = [&](const MaskedSigns& r) {
      std::uint32_t signs = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (r.revealed(j) && r.at(j) == -1) signs |= 1u << j;
      }
      return RevealedMajority(PackMask(r.mask()), signs);
    };
    const int g = predictor_g(p, f, i, Unpack(z, n), s);
    agree += g == ExactRule(ExactMus(RevealedMajority, n, i, z), gamma);
    wrong += g == -truth;
  }
  const Interval wrong_ci = clopper_pearson(wrong, pairs);
  const bool pass = premise >= gamma && wrong_ci.high <= wrong_bound &&
                    exact_wrong <= wrong_bound && agree * 100 >= pairs * 95;
  detail = Format("majority n=12: premise %.4f, gamma %.3f, wrong %.4f "
                  "(exact rule %.4f, bound %.1f), agreement %llu/%llu",
                  premise, gamma, wrong_ci.high, exact_wrong, wrong_bound,
                  static_cast<unsigned long long>(agree),
                  static_cast<unsigned long long>(pairs));
  return {pass, detail};
}

// Hardwired-reference F (hardwired-y distinguisher) at n = 2^15, where both
// bounds are nonvacuous: Z differs from the reference w.p. rho per
// coordinate, and F is 1 iff a revealed coordinate differs.
Result PredictorReference(std::string& detail) {
  const std::size_t n = 32768;
  const double rho = 0.2 / n;
  const double gamma = 0.45;
  const double premise = std::abs(testing::MismatchPremise(n, rho));
  const double bad = 512 / (n * gamma * gamma);
  const double correct_bound = gamma / 4 - bad;
  const double wrong_bound = bad + 1.0 / (2 * n);

  const PredictorParams p = PredictorParams::for_gamma(gamma, n);
  RandomStream s(78);
  const std::uint64_t trials = 300;
  std::uint64_t hits = 0, misses = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream trial = s.derive("trial", t);
    const SignVector w = SignVector::uniform(n, trial);
    SignVector z = w;
    for (std::size_t j = 0; j < n; ++j) {
      if (trial.bernoulli(rho)) z.set(j, -z.at(j));
    }
    const auto a = make_distinguisher("hardwired-y", {SignVector(n), w});
    RandomStream coins = trial.derive("coins");
    const SignVector x(n);
    const RevealOracle f = [&](const MaskedSigns& revealed) {
      return a->evaluate(AliceView{x, {}, revealed}, nullptr, coins);
    };
    const std::size_t i = trial.uniform_below(n);
    const int g = predictor_g(p, f, i, z, trial);
    hits += g == z.at(i);
    misses += g == -z.at(i);
  }
  const Interval hit_ci = clopper_pearson(hits, trials);
  const Interval miss_ci = clopper_pearson(misses, trials);
  const bool pass = premise >= gamma && hit_ci.low >= correct_bound &&
                    miss_ci.high <= wrong_bound;
  detail = Format("reference n=%zu: premise %.4f, gamma %.2f, correct lower "
                  "%.4f >= %.4f, wrong upper %.4f <= %.4f",
                  n, premise, gamma, hit_ci.low, correct_bound, miss_ci.high,
                  wrong_bound);
  return {pass, detail};
}

Result Predictor() {
  std::string a, b;
  const bool pass = PredictorMajority(a).pass & PredictorReference(b).pass;
  return {pass, a + "; " + b};
}

Result GlDecoder() {
  const unsigned bits = 32;
  RandomStream s(88);
  const std::uint64_t trials = 1000;
  std::uint64_t recovered = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t secret = s() & 0xffffffffull;
    RandomStream noise = s.derive("noise", t);
    const PredictorOracle pred = [&](std::uint64_t r) {
      const int truth = gl_bits(secret, r);
      return noise.bernoulli(0.9) ? truth : 1 - truth;
    };
    RandomStream coins = s.derive("decode", t);
    recovered += gl_weak_decode(pred, bits, coins) == secret;
  }
  // Binomial prediction: each of 32 votes is right w.p. 0.82.
  double per_bit = 0;
  for (unsigned j = 17; j <= 32; ++j) {
    per_bit += std::exp(std::lgamma(33.0) - std::lgamma(j + 1.0) -
                        std::lgamma(33.0 - j) + j * std::log(0.82) +
                        (32 - j) * std::log(0.18));
  }
  const double rate = static_cast<double>(recovered) / trials;
  return {rate >= 0.99, Format("recovered %llu/%llu (predicted %.4f)",
                               static_cast<unsigned long long>(recovered),
                               static_cast<unsigned long long>(trials),
                               std::pow(per_bit, bits))};
}

Result ParameterChain() {
  const Rational milli(1, 1000);
  const WecTargets t = awec_to_wec_params(milli, milli, milli);
  const Rational lhs = Rational(44) * (t.alpha + t.p);
  const Rational rhs = Rational(1) - t.q;
  const bool pass = t.alpha == Rational::parse("0.002") &&
                    t.p == Rational::parse("0.001") &&
                    t.q == Rational::parse("0.522") &&
                    lhs == Rational::parse("0.132") &&
                    rhs == Rational::parse("0.478") &&
                    ot_feasible(t.alpha, t.p, t.q);
  return {pass, "(" + t.alpha.to_string() + ", " + t.p.to_string() + ", " +
                    t.q.to_string() + "), 44(alpha+p) = " + lhs.to_string() +
                    " <= 1 - q = " + rhs.to_string()};
}

Result KeyAgreementSimulation() {
  const AppendixAReport r = view_equivalence_appendix_a(8, 1.0, {100000, 99, 0});
  return {r.equivalent() && r.broken_detected(),
          Format("TV real/sim %.4f (null %.4f, limit %.2f), broken %.4f "
                 "(floor %.1f)",
                 r.tv_real_sim, r.tv_null, r.tv_limit, r.tv_real_broken,
                 r.broken_floor)};
}

std::string CliReport(std::vector<std::string> args, const char* threads) {
  args.insert(args.end(), {"--threads", threads});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Result Reproducibility() {
  const std::vector<std::vector<std::string>> runs = {
      {"awec", "--trials", "2000", "--seed", "11", "--adversaries",
       "hardwired-y", "exact-o_A"},
      {"wec", "--n", "2000", "--ell", "2", "--trials", "2000", "--seed", "12"},
      {"audit", "--channel", "leaky", "--leak-index", "3", "--delta", "0.01",
       "--trials", "5000", "--seed", "13"},
      {"appendix-a", "--trials", "20000", "--seed", "14"},
      {"attack", "--trials", "100", "--gamma", "0.45", "--seed", "15"},
      {"gl-decode", "--trials", "300", "--seed", "16", "--format", "csv"},
  };
  std::size_t identical = 0;
  std::string mismatched;
  for (const auto& args : runs) {
    const std::string one = CliReport(args, "1");
    const std::string again = CliReport(args, "1");
    const std::string four = CliReport(args, "4");
    if (one == again && one == four && one.rfind("0\n", 0) == 0) {
      ++identical;
    } else {
      mismatched += " " + args.front();
    }
  }
  return {identical == runs.size(),
          Format("%zu/%zu commands byte-identical across reruns and "
                 "--threads 1/4%s",
                 identical, runs.size(),
                 mismatched.empty() ? "" : (";" + mismatched).c_str())};
}

}  // namespace
}  // namespace dpot

int main() {
  using dpot::Result;
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria =
      {
          {"erasure rate", dpot::ErasureRate},
          {"awec accuracy", dpot::AwecAccuracy},
          {"non-erasure identity", dpot::Identity},
          {"bucketing bound", dpot::Bucketing},
          {"conditioning bound", dpot::Conditioning},
          {"dp audit", dpot::Audit},
          {"predictor bounds", dpot::Predictor},
          {"gl weak decoder", dpot::GlDecoder},
          {"parameter chain", dpot::ParameterChain},
          {"key-agreement simulation", dpot::KeyAgreementSimulation},
          {"reproducibility", dpot::Reproducibility},
      };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s criterion %zu (%s): %s [%.1f s]\n",
                r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                r.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !r.pass;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
