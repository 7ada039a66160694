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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "dpot/attacks/adversaries.h"
#include "dpot/channels/exact_dp.h"
#include "dpot/cli/cli.h"
#include "dpot/core/errors.h"
#include "dpot/harness/appendix_a.h"
#include "dpot/harness/attack_experiments.h"
#include "dpot/harness/audit.h"
#include "dpot/harness/estimates.h"
#include "dpot/harness/pipeline.h"
#include "dpot/harness/trial_runner.h"
#include "dpot/wec/wec.h"

namespace dpot::cli {
namespace {

struct Outcome {
  Json result;
  std::vector<CsvRow> rows;
  bool gate_pass = true;
  std::string summary;
};

// Registry keys of the given kind; `fallback` when none were requested.
std::vector<std::string> KeysOfKind(const std::vector<std::string>& requested,
                                    const std::vector<std::string>& registry,
                                    std::vector<std::string> fallback) {
  std::vector<std::string> keys;
  for (const auto& k : requested) {
    if (std::find(registry.begin(), registry.end(), k) != registry.end()) {
      keys.push_back(k);
    }
  }
  return keys.empty() ? fallback : keys;
}

RunOptions Run(const ExperimentConfig& c) {
  return {c.resolved_trials(), *c.seed, c.threads};
}

std::string Verdict(bool ok) { return ok ? "pass" : "fail"; }

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

std::string Optional(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "";
}

Outcome Pipeline(const ExperimentConfig& c) {
  PipelineConfig p;
  p.channel = c.channel_spec();
  p.awec = c.awec_params();
  p.distinguishers = KeysOfKind(c.adversaries, distinguisher_keys(),
                                p.distinguishers);
  p.estimators = KeysOfKind(c.adversaries, estimator_keys(), p.estimators);
  p.guessers = KeysOfKind(c.adversaries, guesser_keys(), p.guessers);
  p.run = Run(c);
  const PipelineReport r = pipeline_report(p);
  Outcome o{r.to_json(), r.csv_rows(), r.feasibility.feasible, ""};
  o.summary = "pipeline: ot_feasible=" +
              std::string(r.feasibility.feasible ? "true" : "false") +
              " awec=" + Verdict(r.awec.pass) + " wec=" + Verdict(r.wec.pass) +
              " dp_violation=" + (r.dp_violation() ? "true" : "false");
  return o;
}

Outcome Awec(const ExperimentConfig& c) {
  const auto channel = make_channel(c.channel_spec());
  std::vector<AwecLogRecord> log;
  const AwecCertificate cert = estimate_awec(
      *channel, c.awec_params(),
      KeysOfKind(c.adversaries, distinguisher_keys(), {"constant"}),
      KeysOfKind(c.adversaries, estimator_keys(), {"constant"}), Run(c), {},
      c.trial_log.empty() ? nullptr : &log);
  if (!c.trial_log.empty()) {
    std::ostringstream text;
    text << "trial,erased,o_a,o_b,abs_gap\n";
    for (std::size_t t = 0; t < log.size(); ++t) {
      text << t << ',' << (log[t].erased ? 1 : 0) << ',' << log[t].o_a << ','
           << Optional(log[t].o_b) << ',' << Optional(log[t].abs_gap) << '\n';
    }
    WriteText(c.trial_log, text.str());
  }
  Outcome o{cert.to_json(), cert.csv_rows(), cert.pass, ""};
  o.summary = "awec: " + Verdict(cert.pass) +
              " erasure=" + std::to_string(cert.erasure.point) +
              " alpha=" + std::to_string(cert.alpha.point);
  return o;
}

Outcome Wec(const ExperimentConfig& c) {
  const auto channel = make_channel(c.channel_spec());
  std::vector<WecLogRecord> log;
  const WecCertificate cert = estimate_wec(
      *channel, c.awec_params(),
      KeysOfKind(c.adversaries, distinguisher_keys(), {"constant"}),
      KeysOfKind(c.adversaries, guesser_keys(), {"random-bit"}), Run(c),
      std::nullopt, c.trial_log.empty() ? nullptr : &log);
  if (!c.trial_log.empty()) {
    std::ostringstream text;
    text << "trial,erased,o_a,o_b,s,r_gl,bit_a,bit_b\n";
    for (std::size_t t = 0; t < log.size(); ++t) {
      const WecLogRecord& r = log[t];
      text << t << ',' << (r.awec.erased ? 1 : 0) << ',' << r.awec.o_a << ','
           << Optional(r.awec.o_b) << ',' << r.s << ',' << r.r_gl << ','
           << r.o_a << ',' << (r.o_b ? std::to_string(*r.o_b) : "") << '\n';
    }
    WriteText(c.trial_log, text.str());
  }
  Outcome o{cert.to_json(), cert.csv_rows(), cert.pass, ""};
  o.summary = "wec: " + Verdict(cert.pass) +
              " erasure=" + std::to_string(cert.erasure.point) +
              " alpha=" + std::to_string(cert.alpha.point);
  return o;
}

Outcome Audit(const ExperimentConfig& c) {
  const ChannelSpec spec = c.channel_spec();
  const auto channel = make_channel(spec);
  const RunOptions run = Run(c);
  const AuditSuite suite = dp_audit_suite(
      *channel, default_neighbor_pairs(*channel, run.seed), spec.epsilon,
      spec.delta, run);
  Outcome o{suite.to_json(), suite.csv_rows(), !suite.any_violation, ""};
  if (c.exact) {
    Json exact = Json::object();
    for (Party observer : {Party::kAlice, Party::kBob}) {
      const ExactDpResult r = exact_view_privacy(spec, observer);
      exact[std::string(to_string(observer))] = {
          {"max_log_ratio", std::isinf(r.max_log_ratio)
                                ? Json("inf")
                                : Json(r.max_log_ratio)},
          {"law_pairs", r.law_pairs},
          {"truncated_mass", r.truncated_mass},
          {"satisfies_epsilon", r.satisfies(spec.epsilon)}};
      o.gate_pass = o.gate_pass && r.satisfies(spec.epsilon);
    }
    o.result["exact"] = exact;
  }
  o.summary = "audit: violation=" +
              std::string(suite.any_violation ? "true" : "false") + " over " +
              std::to_string(suite.verdicts.size()) + " tests";
  return o;
}

Outcome Attack(const ExperimentConfig& c) {
  const ChannelSpec spec = c.channel_spec();
  const auto channel = make_channel(spec);
  AttackReport r;
  if (c.attack == "a-tilde") {
    ATildeParams params;
    params.k = c.k.value_or(4);
    params.gamma = c.gamma;
    r = a_tilde_experiment(
        *channel,
        KeysOfKind(c.adversaries, distinguisher_keys(), {"hardwired-y"})
            .front(),
        params, spec.epsilon, spec.delta, Run(c));
  } else {
    r = b_tilde_experiment(
        *channel,
        KeysOfKind(c.adversaries, estimator_keys(), {"exact-o_A"}).front(),
        c.k.value_or(40), ReferenceDistParams{}, spec.epsilon, spec.delta,
        Run(c));
  }
  Outcome o{r.to_json(), r.csv_rows(), !r.verdict.violation, ""};
  o.summary = c.attack + ": violation=" +
              std::string(r.verdict.violation ? "true" : "false") +
              " p_hit=" + std::to_string(r.verdict.p_hit) +
              " p_miss=" + std::to_string(r.verdict.p_miss);
  return o;
}

Outcome AppendixA(const ExperimentConfig& c) {
  const AppendixAReport r =
      view_equivalence_appendix_a(c.resolved_n(), c.epsilon, Run(c));
  Outcome o{r.to_json(), r.csv_rows(),
            r.equivalent() && r.broken_detected(), ""};
  o.summary = "appendix-a: tv=" + std::to_string(r.tv_real_sim) +
              " null_tv=" + std::to_string(r.tv_null) +
              " broken_tv=" + std::to_string(r.tv_real_broken);
  return o;
}

struct RecoveryCounts {
  std::uint64_t recovered = 0;
  void merge(const RecoveryCounts& o) { recovered += o.recovered; }
};

Outcome GlDecode(const ExperimentConfig& c) {
  const RunOptions run = Run(c);
  const unsigned bits = c.bits;
  const std::uint64_t mask = bits == 64 ? ~0ULL : (1ULL << bits) - 1;
  const RecoveryCounts counts = run_trials(
      run.trials, RandomStream(run.seed), "gl-decode", run.threads,
      RecoveryCounts{},
      [&](std::uint64_t, RandomStream& stream, RecoveryCounts& acc) {
        RandomStream secret_stream = stream.derive("secret");
        const std::uint64_t secret = secret_stream() & mask;
        RandomStream noise = stream.derive("oracle");
        const PredictorOracle pred = [&](std::uint64_t r) {
          const int bit = gl_bits(secret, r);
          return noise.bernoulli(c.pred_accuracy) ? bit : 1 - bit;
        };
        RandomStream decoder = stream.derive("decoder");
        if (gl_weak_decode(pred, bits, decoder) == secret) ++acc.recovered;
      });
  const EstimateReport rate = EstimateReport::from_counts(
      "gl.recovery", counts.recovered, run.trials, run.seed);
  Outcome o{Json{{"bits", bits},
                 {"pred_accuracy", c.pred_accuracy},
                 {"recovery", rate.to_json()}},
            {csv_row(rate)},
            rate.point >= 0.99,
            ""};
  o.summary = "gl-decode: recovery=" + std::to_string(rate.point);
  return o;
}

}  // namespace

int execute(ExperimentConfig c, std::ostream& out, std::ostream& err) {
  try {
    c.validate();
    if (!c.seed) {
      c.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
               std::random_device{}();
      err << "seed: " << *c.seed << "\n";
    }
    err << "running " << c.command << " (" << c.resolved_trials()
        << " trials, threads=" << resolve_threads(c.threads) << ")\n";
    Outcome o;
    if (c.command == "pipeline") o = Pipeline(c);
    else if (c.command == "awec") o = Awec(c);
    else if (c.command == "wec") o = Wec(c);
    else if (c.command == "audit") o = Audit(c);
    else if (c.command == "attack") o = Attack(c);
    else if (c.command == "appendix-a") o = AppendixA(c);
    else o = GlDecode(c);

    std::string text;
    if (c.format == "csv") {
      text = "# config " + c.to_json().dump() + "\n" + to_csv(o.rows);
    } else {
      text = to_json_text(
          Json{{"config", c.to_json()}, {"result", std::move(o.result)}});
    }
    if (c.output.empty()) {
      out << text;
    } else {
      WriteText(c.output, text);
    }
    err << o.summary << "\n";
    if (c.gate && !o.gate_pass) return kExitGate;
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFault;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  ParseResult parsed = parse_arguments(args, out, err);
  if (parsed.exit_now) return parsed.exit_code;
  return execute(std::move(parsed.config), out, err);
}

}  // namespace dpot::cli
