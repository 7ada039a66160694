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

#include "dpot/harness/audit.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "dpot/core/errors.h"
#include "dpot/harness/trial_runner.h"

namespace dpot {
namespace {

struct HitCounts {
  std::uint64_t hits = 0;
  void merge(const HitCounts& o) { hits += o.hits; }
};

std::optional<std::int64_t> Estimate(const ViewPayload& view) {
  if (auto z = view.get(view_keys::kEstimate)) return z;
  return view.designated_output();
}

class ThresholdTest : public ViewTest {
 public:
  ThresholdTest(std::int64_t theta, bool upper)
      : theta_(theta), upper_(upper) {}
  std::string name() const override {
    return std::string(upper_ ? "z>=" : "z<=") + std::to_string(theta_);
  }
  bool accept(const SignVector&, const ViewPayload& view) const override {
    const auto z = Estimate(view);
    if (!z) return false;
    return upper_ ? *z >= theta_ : *z <= theta_;
  }

 private:
  std::int64_t theta_;
  bool upper_;
};

class LeakedBitTest : public ViewTest {
 public:
  std::string name() const override { return "leaked-bit"; }
  bool accept(const SignVector&, const ViewPayload& view) const override {
    const auto bit = view.get(view_keys::kLeakValue);
    return bit && *bit == 1;
  }
};

class NoisySignTest : public ViewTest {
 public:
  explicit NoisySignTest(std::size_t index) : index_(index) {}
  std::string name() const override {
    return "noisy-sign@" + std::to_string(index_);
  }
  bool accept(const SignVector&, const ViewPayload& view) const override {
    return view.signs && index_ < view.signs->size() &&
           view.signs->at(index_) == 1;
  }

 private:
  std::size_t index_;
};

class TranscriptSignTest : public ViewTest {
 public:
  TranscriptSignTest(std::size_t index, Party observer)
      : index_(index), observer_(observer) {}
  std::string name() const override {
    return "transcript-sign@" + std::to_string(index_);
  }
  bool accept(const SignVector&, const ViewPayload& view) const override {
    for (const Message& m : view.transcript) {
      if (m.sender != observer_ && index_ < m.values.size() &&
          m.values[index_] == 1) {
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t index_;
  Party observer_;
};

std::uint64_t Accepts(const Channel& channel, const ViewTest& test,
                      const PinnedInputs& pinned, Party observer,
                      const RunOptions& run, const char* label) {
  const RandomStream root(run.seed);
  return run_trials(run.trials, root, label, run.threads, HitCounts{},
                    [&](std::uint64_t, RandomStream& stream, HitCounts& acc) {
                      const ChannelSample s = channel.sample(stream, pinned);
                      const bool a = observer == Party::kAlice
                                         ? test.accept(s.x, s.u)
                                         : test.accept(s.y, s.v);
                      if (a) ++acc.hits;
                    })
      .hits;
}

bool Violates(const Interval& a, const Interval& b, double eps, double delta) {
  return a.low > std::exp(eps) * b.high + delta;
}

}  // namespace

void NeighborPair::validate() const {
  if (left.size() != right.size() || left.size() != fixed.size()) {
    throw DimensionError("neighbor pair inputs have mismatched lengths");
  }
  if (count_flipped(left, right) != 1) {
    throw ParameterError("inputs are not neighbors: they differ in " +
                         std::to_string(count_flipped(left, right)) +
                         " coordinates");
  }
}

std::size_t NeighborPair::differing_index() const {
  validate();
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left.at(i) != right.at(i)) return i;
  }
  return 0;  // unreachable after validate()
}

PinnedInputs NeighborPair::pinned_left() const {
  return varied == Party::kAlice ? PinnedInputs{left, fixed}
                                 : PinnedInputs{fixed, left};
}

PinnedInputs NeighborPair::pinned_right() const {
  return varied == Party::kAlice ? PinnedInputs{right, fixed}
                                 : PinnedInputs{fixed, right};
}

NeighborPair NeighborPair::flip(Party varied, SignVector fixed,
                                const SignVector& base_varied,
                                std::size_t index) {
  NeighborPair pair{varied, std::move(fixed), base_varied,
                    flip_at(base_varied, index)};
  pair.validate();
  return pair;
}

std::unique_ptr<ViewTest> make_threshold_test(std::int64_t theta, bool upper) {
  return std::make_unique<ThresholdTest>(theta, upper);
}

std::unique_ptr<ViewTest> make_leaked_bit_test() {
  return std::make_unique<LeakedBitTest>();
}

std::unique_ptr<ViewTest> make_noisy_sign_test(std::size_t index) {
  return std::make_unique<NoisySignTest>(index);
}

std::unique_ptr<ViewTest> make_transcript_sign_test(std::size_t index,
                                                    Party observer) {
  return std::make_unique<TranscriptSignTest>(index, observer);
}

std::vector<std::unique_ptr<ViewTest>> builtin_view_tests(
    const NeighborPair& pair) {
  const std::size_t i = pair.differing_index();
  const bool alice = pair.varied == Party::kAlice;
  const std::int64_t a_left = alice ? inner_product(pair.left, pair.fixed)
                                    : inner_product(pair.fixed, pair.left);
  const std::int64_t a_right = alice ? inner_product(pair.right, pair.fixed)
                                     : inner_product(pair.fixed, pair.right);
  std::vector<std::unique_ptr<ViewTest>> tests;
  for (std::int64_t theta : std::set<std::int64_t>{a_left, a_right}) {
    tests.push_back(make_threshold_test(theta, true));
    tests.push_back(make_threshold_test(theta, false));
  }
  tests.push_back(make_leaked_bit_test());
  tests.push_back(make_noisy_sign_test(i));
  tests.push_back(make_transcript_sign_test(i, pair.observer()));
  return tests;
}

Json AuditVerdict::to_json() const {
  return Json{{"test", test},
              {"varied", varied},
              {"index", index},
              {"left", left.to_json()},
              {"right", right.to_json()},
              {"epsilon", epsilon},
              {"delta", delta},
              {"violation", violation}};
}

AuditVerdict dp_audit(const Channel& channel, const ViewTest& test,
                      const NeighborPair& pair, double epsilon, double delta,
                      const RunOptions& run) {
  pair.validate();
  if (run.trials == 0) throw ConfigError("trials must be at least 1");
  if (pair.fixed.size() != channel.n()) {
    throw DimensionError("neighbor pair length does not match the channel");
  }
  AuditVerdict v;
  v.test = test.name();
  v.varied = std::string(to_string(pair.varied));
  v.index = pair.differing_index();
  v.epsilon = epsilon;
  v.delta = delta;
  const Party observer = pair.observer();
  v.left = EstimateReport::from_counts(
      "accept_left",
      Accepts(channel, test, pair.pinned_left(), observer, run, "left"),
      run.trials, run.seed);
  v.right = EstimateReport::from_counts(
      "accept_right",
      Accepts(channel, test, pair.pinned_right(), observer, run, "right"),
      run.trials, run.seed);
  v.violation =
      Violates(v.left.interval(), v.right.interval(), epsilon, delta) ||
      Violates(v.right.interval(), v.left.interval(), epsilon, delta);
  return v;
}

Json AuditSuite::to_json() const {
  Json j{{"any_violation", any_violation}, {"verdicts", Json::array()}};
  for (const auto& v : verdicts) j["verdicts"].push_back(v.to_json());
  return j;
}

std::vector<CsvRow> AuditSuite::csv_rows() const {
  std::vector<CsvRow> rows;
  for (const auto& v : verdicts) {
    const std::string prefix = "audit." + v.varied + "." +
                               std::to_string(v.index) + "." + v.test + ".";
    rows.push_back(csv_row(v.left, prefix));
    rows.push_back(csv_row(v.right, prefix));
  }
  return rows;
}

AuditSuite dp_audit_suite(const Channel& channel,
                          const std::vector<NeighborPair>& pairs,
                          double epsilon, double delta, const RunOptions& run) {
  AuditSuite suite;
  const RandomStream root(run.seed);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto tests = builtin_view_tests(pairs[p]);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      RunOptions sub = run;
      sub.seed = root.derive("pair", p).derive("test", t).seed();
      suite.verdicts.push_back(
          dp_audit(channel, *tests[t], pairs[p], epsilon, delta, sub));
      suite.any_violation |= suite.verdicts.back().violation;
    }
  }
  return suite;
}

std::vector<NeighborPair> default_neighbor_pairs(const Channel& channel,
                                                 std::uint64_t seed) {
  RandomStream stream = RandomStream(seed).derive("neighbors");
  const SignVector x = SignVector::uniform(channel.n(), stream);
  const SignVector y = SignVector::uniform(channel.n(), stream);
  std::set<std::size_t> coords{0};
  RandomStream probe = stream.derive("probe");
  const ChannelSample s = channel.sample(probe, PinnedInputs{x, y});
  for (const ViewPayload* view : {&s.u, &s.v}) {
    if (auto j = view->get(view_keys::kLeakIndex)) {
      coords.insert(static_cast<std::size_t>(*j));
    }
  }
  std::vector<NeighborPair> pairs;
  for (std::size_t i : coords) {
    pairs.push_back(NeighborPair::flip(Party::kBob, x, y, i));
    pairs.push_back(NeighborPair::flip(Party::kAlice, y, x, i));
  }
  return pairs;
}

}  // namespace dpot
