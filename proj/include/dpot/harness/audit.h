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

#ifndef DPOT_HARNESS_AUDIT_H_
#define DPOT_HARNESS_AUDIT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dpot/channels/channel.h"
#include "dpot/harness/estimates.h"
#include "dpot/harness/report.h"

namespace dpot {

// Two inputs of one party that differ in exactly one coordinate; the other
// party's input is held fixed. The observer is the party whose input is not
// varied.
struct NeighborPair {
  Party varied = Party::kBob;
  SignVector fixed;
  SignVector left;
  SignVector right;

  // Throws DimensionError on length mismatch and ParameterError unless left
  // and right differ in exactly one coordinate.
  void validate() const;
  std::size_t differing_index() const;
  Party observer() const {
    return varied == Party::kAlice ? Party::kBob : Party::kAlice;
  }
  PinnedInputs pinned_left() const;
  PinnedInputs pinned_right() const;

  // Pair that flips coordinate `index` of `base_varied`.
  static NeighborPair flip(Party varied, SignVector fixed,
                           const SignVector& base_varied, std::size_t index);
};

// A test sees the observer's input and channel payload only.
class ViewTest {
 public:
  virtual ~ViewTest() = default;
  virtual std::string name() const = 0;
  virtual bool accept(const SignVector& own_input,
                      const ViewPayload& view) const = 0;
};

// z >= theta (or z <= theta) on the estimate field, falling back to the
// designated output when the view has no estimate.
std::unique_ptr<ViewTest> make_threshold_test(std::int64_t theta, bool upper);
// Accepts iff the view carries a leaked bit equal to +1.
std::unique_ptr<ViewTest> make_leaked_bit_test();
// Accepts iff the noisy signs in the view are +1 at `index`.
std::unique_ptr<ViewTest> make_noisy_sign_test(std::size_t index);
// Accepts iff some message sent by the other party has value +1 at `index`.
std::unique_ptr<ViewTest> make_transcript_sign_test(std::size_t index,
                                                    Party observer);

// The built-in test set for one pair: thresholds at both neighboring means in
// both directions, the leaked bit, and the noisy or transcript sign at the
// varied index.
std::vector<std::unique_ptr<ViewTest>> builtin_view_tests(
    const NeighborPair& pair);

struct AuditVerdict {
  std::string test;
  std::string varied;
  std::size_t index = 0;
  EstimateReport left;   // P[T = 1] on the left input
  EstimateReport right;  // P[T = 1] on the right input
  double epsilon = 0;
  double delta = 0;
  bool violation = false;  // in either orientation

  Json to_json() const;
};

// Estimates both acceptance probabilities with `run.trials` draws each and
// flags a violation iff lower(one side) > e^eps * upper(other side) + delta.
AuditVerdict dp_audit(const Channel& channel, const ViewTest& test,
                      const NeighborPair& pair, double epsilon, double delta,
                      const RunOptions& run);

struct AuditSuite {
  std::vector<AuditVerdict> verdicts;
  bool any_violation = false;

  Json to_json() const;
  std::vector<CsvRow> csv_rows() const;
};

// Runs every built-in test on every pair. Each pair/test combination gets its
// own seed derived from run.seed.
AuditSuite dp_audit_suite(const Channel& channel,
                          const std::vector<NeighborPair>& pairs,
                          double epsilon, double delta, const RunOptions& run);

// Default pairs: uniform base inputs; flips of coordinate 0 and of any
// advertised leak coordinate, for both parties.
std::vector<NeighborPair> default_neighbor_pairs(const Channel& channel,
                                                 std::uint64_t seed);

}  // namespace dpot

#endif  // DPOT_HARNESS_AUDIT_H_
