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

#ifndef DPOT_ATTACKS_ADVERSARIES_H_
#define DPOT_ATTACKS_ADVERSARIES_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dpot/awec/awec.h"
#include "dpot/core/random_stream.h"
#include "dpot/wec/wec.h"

namespace dpot {

// Sign guesses use +1 / -1; kAbstain is the "no answer" symbol.
inline constexpr int kAbstain = 0;

// The public values the WEC layer adds to both views.
struct WecExtension {
  std::int64_t s = 1;
  std::uint64_t r_gl = 0;
  const BucketParams* params = nullptr;
};

// Reads A's view and outputs a bit. `wec` is non-null for WEC views.
class Distinguisher {
 public:
  virtual ~Distinguisher() = default;
  virtual std::string name() const = 0;
  // Safe to call concurrently from several threads.
  virtual bool reentrant() const { return true; }
  virtual int evaluate(const AliceView& view, const WecExtension* wec,
                       RandomStream& coins) const = 0;
};

// Reads B's view and estimates o_A.
class Estimator {
 public:
  virtual ~Estimator() = default;
  virtual std::string name() const = 0;
  virtual bool reentrant() const { return true; }
  virtual std::int64_t evaluate(const BobView& view,
                                RandomStream& coins) const = 0;
};

// Reads B's WEC view and guesses the bit o-hat_A.
class Guesser {
 public:
  virtual ~Guesser() = default;
  virtual std::string name() const = 0;
  virtual bool reentrant() const { return true; }
  virtual int evaluate(const BobView& view, const WecExtension& wec,
                       RandomStream& coins) const = 0;
};

// Hidden values some built-in adversaries are allowed to hardwire. They model
// non-uniform advice: an adversary built from the advice of one trial is
// used only in that trial.
struct Advice {
  SignVector x;
  SignVector y;
};

// Guesser that buckets an estimate of o_A and applies the public predicate.
class EstimatorGuesser : public Guesser {
 public:
  explicit EstimatorGuesser(std::unique_ptr<Estimator> estimator);
  std::string name() const override { return estimator_->name(); }
  bool reentrant() const override { return estimator_->reentrant(); }
  int evaluate(const BobView& view, const WecExtension& wec,
               RandomStream& coins) const override;

 private:
  std::unique_ptr<Estimator> estimator_;
};

// Registry of built-in adversaries, addressed by string key.
//
// Distinguishers: constant, random-bit, leaky-coordinate, revealed-majority,
//   hardwired-y.
// Estimators: constant, exact-o_A, bob-residual.
// Guessers: constant, random-bit, blind, exact-o_A, bob-residual.
std::vector<std::string> distinguisher_keys();
std::vector<std::string> estimator_keys();
std::vector<std::string> guesser_keys();
bool is_adversary_key(std::string_view key);

// Throw ConfigError for unknown keys.
std::unique_ptr<Distinguisher> make_distinguisher(std::string_view key,
                                                  const Advice& advice);
std::unique_ptr<Estimator> make_estimator(std::string_view key,
                                          const Advice& advice);
std::unique_ptr<Guesser> make_guesser(std::string_view key,
                                      const Advice& advice);

}  // namespace dpot

#endif  // DPOT_ATTACKS_ADVERSARIES_H_
