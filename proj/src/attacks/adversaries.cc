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

#include "dpot/attacks/adversaries.h"

#include <algorithm>
#include <utility>

#include "dpot/channels/channel.h"
#include "dpot/core/errors.h"

namespace dpot {
namespace {

class ConstantDistinguisher : public Distinguisher {
 public:
  std::string name() const override { return "constant"; }
  int evaluate(const AliceView&, const WecExtension*,
               RandomStream&) const override {
    return 0;
  }
};

class RandomBitDistinguisher : public Distinguisher {
 public:
  std::string name() const override { return "random-bit"; }
  int evaluate(const AliceView&, const WecExtension*,
               RandomStream& coins) const override {
    return coins.fair_coin() ? 1 : 0;
  }
};

// Uses a coordinate of y leaked through u: when that coordinate is among the
// revealed y-hat and disagrees with the leak, B must have resampled it.
class LeakyCoordinateDistinguisher : public Distinguisher {
 public:
  std::string name() const override { return "leaky-coordinate"; }
  int evaluate(const AliceView& view, const WecExtension*,
               RandomStream&) const override {
    const auto j = view.u.get(view_keys::kLeakIndex);
    const auto leaked = view.u.get(view_keys::kLeakValue);
    if (!j || !leaked) return 0;
    const auto idx = static_cast<std::size_t>(*j);
    if (idx >= view.y_hat.size() || !view.y_hat.revealed(idx)) return 0;
    return view.y_hat.at(idx) != *leaked ? 1 : 0;
  }
};

class RevealedMajorityDistinguisher : public Distinguisher {
 public:
  std::string name() const override { return "revealed-majority"; }
  int evaluate(const AliceView& view, const WecExtension*,
               RandomStream&) const override {
    return view.y_hat.sum() >= 0 ? 1 : 0;
  }
};

// Outputs 1 iff some revealed coordinate differs from a hardwired y.
class HardwiredYDistinguisher : public Distinguisher {
 public:
  explicit HardwiredYDistinguisher(SignVector y) : y_(std::move(y)) {}
  std::string name() const override { return "hardwired-y"; }
  int evaluate(const AliceView& view, const WecExtension*,
               RandomStream&) const override {
    if (y_.size() != view.y_hat.size()) return 0;
    const MaskedSigns reference(y_, view.y_hat.mask());
    return reference == view.y_hat ? 0 : 1;
  }

 private:
  SignVector y_;
};

class ConstantEstimator : public Estimator {
 public:
  std::string name() const override { return "constant"; }
  std::int64_t evaluate(const BobView&, RandomStream&) const override {
    return 0;
  }
};

// <x_{-r}, y-tilde_{-r}> with a hardwired x: recovers o_A exactly.
class ExactOAEstimator : public Estimator {
 public:
  explicit ExactOAEstimator(SignVector x) : x_(std::move(x)) {}
  std::string name() const override { return "exact-o_A"; }
  std::int64_t evaluate(const BobView& view, RandomStream&) const override {
    const SignVector& y_hat = view.y_tilde ? *view.y_tilde : view.y;
    if (x_.size() != y_hat.size()) return 0;
    return MaskedSigns(y_hat, view.r().complement()).inner_product(x_);
  }

 private:
  SignVector x_;
};

// What B would have output without erasure: out(v) - <x_r, y_r>.
class BobResidualEstimator : public Estimator {
 public:
  std::string name() const override { return "bob-residual"; }
  std::int64_t evaluate(const BobView& view, RandomStream&) const override {
    const auto out = view.v.designated_output();
    if (!out) return 0;
    return *out - view.x_r.inner_product(view.y);
  }
};

class ConstantGuesser : public Guesser {
 public:
  std::string name() const override { return "constant"; }
  int evaluate(const BobView&, const WecExtension&,
               RandomStream&) const override {
    return 0;
  }
};

class RandomBitGuesser : public Guesser {
 public:
  std::string name() const override { return "random-bit"; }
  int evaluate(const BobView&, const WecExtension&,
               RandomStream& coins) const override {
    return coins.fair_coin() ? 1 : 0;
  }
};

class RenamedGuesser : public EstimatorGuesser {
 public:
  RenamedGuesser(std::string name, std::unique_ptr<Estimator> estimator)
      : EstimatorGuesser(std::move(estimator)), name_(std::move(name)) {}
  std::string name() const override { return name_; }

 private:
  std::string name_;
};

[[noreturn]] void UnknownKey(std::string_view kind, std::string_view key) {
  throw ConfigError("unknown " + std::string(kind) + " '" + std::string(key) +
                    "'");
}

}  // namespace

EstimatorGuesser::EstimatorGuesser(std::unique_ptr<Estimator> estimator)
    : estimator_(std::move(estimator)) {}

int EstimatorGuesser::evaluate(const BobView& view, const WecExtension& wec,
                               RandomStream& coins) const {
  const BucketParams& p = *wec.params;
  const std::int64_t estimate =
      std::clamp(estimator_->evaluate(view, coins), -p.n, p.n);
  return gl_predicate(bucket(estimate, wec.s, p.ell), wec.r_gl, p);
}

std::vector<std::string> distinguisher_keys() {
  return {"constant", "random-bit", "leaky-coordinate", "revealed-majority",
          "hardwired-y"};
}

std::vector<std::string> estimator_keys() {
  return {"constant", "exact-o_A", "bob-residual"};
}

std::vector<std::string> guesser_keys() {
  return {"constant", "random-bit", "blind", "exact-o_A", "bob-residual"};
}

bool is_adversary_key(std::string_view key) {
  for (const auto& keys : {distinguisher_keys(), estimator_keys(),
                           guesser_keys()}) {
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) return true;
  }
  return false;
}

std::unique_ptr<Distinguisher> make_distinguisher(std::string_view key,
                                                  const Advice& advice) {
  if (key == "constant") return std::make_unique<ConstantDistinguisher>();
  if (key == "random-bit") return std::make_unique<RandomBitDistinguisher>();
  if (key == "leaky-coordinate") {
    return std::make_unique<LeakyCoordinateDistinguisher>();
  }
  if (key == "revealed-majority") {
    return std::make_unique<RevealedMajorityDistinguisher>();
  }
  if (key == "hardwired-y") {
    return std::make_unique<HardwiredYDistinguisher>(advice.y);
  }
  UnknownKey("distinguisher", key);
}

std::unique_ptr<Estimator> make_estimator(std::string_view key,
                                          const Advice& advice) {
  if (key == "constant") return std::make_unique<ConstantEstimator>();
  if (key == "exact-o_A") return std::make_unique<ExactOAEstimator>(advice.x);
  if (key == "bob-residual") return std::make_unique<BobResidualEstimator>();
  UnknownKey("estimator", key);
}

std::unique_ptr<Guesser> make_guesser(std::string_view key,
                                      const Advice& advice) {
  if (key == "constant") return std::make_unique<ConstantGuesser>();
  if (key == "random-bit") return std::make_unique<RandomBitGuesser>();
  if (key == "blind") {
    return std::make_unique<RenamedGuesser>(
        "blind", std::make_unique<ConstantEstimator>());
  }
  if (key == "exact-o_A" || key == "bob-residual") {
    return std::make_unique<EstimatorGuesser>(make_estimator(key, advice));
  }
  UnknownKey("guesser", key);
}

}  // namespace dpot
