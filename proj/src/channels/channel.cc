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

#include "dpot/channels/channel.h"

#include <cmath>
#include <string>

#include "dpot/channels/discrete_laplace.h"
#include "dpot/channels/protocol.h"
#include "dpot/core/errors.h"

namespace dpot {
namespace {

void RequireKind(const ChannelSpec& spec, ChannelKind kind) {
  if (spec.kind != kind) {
    throw ParameterError(std::string("channel spec kind is ") +
                         std::string(to_string(spec.kind)) + ", expected " +
                         std::string(to_string(kind)));
  }
  spec.validate();
}

SignVector InputOrUniform(const std::optional<SignVector>& pinned,
                          std::size_t n, RandomStream& stream) {
  if (pinned) {
    if (pinned->size() != n) {
      throw DimensionError("pinned input has length " +
                           std::to_string(pinned->size()) + ", channel size " +
                           std::to_string(n));
    }
    return *pinned;
  }
  return SignVector::uniform(n, stream);
}

// Probability of keeping a coordinate in randomized response.
double KeepProbability(double epsilon) {
  if (std::isinf(epsilon)) return 1.0;
  return std::exp(epsilon) / (1.0 + std::exp(epsilon));
}

class SpecChannel : public Channel {
 public:
  explicit SpecChannel(ChannelSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
  }

  std::string name() const override {
    return std::string(to_string(spec_.kind));
  }
  std::size_t n() const override { return spec_.n; }
  double epsilon() const override { return spec_.epsilon; }

  ChannelSample sample(RandomStream& stream,
                       const PinnedInputs& pinned) const override {
    switch (spec_.kind) {
      case ChannelKind::kRandomizedResponse:
        return sample_randomized_response(spec_, stream, pinned);
      case ChannelKind::kTrustedLaplace:
        return sample_trusted_laplace(spec_, stream, pinned);
      case ChannelKind::kSplitNoise:
        return sample_split_noise(spec_, stream, pinned);
      case ChannelKind::kLeaky:
        return sample_leaky(spec_, stream, pinned);
      case ChannelKind::kWrappedProtocol:
        break;
    }
    throw ParameterError("SpecChannel: unsupported kind");
  }

 private:
  ChannelSpec spec_;
};

class WrappedProtocolChannel : public Channel {
 public:
  WrappedProtocolChannel(std::shared_ptr<const NextMessageProtocol> protocol,
                         std::size_t n, double epsilon)
      : protocol_(std::move(protocol)), n_(n), epsilon_(epsilon) {}

  std::string name() const override {
    return "wrapped-protocol:" + protocol_->name();
  }
  std::size_t n() const override { return n_; }
  double epsilon() const override { return epsilon_; }

  ChannelSample sample(RandomStream& stream,
                       const PinnedInputs& pinned) const override {
    return wrap_protocol(*protocol_, n_, stream, pinned);
  }

 private:
  std::shared_ptr<const NextMessageProtocol> protocol_;
  std::size_t n_;
  double epsilon_;
};

}  // namespace

std::string_view to_string(Party party) {
  return party == Party::kAlice ? "alice" : "bob";
}

void ViewPayload::set(std::string_view key, std::int64_t value) {
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  fields_.emplace_back(std::string(key), value);
}

std::optional<std::int64_t> ViewPayload::get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kRandomizedResponse:
      return "randomized-response";
    case ChannelKind::kTrustedLaplace:
      return "trusted-laplace";
    case ChannelKind::kSplitNoise:
      return "split-noise";
    case ChannelKind::kLeaky:
      return "leaky";
    case ChannelKind::kWrappedProtocol:
      return "wrapped-protocol";
  }
  return "unknown";
}

ChannelKind parse_channel_kind(std::string_view name) {
  for (ChannelKind kind :
       {ChannelKind::kRandomizedResponse, ChannelKind::kTrustedLaplace,
        ChannelKind::kSplitNoise, ChannelKind::kLeaky,
        ChannelKind::kWrappedProtocol}) {
    if (to_string(kind) == name) return kind;
  }
  throw ConfigError("unknown channel kind '" + std::string(name) + "'");
}

void ChannelSpec::validate() const {
  if (n == 0) throw ParameterError("channel size n must be at least 1");
  if (std::isnan(epsilon) || epsilon < 0) {
    throw ParameterError("epsilon must be >= 0");
  }
  if (std::isnan(delta) || delta < 0 || delta >= 1) {
    throw ParameterError("delta must lie in [0, 1)");
  }
  if (kind == ChannelKind::kLeaky) {
    if (!leak_index) throw ParameterError("leaky channel needs a leak index");
    if (*leak_index >= n) {
      throw IndexError("leak index " + std::to_string(*leak_index) +
                       " out of range for n = " + std::to_string(n));
    }
  }
}

ChannelSample sample_randomized_response(const ChannelSpec& spec,
                                         RandomStream& stream,
                                         const PinnedInputs& pinned) {
  RequireKind(spec, ChannelKind::kRandomizedResponse);
  if (spec.epsilon == 0) {
    throw ParameterError(
        "randomized response at epsilon = 0 has no unbiased estimator "
        "(2p - 1 = 0)");
  }
  const double p = KeepProbability(spec.epsilon);
  ChannelSample s;
  s.x = InputOrUniform(pinned.x, spec.n, stream);
  s.y = InputOrUniform(pinned.y, spec.n, stream);
  SignVector noisy = s.x;
  if (p < 1.0) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (!stream.bernoulli(p)) noisy.set_bit(i, !noisy.bit(i));
    }
  }
  const double raw = static_cast<double>(inner_product(noisy, s.y));
  s.v.signs = std::move(noisy);
  s.v.set(ViewPayload::kOutputKey, std::llround(raw / (2.0 * p - 1.0)));
  return s;
}

ChannelSample sample_trusted_laplace(const ChannelSpec& spec,
                                     RandomStream& stream,
                                     const PinnedInputs& pinned) {
  RequireKind(spec, ChannelKind::kTrustedLaplace);
  const DiscreteLaplace noise = DiscreteLaplace::for_epsilon(spec.epsilon);
  ChannelSample s;
  s.x = InputOrUniform(pinned.x, spec.n, stream);
  s.y = InputOrUniform(pinned.y, spec.n, stream);
  const std::int64_t z = inner_product(s.x, s.y) + noise.sample(stream);
  s.u.set(view_keys::kEstimate, z);
  s.v.set(view_keys::kEstimate, z);
  s.v.set(ViewPayload::kOutputKey, z);
  return s;
}

ChannelSample sample_split_noise(const ChannelSpec& spec, RandomStream& stream,
                                 const PinnedInputs& pinned) {
  RequireKind(spec, ChannelKind::kSplitNoise);
  const DiscreteLaplace noise = DiscreteLaplace::for_epsilon(spec.epsilon);
  ChannelSample s;
  s.x = InputOrUniform(pinned.x, spec.n, stream);
  s.y = InputOrUniform(pinned.y, spec.n, stream);
  const std::int64_t e_a = noise.sample(stream);
  const std::int64_t e_b = noise.sample(stream);
  const std::int64_t z = inner_product(s.x, s.y) + e_a + e_b;
  s.u.set(view_keys::kEstimate, z);
  s.u.set(view_keys::kOwnNoise, e_a);
  s.v.set(view_keys::kEstimate, z);
  s.v.set(view_keys::kOwnNoise, e_b);
  s.v.set(ViewPayload::kOutputKey, z);
  return s;
}

ChannelSample sample_leaky(const ChannelSpec& spec, RandomStream& stream,
                           const PinnedInputs& pinned) {
  RequireKind(spec, ChannelKind::kLeaky);
  ChannelSpec laplace = spec;
  laplace.kind = ChannelKind::kTrustedLaplace;
  laplace.leak_index.reset();
  ChannelSample s = sample_trusted_laplace(laplace, stream, pinned);
  const std::size_t j = *spec.leak_index;
  s.u.set(view_keys::kLeakIndex, static_cast<std::int64_t>(j));
  s.u.set(view_keys::kLeakValue, s.y.at(j));
  return s;
}

std::unique_ptr<Channel> make_channel(const ChannelSpec& spec) {
  spec.validate();
  if (spec.kind == ChannelKind::kWrappedProtocol) {
    return std::make_unique<WrappedProtocolChannel>(
        std::make_shared<ClearExchangeLaplaceProtocol>(spec.epsilon), spec.n,
        spec.epsilon);
  }
  return std::make_unique<SpecChannel>(spec);
}

}  // namespace dpot
