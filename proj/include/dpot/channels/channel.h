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

#ifndef DPOT_CHANNELS_CHANNEL_H_
#define DPOT_CHANNELS_CHANNEL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpot/core/random_stream.h"
#include "dpot/core/sign_vector.h"

namespace dpot {

enum class Party { kAlice, kBob };

std::string_view to_string(Party party);

// One message of a two-party transcript.
struct Message {
  Party sender = Party::kAlice;
  std::string label;
  std::vector<std::int64_t> values;

  friend bool operator==(const Message&, const Message&) = default;
};

// What a party observes from a channel beyond its own input: named integer
// fields, optionally a sign string (randomized response), and a transcript
// when the channel is backed by a protocol.
class ViewPayload {
 public:
  static constexpr std::string_view kOutputKey = "out";

  void set(std::string_view key, std::int64_t value);
  std::optional<std::int64_t> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::int64_t>>& fields() const {
    return fields_;
  }

  // Designated output out(v), when the channel defines one.
  std::optional<std::int64_t> designated_output() const {
    return get(kOutputKey);
  }

  std::optional<SignVector> signs;
  std::vector<Message> transcript;

  friend bool operator==(const ViewPayload&, const ViewPayload&) = default;

 private:
  std::vector<std::pair<std::string, std::int64_t>> fields_;
};

// ((x, u), (y, v)) with out(v) stored inside v.
struct ChannelSample {
  SignVector x;
  ViewPayload u;
  SignVector y;
  ViewPayload v;

  std::optional<std::int64_t> out_v() const { return v.designated_output(); }
};

enum class ChannelKind {
  kRandomizedResponse,
  kTrustedLaplace,
  kSplitNoise,
  kLeaky,
  kWrappedProtocol,
};

std::string_view to_string(ChannelKind kind);
// Accepts the names printed by to_string ("trusted-laplace", ...).
ChannelKind parse_channel_kind(std::string_view name);

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kTrustedLaplace;
  std::size_t n = 1;
  double epsilon = 1.0;  // nats; +infinity is allowed for randomized response
  double delta = 0.0;
  // Leaky channel: coordinate of y disclosed to A (0-based).
  std::optional<std::size_t> leak_index;

  // Throws ParameterError on epsilon < 0, delta outside [0,1), n == 0.
  void validate() const;
};

// Inputs fixed by the caller instead of sampled uniformly. Used by DP audits.
struct PinnedInputs {
  std::optional<SignVector> x;
  std::optional<SignVector> y;
};

// Sampler interface. Implementations are immutable and safe to share across
// threads; randomness comes only from the stream argument.
class Channel {
 public:
  virtual ~Channel() = default;

  virtual std::string name() const = 0;
  virtual std::size_t n() const = 0;
  virtual double epsilon() const = 0;
  virtual bool has_designated_output() const { return true; }
  virtual ChannelSample sample(RandomStream& stream,
                               const PinnedInputs& pinned = {}) const = 0;
};

// A: x uniform, sends x~ with each coordinate kept w.p. e^eps / (1 + e^eps).
// B: v = x~, out = round(<x~, y> / (2p - 1)).
ChannelSample sample_randomized_response(const ChannelSpec& spec,
                                         RandomStream& stream,
                                         const PinnedInputs& pinned = {});

// z = <x, y> + DiscreteLaplace(2 / eps); both parties see z.
ChannelSample sample_trusted_laplace(const ChannelSpec& spec,
                                     RandomStream& stream,
                                     const PinnedInputs& pinned = {});

// z = <x, y> + e_A + e_B; A sees (z, e_A), B sees (z, e_B).
ChannelSample sample_split_noise(const ChannelSpec& spec, RandomStream& stream,
                                 const PinnedInputs& pinned = {});

// trusted-laplace, except u also carries y_j in the clear.
ChannelSample sample_leaky(const ChannelSpec& spec, RandomStream& stream,
                           const PinnedInputs& pinned = {});

// Field names used inside view payloads.
namespace view_keys {
inline constexpr std::string_view kEstimate = "z";
inline constexpr std::string_view kOwnNoise = "e";
inline constexpr std::string_view kLeakIndex = "leak_index";
inline constexpr std::string_view kLeakValue = "leak_value";
}  // namespace view_keys

// Builds the sampler for spec. kWrappedProtocol wraps the built-in
// clear-exchange Laplace protocol (see protocol.h).
std::unique_ptr<Channel> make_channel(const ChannelSpec& spec);

}  // namespace dpot

#endif  // DPOT_CHANNELS_CHANNEL_H_
