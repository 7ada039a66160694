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

#ifndef DPOT_CHANNELS_PROTOCOL_H_
#define DPOT_CHANNELS_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpot/channels/channel.h"
#include "dpot/core/random_stream.h"

namespace dpot {

// A party's state during a protocol run: its private input and every message
// sent or received so far, in order.
struct PartyState {
  Party role = Party::kAlice;
  SignVector input;
  std::vector<Message> transcript;
};

// A two-party protocol given by its next-message function.
//
// Turns alternate A, B, A, ... starting with A. A party with nothing to say
// returns std::nullopt; the run ends once both parties pass in a row.
class NextMessageProtocol {
 public:
  virtual ~NextMessageProtocol() = default;

  virtual std::string name() const = 0;
  virtual std::optional<Message> next_message(const PartyState& state,
                                              RandomStream& coins) const = 0;
  // Structural check on an emitted message.
  virtual bool well_formed(const Message& message) const {
    (void)message;
    return true;
  }
  // out(v), computed from B's final state.
  virtual std::optional<std::int64_t> designated_output(
      const PartyState& bob) const = 0;
  // Turn budget; exceeding it is reported as a deadlock.
  virtual std::size_t max_turns() const { return 64; }
};

class ProtocolFault : public std::runtime_error {
 public:
  ProtocolFault(const std::string& what, std::vector<Message> partial)
      : std::runtime_error(what), partial_transcript_(std::move(partial)) {}

  const std::vector<Message>& partial_transcript() const {
    return partial_transcript_;
  }

 private:
  std::vector<Message> partial_transcript_;
};

// Runs the protocol on uniform inputs (unless pinned) and returns the induced
// channel sample: each party's input as its local output and its full
// transcript as its view. out(v) is the protocol's designated output.
ChannelSample wrap_protocol(const NextMessageProtocol& protocol, std::size_t n,
                            RandomStream& stream,
                            const PinnedInputs& pinned = {});

// Reference protocol for exercising the wrapper: A sends x in the clear,
// B replies with z = <x, y> + DiscreteLaplace(2 / eps). The output
// distribution matches trusted-laplace. A's input is not protected.
class ClearExchangeLaplaceProtocol : public NextMessageProtocol {
 public:
  explicit ClearExchangeLaplaceProtocol(double epsilon);

  std::string name() const override { return "clear-exchange-laplace"; }
  std::optional<Message> next_message(const PartyState& state,
                                      RandomStream& coins) const override;
  bool well_formed(const Message& message) const override;
  std::optional<std::int64_t> designated_output(
      const PartyState& bob) const override;

 private:
  double epsilon_;
};

}  // namespace dpot

#endif  // DPOT_CHANNELS_PROTOCOL_H_
