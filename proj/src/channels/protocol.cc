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

#include "dpot/channels/protocol.h"

#include <string>

#include "dpot/channels/discrete_laplace.h"
#include "dpot/core/errors.h"

namespace dpot {
namespace {

SignVector PinnedOrUniform(const std::optional<SignVector>& pinned,
                           std::size_t n, RandomStream& stream) {
  if (!pinned) return SignVector::uniform(n, stream);
  if (pinned->size() != n) throw DimensionError("pinned input length mismatch");
  return *pinned;
}

ViewPayload TranscriptView(const PartyState& state) {
  ViewPayload view;
  view.transcript = state.transcript;
  return view;
}

}  // namespace

ChannelSample wrap_protocol(const NextMessageProtocol& protocol, std::size_t n,
                            RandomStream& stream, const PinnedInputs& pinned) {
  if (n == 0) throw ParameterError("wrap_protocol: n must be positive");
  // Consume one word so consecutive calls on the same stream differ.
  const RandomStream base(stream());
  RandomStream input_stream = base.derive("inputs");
  PartyState alice{Party::kAlice, PinnedOrUniform(pinned.x, n, input_stream),
                   {}};
  PartyState bob{Party::kBob, PinnedOrUniform(pinned.y, n, input_stream), {}};
  RandomStream alice_coins = base.derive("alice-coins");
  RandomStream bob_coins = base.derive("bob-coins");

  std::vector<Message> transcript;
  int consecutive_passes = 0;
  std::size_t turn = 0;
  while (consecutive_passes < 2) {
    if (turn >= protocol.max_turns()) {
      throw ProtocolFault(protocol.name() + ": no termination within " +
                              std::to_string(protocol.max_turns()) + " turns",
                          transcript);
    }
    const bool alice_turn = turn % 2 == 0;
    PartyState& speaker = alice_turn ? alice : bob;
    PartyState& listener = alice_turn ? bob : alice;
    std::optional<Message> message = protocol.next_message(
        speaker, alice_turn ? alice_coins : bob_coins);
    ++turn;
    if (!message) {
      ++consecutive_passes;
      continue;
    }
    consecutive_passes = 0;
    message->sender = speaker.role;
    if (!protocol.well_formed(*message)) {
      transcript.push_back(*message);
      throw ProtocolFault(protocol.name() + ": malformed message '" +
                              message->label + "'",
                          transcript);
    }
    transcript.push_back(*message);
    speaker.transcript.push_back(*message);
    listener.transcript.push_back(std::move(*message));
  }

  ChannelSample s;
  s.x = alice.input;
  s.y = bob.input;
  s.u = TranscriptView(alice);
  s.v = TranscriptView(bob);
  if (auto out = protocol.designated_output(bob)) {
    s.v.set(ViewPayload::kOutputKey, *out);
  }
  return s;
}

ClearExchangeLaplaceProtocol::ClearExchangeLaplaceProtocol(double epsilon)
    : epsilon_(epsilon) {
  DiscreteLaplace::for_epsilon(epsilon);  // validates
}

std::optional<Message> ClearExchangeLaplaceProtocol::next_message(
    const PartyState& state, RandomStream& coins) const {
  if (state.role == Party::kAlice) {
    if (!state.transcript.empty()) return std::nullopt;
    Message m;
    m.label = "x";
    m.values.reserve(state.input.size());
    for (int s : state.input.to_signs()) m.values.push_back(s);
    return m;
  }
  // Bob answers once, after A's message.
  if (state.transcript.size() != 1) return std::nullopt;
  const Message& from_alice = state.transcript.front();
  std::vector<int> signs(from_alice.values.begin(), from_alice.values.end());
  const SignVector x = SignVector::from_signs(signs);
  const DiscreteLaplace noise = DiscreteLaplace::for_epsilon(epsilon_);
  Message m;
  m.label = "z";
  m.values = {inner_product(x, state.input) + noise.sample(coins)};
  return m;
}

bool ClearExchangeLaplaceProtocol::well_formed(const Message& message) const {
  if (message.label == "x") {
    for (std::int64_t v : message.values) {
      if (v != 1 && v != -1) return false;
    }
    return true;
  }
  return message.label == "z" && message.values.size() == 1;
}

std::optional<std::int64_t> ClearExchangeLaplaceProtocol::designated_output(
    const PartyState& bob) const {
  for (const Message& m : bob.transcript) {
    if (m.label == "z" && m.sender == Party::kBob) return m.values.front();
  }
  return std::nullopt;
}

}  // namespace dpot
