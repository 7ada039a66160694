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

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "dpot/channels/channel.h"
#include "dpot/channels/discrete_laplace.h"
#include "dpot/channels/exact_dp.h"
#include "dpot/channels/protocol.h"
#include "dpot/core/errors.h"
#include "dpot/core/stats.h"
#include "gtest/gtest.h"

namespace dpot {
namespace {

// Two-sided geometric mass written out from its definition.
double GeometricMass(std::int64_t k, double q) {
  return (1 - q) / (1 + q) * std::pow(q, std::abs(static_cast<double>(k)));
}

ChannelSpec Spec(ChannelKind kind, std::size_t n, double eps = 1.0) {
  ChannelSpec s;
  s.kind = kind;
  s.n = n;
  s.epsilon = eps;
  if (kind == ChannelKind::kLeaky) s.leak_index = 0;
  return s;
}

TEST(DiscreteLaplaceTest, MassMatchesDefinitionAndSumsToOne) {
  const DiscreteLaplace d = DiscreteLaplace::for_epsilon(1.0);
  const double q = std::exp(-0.5);
  EXPECT_NEAR(d.decay(), q, 1e-15);
  double total = 0;
  for (int k = -200; k <= 200; ++k) {
    EXPECT_NEAR(d.mass(k), GeometricMass(k, q), 1e-15);
    total += d.mass(k);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(DiscreteLaplaceTest, TailMatchesSummedMass) {
  const DiscreteLaplace d = DiscreteLaplace::for_epsilon(1.0);
  for (int m : {0, 1, 5, 14}) {
    double central = 0;
    for (int k = -m; k <= m; ++k) central += GeometricMass(k, d.decay());
    EXPECT_NEAR(d.central_mass(m), central, 1e-12);
  }
  EXPECT_LE(d.tail_above(d.truncation_radius(1e-9)), 1e-9);
}

TEST(DiscreteLaplaceTest, SamplesFollowTheMass) {
  const DiscreteLaplace d = DiscreteLaplace::for_epsilon(1.0);
  RandomStream s(21);
  const int clip = 8;
  std::vector<std::uint64_t> counts(2 * clip + 3);
  for (int t = 0; t < 200000; ++t) {
    const std::int64_t v = d.sample(s);
    const std::size_t bin =
        v < -clip ? 0 : (v > clip ? counts.size() - 1 : v + clip + 1);
    ++counts[bin];
  }
  std::vector<double> probs(counts.size());
  probs.front() = probs.back() = d.tail_above(clip) / 2;
  for (int k = -clip; k <= clip; ++k) probs[k + clip + 1] = d.mass(k);
  EXPECT_GT(chi_square_goodness_of_fit(counts, probs).p_value, 1e-4);
}

TEST(DiscreteLaplaceTest, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(DiscreteLaplace::for_epsilon(0.0), ParameterError);
  EXPECT_THROW(DiscreteLaplace::for_epsilon(-1.0), ParameterError);
}

TEST(ChannelKindTest, NamesRoundTrip) {
  for (ChannelKind k :
       {ChannelKind::kRandomizedResponse, ChannelKind::kTrustedLaplace,
        ChannelKind::kSplitNoise, ChannelKind::kLeaky,
        ChannelKind::kWrappedProtocol}) {
    EXPECT_EQ(parse_channel_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_channel_kind("laplace"), ConfigError);
}

TEST(ChannelSpecTest, ValidationErrors) {
  ChannelSpec s = Spec(ChannelKind::kTrustedLaplace, 0);
  EXPECT_THROW(s.validate(), ParameterError);
  s.n = 4;
  s.delta = 1.0;
  EXPECT_THROW(s.validate(), ParameterError);
  s = Spec(ChannelKind::kLeaky, 4);
  s.leak_index = 4;
  EXPECT_THROW(s.validate(), IndexError);
}

TEST(RandomizedResponseTest, KeepsEachSignWithClosedFormProbability) {
  const ChannelSpec spec = Spec(ChannelKind::kRandomizedResponse, 1000);
  RandomStream s(4);
  std::uint64_t kept = 0, total = 0;
  for (int t = 0; t < 50; ++t) {
    const ChannelSample c = sample_randomized_response(spec, s);
    ASSERT_TRUE(c.v.signs.has_value());
    kept += 1000 - count_flipped(c.x, *c.v.signs);
    total += 1000;
  }
  const double p = std::exp(1.0) / (1 + std::exp(1.0));
  EXPECT_TRUE(clopper_pearson(kept, total).contains(p));
}

TEST(RandomizedResponseTest, DebiasedOutputIsUnbiased) {
  const ChannelSpec spec = Spec(ChannelKind::kRandomizedResponse, 400);
  RandomStream s(5);
  double sum = 0;
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    const ChannelSample c = sample_randomized_response(spec, s);
    sum += static_cast<double>(*c.out_v() - inner_product(c.x, c.y));
  }
  // Var of one debiased estimate is about n / (2p-1)^2 ~ 1870; the mean's
  // standard error is under 1.
  EXPECT_NEAR(sum / trials, 0.0, 4.0);
}

TEST(RandomizedResponseTest, InfiniteEpsilonIsNoiseless) {
  ChannelSpec spec = Spec(ChannelKind::kRandomizedResponse, 64);
  spec.epsilon = std::numeric_limits<double>::infinity();
  RandomStream s(6);
  const ChannelSample c = sample_randomized_response(spec, s);
  EXPECT_EQ(*c.v.signs, c.x);
  EXPECT_EQ(*c.out_v(), inner_product(c.x, c.y));
}

TEST(RandomizedResponseTest, ZeroEpsilonIsRejected) {
  const ChannelSpec spec = Spec(ChannelKind::kRandomizedResponse, 8, 0.0);
  RandomStream s(1);
  EXPECT_THROW(sample_randomized_response(spec, s), ParameterError);
}

TEST(TrustedLaplaceTest, BothPartiesSeeTheSameEstimate) {
  const ChannelSpec spec = Spec(ChannelKind::kTrustedLaplace, 50);
  RandomStream s(8);
  for (int t = 0; t < 20; ++t) {
    const ChannelSample c = sample_trusted_laplace(spec, s);
    EXPECT_EQ(c.u.get(view_keys::kEstimate), c.v.get(view_keys::kEstimate));
    EXPECT_EQ(c.out_v(), c.v.get(view_keys::kEstimate));
  }
}

TEST(TrustedLaplaceTest, ErrorFollowsTheNoiseLaw) {
  const ChannelSpec spec = Spec(ChannelKind::kTrustedLaplace, 16);
  const DiscreteLaplace d = DiscreteLaplace::for_epsilon(1.0);
  RandomStream s(9);
  std::uint64_t within_one = 0;
  const std::uint64_t trials = 20000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ChannelSample c = sample_trusted_laplace(spec, s);
    within_one += std::abs(*c.out_v() - inner_product(c.x, c.y)) <= 1;
  }
  const double oracle = GeometricMass(-1, d.decay()) +
                        GeometricMass(0, d.decay()) +
                        GeometricMass(1, d.decay());
  EXPECT_TRUE(clopper_pearson(within_one, trials).contains(oracle));
}

TEST(SplitNoiseTest, EstimateIsInnerProductPlusBothNoises) {
  const ChannelSpec spec = Spec(ChannelKind::kSplitNoise, 30);
  RandomStream s(10);
  for (int t = 0; t < 50; ++t) {
    const ChannelSample c = sample_split_noise(spec, s);
    const std::int64_t z = *c.u.get(view_keys::kEstimate);
    EXPECT_EQ(z, inner_product(c.x, c.y) + *c.u.get(view_keys::kOwnNoise) +
                     *c.v.get(view_keys::kOwnNoise));
    EXPECT_EQ(c.v.get(view_keys::kEstimate), z);
    EXPECT_EQ(c.out_v(), z);
  }
}

TEST(LeakyTest, AliceSeesTheLeakedCoordinate) {
  ChannelSpec spec = Spec(ChannelKind::kLeaky, 10);
  spec.leak_index = 3;
  RandomStream s(12);
  for (int t = 0; t < 20; ++t) {
    const ChannelSample c = sample_leaky(spec, s);
    EXPECT_EQ(c.u.get(view_keys::kLeakIndex), 3);
    EXPECT_EQ(c.u.get(view_keys::kLeakValue), c.y.at(3));
    EXPECT_FALSE(c.v.get(view_keys::kLeakValue).has_value());
  }
}

TEST(PinnedInputsTest, PinnedInputsAreUsedVerbatim) {
  const auto ch = make_channel(Spec(ChannelKind::kTrustedLaplace, 4));
  const SignVector x{1, -1, 1, -1}, y{-1, -1, 1, 1};
  RandomStream s(13);
  const ChannelSample c = ch->sample(s, PinnedInputs{x, y});
  EXPECT_EQ(c.x, x);
  EXPECT_EQ(c.y, y);
  EXPECT_THROW(ch->sample(s, PinnedInputs{SignVector(5), y}), DimensionError);
}

TEST(ChannelTest, SampleIsAFunctionOfTheSeed) {
  const auto ch = make_channel(Spec(ChannelKind::kSplitNoise, 100));
  RandomStream a(77), b(77);
  const ChannelSample ca = ch->sample(a), cb = ch->sample(b);
  EXPECT_EQ(ca.x, cb.x);
  EXPECT_EQ(ca.y, cb.y);
  EXPECT_EQ(ca.u, cb.u);
  EXPECT_EQ(ca.v, cb.v);
}

// Speaks forever: the wrapper must report a deadlock.
class ChattyProtocol : public NextMessageProtocol {
 public:
  std::string name() const override { return "chatty"; }
  std::optional<Message> next_message(const PartyState&,
                                      RandomStream&) const override {
    return Message{Party::kAlice, "ping", {1}};
  }
  std::optional<std::int64_t> designated_output(
      const PartyState&) const override {
    return std::nullopt;
  }
  std::size_t max_turns() const override { return 10; }
};

// A's first message fails the structural check.
class MalformedProtocol : public NextMessageProtocol {
 public:
  std::string name() const override { return "malformed"; }
  std::optional<Message> next_message(const PartyState& state,
                                      RandomStream&) const override {
    if (state.role == Party::kAlice && state.transcript.empty()) {
      return Message{Party::kAlice, "bad", {}};
    }
    return std::nullopt;
  }
  bool well_formed(const Message& m) const override { return m.label != "bad"; }
  std::optional<std::int64_t> designated_output(
      const PartyState&) const override {
    return std::nullopt;
  }
};

TEST(ProtocolTest, ClearExchangeMatchesTrustedLaplaceLaw) {
  const auto ch = make_channel(Spec(ChannelKind::kWrappedProtocol, 12));
  const DiscreteLaplace d = DiscreteLaplace::for_epsilon(1.0);
  RandomStream s(14);
  std::uint64_t exact = 0;
  const std::uint64_t trials = 20000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ChannelSample c = ch->sample(s);
    ASSERT_EQ(c.v.transcript.size(), 2u);
    EXPECT_EQ(c.v.transcript[0].label, "x");
    EXPECT_EQ(c.v.transcript[1].sender, Party::kBob);
    EXPECT_EQ(c.u.transcript, c.v.transcript);
    exact += *c.out_v() == inner_product(c.x, c.y);
  }
  EXPECT_TRUE(clopper_pearson(exact, trials).contains(d.mass(0)));
}

TEST(ProtocolTest, NonTerminatingProtocolIsADeadlock) {
  RandomStream s(1);
  try {
    wrap_protocol(ChattyProtocol{}, 4, s);
    FAIL() << "expected ProtocolFault";
  } catch (const ProtocolFault& e) {
    EXPECT_EQ(e.partial_transcript().size(), 10u);
  }
}

TEST(ProtocolTest, MalformedMessageCarriesPartialTranscript) {
  RandomStream s(1);
  try {
    wrap_protocol(MalformedProtocol{}, 4, s);
    FAIL() << "expected ProtocolFault";
  } catch (const ProtocolFault& e) {
    ASSERT_EQ(e.partial_transcript().size(), 1u);
    EXPECT_EQ(e.partial_transcript()[0].label, "bad");
  }
}

TEST(ExactDpTest, TrustedLaplaceLossIsExactlyEpsilon) {
  // A flip moves <x,y> by 2 and the noise scale is 2 / eps, so the worst
  // likelihood ratio is q^-2 = e^eps.
  for (double eps : {0.5, 1.0, 2.0}) {
    const ChannelSpec spec = Spec(ChannelKind::kTrustedLaplace, 8, eps);
    for (Party p : {Party::kAlice, Party::kBob}) {
      const ExactDpResult r = exact_view_privacy(spec, p);
      EXPECT_NEAR(r.max_log_ratio, eps, 1e-9);
      EXPECT_TRUE(r.satisfies(eps));
      EXPECT_FALSE(r.satisfies(eps * 0.99));
    }
  }
}

TEST(ExactDpTest, SplitNoiseViewIsEpsilonPrivate) {
  const ChannelSpec spec = Spec(ChannelKind::kSplitNoise, 6);
  EXPECT_TRUE(exact_view_privacy(spec, Party::kAlice).satisfies(1.0));
  EXPECT_TRUE(exact_view_privacy(spec, Party::kBob).satisfies(1.0));
}

TEST(ExactDpTest, LeakyChannelHasUnboundedLossForAlice) {
  const ChannelSpec spec = Spec(ChannelKind::kLeaky, 6);
  EXPECT_TRUE(std::isinf(exact_view_privacy(spec, Party::kAlice).max_log_ratio));
  EXPECT_TRUE(exact_view_privacy(spec, Party::kBob).satisfies(1.0));
}

TEST(ExactDpTest, RandomizedResponseLossIsEpsilonForBob) {
  const ChannelSpec spec = Spec(ChannelKind::kRandomizedResponse, 4, 1.5);
  EXPECT_NEAR(exact_view_privacy(spec, Party::kBob).max_log_ratio, 1.5, 1e-9);
}

TEST(ExactDpTest, CapacityAndUnsupportedKinds) {
  EXPECT_THROW(exact_view_privacy(Spec(ChannelKind::kTrustedLaplace, 13),
                                  Party::kAlice),
               CapacityError);
  EXPECT_THROW(exact_view_privacy(Spec(ChannelKind::kWrappedProtocol, 4),
                                  Party::kAlice),
               ParameterError);
}

}  // namespace
}  // namespace dpot
