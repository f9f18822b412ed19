// Copyright 2026 The divlab Authors
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

#include <gtest/gtest.h>

#include "divlab/channels.hpp"
#include "divlab/divergences.hpp"

namespace divlab {
namespace {

TEST(Channels, IdentityLeavesStateUnchanged) {
  const DensityMatrix rho = random_density(3, 2, 1);
  EXPECT_LT((apply(identity_channel(3), rho).matrix() - rho.matrix()).norm(), 1e-15);
}

TEST(Channels, UnitalFixedPoint) {
  const DensityMatrix mixed(HermitianMatrix(identity(3) / 3.0));
  for (const KrausChannel& ch : {depolarizing(3, 0.3), unitary_mixing({random_haar_unitary(3, 1), random_haar_unitary(3, 2)})})
    EXPECT_LT((apply(ch, mixed).matrix() - mixed.matrix()).norm(), 1e-14);
}

TEST(Channels, DepolarizingFormula) {
  const DensityMatrix rho = random_density(2, 2, 5);
  const ComplexMatrix expected = 0.6 * rho.matrix() + 0.4 * identity(2) / 2.0;
  EXPECT_LT((apply(depolarizing(2, 0.4), rho).matrix() - expected).norm(), 1e-14);
  EXPECT_THROW(depolarizing(2, 1.5), InvalidArgument);
}

TEST(Channels, PartialTraceChannelMatchesPartialTrace) {
  const DensityMatrix rho = random_density(6, 6, 7);
  EXPECT_LT((apply(partial_trace_channel(2, 3, 2), rho).matrix() - partial_trace(rho.matrix(), 2, 2, 3)).norm(), 1e-14);
  EXPECT_LT((apply(partial_trace_channel(2, 3, 1), rho).matrix() - partial_trace(rho.matrix(), 1, 2, 3)).norm(), 1e-14);
}

TEST(Channels, RandomCptpIsTracePreserving) {
  for (int env = 1; env <= 4; ++env) {
    const KrausChannel ch = random_cptp(3, env, std::uint64_t(env));
    EXPECT_EQ(ch.kraus().size(), std::size_t(env));
    ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
    for (const auto& k : ch.kraus()) sum += k.adjoint() * k;
    EXPECT_LT((sum - identity(3)).norm(), 1e-12);
  }
  const KrausChannel u = random_cptp(2, 1, 9);
  EXPECT_LT((u.kraus()[0] * u.kraus()[0].adjoint() - identity(2)).norm(), 1e-12);
}

TEST(Channels, KrausValidation) {
  EXPECT_THROW(KrausChannel({2.0 * identity(2)}), InvariantViolation);
  EXPECT_THROW(KrausChannel(std::vector<ComplexMatrix>{}), InvariantViolation);
  EXPECT_THROW(apply(identity_channel(2), random_density(3, 3, 1)), InvalidArgument);
}

TEST(Twirl, ProductAndIdentity) {
  CounterRng rng(3);
  const ComplexMatrix a = random_ginibre(2, 2, rng), b = random_ginibre(3, 3, rng);
  const ComplexMatrix expected = tensor(a * (b.trace() / 3.0), identity(3));
  EXPECT_LT((haar_twirl_second_factor(tensor(a, b), 2, 3) - expected).norm(), 1e-13);
  EXPECT_LT((haar_twirl_second_factor(identity(6), 2, 3) - identity(6)).norm(), 1e-15);
}

TEST(Twirl, MatchesMonteCarloAverage) {
  CounterRng rng(4);
  const ComplexMatrix y = random_ginibre(4, 4, rng);
  ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix w = tensor(identity(2), random_haar_unitary(2, rng).matrix());
    acc += w * y * w.adjoint();
  }
  EXPECT_LT((acc / double(n) - haar_twirl_second_factor(y, 2, 2)).cwiseAbs().maxCoeff(), 0.05);
}

TEST(Uhlmann, IdentityAndRandomChannels) {
  EXPECT_TRUE(verify_uhlmann_identity(identity_channel(2), random_density(2, 2, 1), 1e-12));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CounterRng rng(seed);
    const KrausChannel ch = random_cptp(2, 2, rng);
    EXPECT_TRUE(verify_uhlmann_identity(ch, random_density(2, 2, rng), 1e-9));
  }
}

TEST(Uhlmann, CorruptedDilationFails) {
  CounterRng rng(5);
  const KrausChannel ch = random_cptp(2, 2, rng);
  const KrausChannel corrupted(ch.kraus(), Dilation{random_haar_unitary(4, rng).matrix(), 2});
  EXPECT_FALSE(verify_uhlmann_identity(corrupted, random_density(2, 2, rng), 1e-9));
  EXPECT_THROW(verify_uhlmann_identity(depolarizing(2, 0.5), random_density(2, 2, rng), 1e-9), InvalidArgument);
}

TEST(Dpi, PartialTraceDoesNotIncreaseDivergence) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CounterRng rng(seed);
    const DensityMatrix rho = random_density(4, 4, rng), sigma = random_density(4, 4, rng);
    const KrausChannel ch = partial_trace_channel(2, 2, 2);
    EXPECT_LE(umegaki(apply(ch, rho), apply(ch, sigma)).value, umegaki(rho, sigma).value + 1e-12);
    EXPECT_LE(d_alpha_z(apply(ch, rho), apply(ch, sigma), 2.0, 1.0).value, d_alpha_z(rho, sigma, 2.0, 1.0).value + 1e-12);
  }
}

TEST(Json, ChannelRoundTrip) {
  const KrausChannel ch = random_cptp(2, 3, 11);
  const KrausChannel back = channel_from_json(channel_to_json(ch));
  ASSERT_EQ(back.kraus().size(), ch.kraus().size());
  for (std::size_t i = 0; i < ch.kraus().size(); ++i) EXPECT_EQ(back.kraus()[i], ch.kraus()[i]);
}

}  // namespace
}  // namespace divlab
