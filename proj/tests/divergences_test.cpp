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

#include <cmath>

#include "divlab/divergences.hpp"
#include "oracles.hpp"

namespace divlab {
namespace {

PositiveDefiniteMatrix pd(std::vector<double> d) { return PositiveDefiniteMatrix(diagonal(d)); }
DensityMatrix dm(std::vector<double> d) { return DensityMatrix(HermitianMatrix(diagonal(d))); }

TEST(Psi, IdentityGivesDimension) {
  for (const ParamPoint pt : {ParamPoint{0.5, 0.3, 1.0}, ParamPoint{-1.0, 2.0, -0.7}, ParamPoint{1.5, -0.5, 3.0}})
    EXPECT_NEAR(psi(pd({1, 1, 1, 1}), pd({1, 1, 1, 1}), identity(4), pt), 4.0, 1e-12);
}

TEST(Psi, CommutingCase) {
  EXPECT_NEAR(psi(pd({1, 2}), pd({1, 3}), identity(2), {1, 1, 0.5}), 1.0 + std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(psi(pd({0.3, 2, 5}), pd({1.7, 0.2, 4}), identity(3), {0.7, -0.4, 1.9}),
              oracle::psi_diagonal({0.3, 2, 5}, {1.7, 0.2, 4}, 0.7, -0.4, 1.9), 1e-11);
}

TEST(Psi, CyclicityAtUnitExponents) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CounterRng rng(seed);
    const auto a = random_positive_definite(3, 0.2, 5.0, rng), b = random_positive_definite(3, 0.2, 5.0, rng);
    const double direct = (a.matrix() * power(b, -1.0)).trace().real();
    EXPECT_NEAR(psi(a, b, identity(3), {1, -1, 1}), direct, 1e-9 * std::max(1.0, std::abs(direct)));
  }
}

TEST(Psi, BlockEmbeddingAgrees) {
  CounterRng rng(3);
  const auto a = random_positive_definite(3, 0.2, 5.0, rng), b = random_positive_definite(3, 0.2, 5.0, rng);
  const ComplexMatrix k = random_ginibre(3, 3, rng);
  for (const ParamPoint pt : {ParamPoint{0.5, 0.5, 1.0}, ParamPoint{1.5, -0.5, 1.2}, ParamPoint{-0.5, -0.5, 2.0}}) {
    const double x = psi(a, b, k, pt);
    EXPECT_NEAR(psi_block_embedding(a, b, k, pt), x, 1e-9 * std::abs(x));
  }
}

TEST(Psi, RejectsBadShapes) {
  EXPECT_THROW(psi(pd({1, 2}), pd({1, 2, 3}), identity(2), {1, 1, 1}), InvalidArgument);
  EXPECT_THROW(psi(pd({1, 2}), pd({1, 2}), identity(3), {1, 1, 1}), InvalidArgument);
}

TEST(Upsilon, Diagonal) {
  EXPECT_NEAR(upsilon(pd({2, 3}), identity(2), 1.5, 0.8), std::pow(2, 1.2) + std::pow(3, 1.2), 1e-12);
}

TEST(Upsilon, LinearCase) {
  CounterRng rng(8);
  const auto a = random_positive_definite(3, 0.2, 5.0, rng);
  const ComplexMatrix k = random_ginibre(3, 3, rng);
  EXPECT_NEAR(upsilon(a, k, 1.0, 1.0), (k.adjoint() * a.matrix() * k).trace().real(), 1e-10);
}

TEST(Upsilon, IsPsiWithIdentityB) {
  CounterRng rng(9);
  const auto a = random_positive_definite(3, 0.2, 5.0, rng);
  const ComplexMatrix k = random_ginibre(3, 3, rng);
  EXPECT_NEAR(upsilon(a, k, 2.5, 0.4), psi(a, pd({1, 1, 1}), k, {2.5, -0.7, 0.4}), 1e-10);
}

TEST(DAlphaZ, ZeroOnDiagonal) {
  const DensityMatrix rho = random_density(3, 3, 4);
  for (double alpha : {0.3, 0.5, 2.0, 3.0})
    for (double z : {0.5, 1.0, 2.0, 3.0}) EXPECT_NEAR(d_alpha_z(rho, rho, alpha, z).value, 0.0, 1e-10);
}

TEST(DAlphaZ, CommutingIsClassicalRenyi) {
  const DensityMatrix rho = dm({0.9, 0.1}), sigma = dm({0.1, 0.9});
  const double expected = std::log(0.81 / 0.1 + 0.01 / 0.9);
  EXPECT_NEAR(expected, 2.0932, 1e-4);
  for (double z : {0.5, 1.0, 2.0, 3.0}) EXPECT_NEAR(d_alpha_z(rho, sigma, 2.0, z).value, expected, 1e-12);
  EXPECT_NEAR(classical_renyi(std::vector<double>{0.9, 0.1}, std::vector<double>{0.1, 0.9}, 2.0).value, expected,
              1e-12);
}

TEST(DAlphaZ, RenyiHalf) {
  const double v = d_renyi(dm({0.9, 0.1}), dm({0.1, 0.9}), 0.5).value;
  EXPECT_NEAR(v, -2.0 * std::log(0.6), 1e-12);
  EXPECT_NEAR(v, 1.0217, 1e-4);
}

TEST(DAlphaZ, SandwichedAndStandardSpecialCases) {
  CounterRng rng(12);
  const DensityMatrix rho = random_density(3, 3, rng), sigma = random_density(3, 3, rng);
  EXPECT_NEAR(d_renyi(rho, sigma, 1.7).value, d_alpha_z(rho, sigma, 1.7, 1.0).value, 1e-14);
  EXPECT_NEAR(d_sandwiched(rho, sigma, 1.7).value, d_alpha_z(rho, sigma, 1.7, 1.7).value, 1e-14);
  // Sandwiched <= standard for alpha > 1.
  EXPECT_LE(d_sandwiched(rho, sigma, 1.7).value, d_renyi(rho, sigma, 1.7).value + 1e-12);
}

TEST(DAlphaZ, SupportViolationIsInfinite) {
  const DensityMatrix rho = dm({0.5, 0.5}), sigma = dm({1.0, 0.0});
  const DivergenceValue v = d_alpha_z(rho, sigma, 2.0, 1.0);
  EXPECT_TRUE(std::isinf(v.value));
  EXPECT_FALSE(v.finite);
  EXPECT_TRUE(std::isfinite(d_alpha_z(rho, sigma, 0.5, 1.0).value));
}

TEST(DAlphaZ, RejectsInvalidParameters) {
  const DensityMatrix rho = dm({0.5, 0.5});
  EXPECT_THROW(d_alpha_z(rho, rho, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(d_alpha_z(rho, rho, 2.0, 0.0), InvalidArgument);
  EXPECT_THROW(d_alpha_z(rho, rho, -1.0, 1.0), InvalidArgument);
}

TEST(DAlphaZ, ApproachesUmegakiNearAlphaOne) {
  CounterRng rng(13);
  const DensityMatrix rho = random_density(3, 3, rng), sigma = random_density(3, 3, rng);
  const double u = umegaki(rho, sigma).value;
  EXPECT_NEAR(d_alpha_z(rho, sigma, 1.0 + 1e-5, 1.0).value, u, 1e-3);
  EXPECT_NEAR(d_alpha_z(rho, sigma, 1.0 - 1e-5, 1.0).value, u, 1e-3);
}

TEST(Umegaki, Commuting) {
  EXPECT_NEAR(umegaki(dm({0.5, 0.5}), dm({0.25, 0.75})).value, 0.5 * std::log(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(0.5 * std::log(4.0 / 3.0), 0.143841, 1e-6);
  EXPECT_TRUE(std::isinf(umegaki(dm({0.5, 0.5}), dm({1.0, 0.0})).value));
}

TEST(Umegaki, VonNeumannOfMaximallyMixed) {
  EXPECT_NEAR(von_neumann_entropy(dm({0.25, 0.25, 0.25, 0.25})), std::log(4.0), 1e-12);
  EXPECT_NEAR(von_neumann_entropy(dm({1.0, 0.0})), 0.0, 1e-12);
}

TEST(BsEntropy, DominatesUmegaki) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CounterRng rng(seed);
    const DensityMatrix rho = random_density(2, 2, rng), sigma = random_density(2, 2, rng);
    EXPECT_GE(bs_entropy(rho, sigma).value, umegaki(rho, sigma).value - 1e-12);
  }
}

TEST(ResolventFunctional, TrivialValues) {
  EXPECT_NEAR(hiai_functional(pd({1, 1, 1}), pd({1, 1, 1}), identity(3), 0.5, 0.5, 1.0), 1.5, 1e-14);
  EXPECT_NEAR(hiai_functional(pd({1, 1, 1}), pd({1, 1, 1}), identity(3), 0.5, 0.5, 1e-9), 3.0, 1e-8);
  EXPECT_THROW(hiai_functional(pd({1}), pd({1}), identity(1), 1.5, 0.5, 1.0), InvalidArgument);
}

TEST(ResolventFunctional, DecreasingInT) {
  CounterRng rng(21);
  const auto a = random_positive_definite(3, 0.2, 5.0, rng), b = random_positive_definite(3, 0.2, 5.0, rng);
  const ComplexMatrix k = random_ginibre(3, 3, rng);
  double prev = 3.0;
  for (double t : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double v = hiai_functional(a, b, k, 0.7, 0.3, t);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Classical, RelativeEntropy) {
  const std::vector<double> r{0.9, 0.1}, s{0.1, 0.9};
  EXPECT_NEAR(classical_relative_entropy(r, r).value, 0.0, 1e-15);
  EXPECT_NEAR(classical_relative_entropy(r, s).value, 0.8 * std::log(9.0), 1e-12);
  EXPECT_NEAR(0.8 * std::log(9.0), 1.75778, 1e-5);
  EXPECT_TRUE(std::isinf(classical_relative_entropy(r, std::vector<double>{1.0, 0.0}).value));
  EXPECT_THROW(classical_relative_entropy(r, std::vector<double>{0.5, 0.6}), InvalidArgument);
}

TEST(Classical, RenyiLimit) {
  const std::vector<double> r{0.2, 0.5, 0.3}, s{0.4, 0.4, 0.2};
  const double d = oracle::kl(r, s);
  EXPECT_LT(std::abs(classical_renyi(r, s, 1.0 + 1e-4).value - d), 1e-3);
  EXPECT_LT(std::abs(classical_renyi(r, s, 1.0 - 1e-4).value - d), 1e-3);
}

TEST(ParamPoint, AlphaZMapping) {
  const ParamPoint pt = ParamPoint::from_alpha_z(2.0, 1.0);
  EXPECT_DOUBLE_EQ(pt.p, 2.0);
  EXPECT_DOUBLE_EQ(pt.q, -1.0);
  EXPECT_DOUBLE_EQ(pt.s, 1.0);
}

}  // namespace
}  // namespace divlab
