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

#include "divlab/matrix.hpp"

namespace divlab {
namespace {

ComplexMatrix m2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Eigen, PauliX) {
  const Spectrum s = eig_hermitian(HermitianMatrix(m2(0, 1, 1, 0)));
  EXPECT_NEAR(s.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-14);
}

TEST(Eigen, DiagonalIsSortedPermutation) {
  const Spectrum s = eig_hermitian(HermitianMatrix(diagonal({3, 1, 2})));
  EXPECT_DOUBLE_EQ(s.eigenvalues(0), 1.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues(1), 2.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues(2), 3.0);
  // Column j is +-e_{perm(j)} up to phase.
  const int perm[] = {1, 2, 0};
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(s.eigenvectors(perm[j], j)), 1.0, 1e-14);
}

TEST(Eigen, RandomReconstruction) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const HermitianMatrix h = random_hermitian(6, seed);
    const Spectrum s = eig_hermitian(h);
    EXPECT_LT((s.reconstruct() - h.matrix()).norm(), 1e-9);
    EXPECT_LT((s.eigenvectors.adjoint() * s.eigenvectors - identity(6)).norm(), 1e-10);
    for (Eigen::Index i = 1; i < 6; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
  }
}

TEST(Eigen, JacobiAgreesWithTridiagonal) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const HermitianMatrix h = random_hermitian(12, seed);
    const Spectrum a = detail::jacobi_eigen(h.matrix()), b = detail::tridiagonal_eigen(h.matrix());
    EXPECT_LT((a.eigenvalues - b.eigenvalues).norm(), 1e-10);
  }
}

TEST(Eigen, LargeDimensionUsesFallback) {
  const HermitianMatrix h = random_hermitian(80, 3);
  EXPECT_LT((eig_hermitian(h).reconstruct() - h.matrix()).norm(), 1e-8);
}

TEST(Invariants, HermitianRejectsNonHermitian) {
  EXPECT_THROW(HermitianMatrix(m2(1, 2, 0, 1)), InvariantViolation);
  EXPECT_THROW(HermitianMatrix(ComplexMatrix::Zero(2, 3)), Error);
}

TEST(Invariants, PositiveDefiniteRejectsRatherThanClips) {
  EXPECT_THROW(PositiveDefiniteMatrix(diagonal({1.0, 0.0})), InvariantViolation);
  EXPECT_THROW(PositiveDefiniteMatrix(diagonal({1.0, -1e-3})), InvariantViolation);
  EXPECT_NO_THROW(PositiveDefiniteMatrix(diagonal({1.0, 1e-6})));
}

TEST(Invariants, DensityNeedsUnitTrace) {
  EXPECT_THROW(DensityMatrix(HermitianMatrix(diagonal({0.5, 0.6}))), InvariantViolation);
  EXPECT_NO_THROW(DensityMatrix(HermitianMatrix(diagonal({0.5, 0.5}))));
  EXPECT_NO_THROW(DensityMatrix(HermitianMatrix(diagonal({1.0, 0.0}))));
}

TEST(Functions, SqrtOfDiagonal) {
  const HermitianMatrix r = matrix_function(HermitianMatrix(diagonal({4, 9})), fn::sqrt());
  EXPECT_LT((r.matrix() - diagonal({2, 3})).norm(), 1e-14);
}

TEST(Functions, IdentityMapsToScalar) {
  const HermitianMatrix r = matrix_function(HermitianMatrix(identity(4)), fn::exp());
  EXPECT_LT((r.matrix() - std::exp(1.0) * identity(4)).norm(), 1e-13);
}

TEST(Functions, ExpLogRoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PositiveDefiniteMatrix a = random_positive_definite(4, 0.1, 10.0, seed);
    const HermitianMatrix e = matrix_function(a.hermitian(), fn::exp());
    const HermitianMatrix back = matrix_function(e, fn::log());
    EXPECT_LT((back.matrix() - a.matrix()).norm(), 1e-8);
  }
}

TEST(Functions, PowerComposition) {
  const PositiveDefiniteMatrix a = random_positive_definite(3, 0.2, 5.0, 9);
  const ComplexMatrix half = power(a, 0.5);
  EXPECT_LT((half * half - a.matrix()).norm(), 1e-12);
  EXPECT_LT((power(a, -1.0) * a.matrix() - identity(3)).norm(), 1e-12);
}

TEST(Functions, NegativePowerOfSingularThrows) {
  const Spectrum s = eig_hermitian(HermitianMatrix(diagonal({1.0, 0.0})));
  EXPECT_THROW(apply_function(s, fn::power(-0.5)), DomainError);
  const ComplexMatrix r = apply_function(s, fn::power(-0.5), SpectralConvention::Support);
  EXPECT_LT((r - diagonal({1.0, 0.0})).norm(), 1e-14);
}

TEST(Tensor, Identities) {
  EXPECT_LT((tensor(identity(2), identity(3)) - identity(6)).norm(), 0.0 + 1e-15);
  EXPECT_LT((tensor(diagonal({2, 3}), diagonal({5, 7})) - diagonal({10, 14, 15, 21})).norm(), 1e-15);
}

TEST(Tensor, MixedProduct) {
  CounterRng rng(5);
  const ComplexMatrix a = random_ginibre(2, 2, rng), b = random_ginibre(3, 3, rng);
  const ComplexMatrix c = random_ginibre(2, 2, rng), d = random_ginibre(3, 3, rng);
  EXPECT_LT((tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)).norm(), 1e-12);
}

TEST(PartialTrace, ProductStates) {
  const DensityMatrix rho = random_density(2, 2, 1), tau = random_density(3, 3, 2);
  const ComplexMatrix joint = tensor(rho.matrix(), tau.matrix());
  EXPECT_LT((partial_trace(joint, 2, 2, 3) - rho.matrix()).norm(), 1e-14);
  EXPECT_LT((partial_trace(joint, 1, 2, 3) - tau.matrix()).norm(), 1e-14);
  EXPECT_LT((partial_trace(identity(4), 2, 2, 2) - 2.0 * identity(2)).norm(), 1e-15);
  EXPECT_THROW(partial_trace(identity(4), 3, 2, 2), InvalidArgument);
  EXPECT_THROW(partial_trace(identity(5), 1, 2, 2), InvalidArgument);
}

TEST(Random, HaarIsUnitaryAndDeterministic) {
  const UnitaryMatrix u = random_haar_unitary(4, 42), v = random_haar_unitary(4, 42);
  EXPECT_LT((u.matrix() * u.matrix().adjoint() - identity(4)).norm(), 1e-12);
  EXPECT_EQ(u.matrix(), v.matrix());
  const UnitaryMatrix w = random_haar_unitary(1, 3);
  EXPECT_NEAR(std::abs(w.matrix()(0, 0)), 1.0, 1e-14);
}

TEST(Random, HaarTwirlOfProjector) {
  CounterRng rng(77);
  ComplexMatrix acc = ComplexMatrix::Zero(3, 3);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix col = random_haar_unitary(3, rng).matrix().col(0);
    acc += col * col.adjoint();
  }
  acc /= double(n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(acc(i, j) - (i == j ? 1.0 / 3.0 : 0.0)), 0.0, 0.02);
}

TEST(Random, DensityRankAndTrace) {
  const DensityMatrix rho = random_density(4, 2, 11);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(rho.spectrum().eigenvalues(0), 0.0, 1e-12);
  EXPECT_NEAR(rho.spectrum().eigenvalues(1), 0.0, 1e-12);
  EXPECT_GT(rho.spectrum().eigenvalues(2), 1e-6);
  const DensityMatrix one = random_density(1, 1, 3);
  EXPECT_NEAR(one.matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(Random, PositiveDefiniteSpectrumRange) {
  const PositiveDefiniteMatrix a = random_positive_definite(5, 0.5, 2.0, 8);
  EXPECT_GE(a.min_eigenvalue(), 0.5 - 1e-12);
  EXPECT_LE(a.spectrum().max(), 2.0 + 1e-12);
}

TEST(Random, DerivedStreamsDiffer) {
  EXPECT_NE(CounterRng::derive(1, 0), CounterRng::derive(1, 1));
  EXPECT_NE(CounterRng::derive(1, 0), CounterRng::derive(2, 0));
  EXPECT_EQ(CounterRng::derive_path(9, {1, 2}), CounterRng::derive_path(9, {1, 2}));
  EXPECT_NE(CounterRng::derive_path(9, {1, 2}), CounterRng::derive_path(9, {2, 1}));
}

TEST(Json, RoundTripAndValidation) {
  const HermitianMatrix h = random_hermitian(3, 4);
  const nlohmann::json j = matrix_to_json(h.matrix());
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(matrix_from_json(j), h.matrix());
  nlohmann::json bad = j;
  bad["entries"].erase(0);
  EXPECT_THROW(matrix_from_json(bad), InvalidArgument);
}

}  // namespace
}  // namespace divlab
