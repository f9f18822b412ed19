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

#include "divlab/stein.hpp"
#include "oracles.hpp"

namespace divlab {
namespace {

const ClassicalDistribution kR({0.9, 0.1}), kS({0.1, 0.9});

TEST(ClassicalBeta, SingleSample) {
  const HypothesisTestResult res = classical_beta(kR, kS, 0.1, 1);
  EXPECT_NEAR(res.log_beta, std::log(0.1), 1e-12);
  EXPECT_NEAR(res.coverage, 0.9, 1e-12);
}

TEST(ClassicalBeta, MatchesExhaustiveSubsetsBinary) {
  for (int n = 1; n <= 3; ++n)
    for (double eps : {0.01, 0.05, 0.1, 0.2, 0.35, 0.5, 0.8, 0.95, 0.99}) {
      const double expected = oracle::exhaustive_log_beta(kR.probs(), kS.probs(), eps, n);
      EXPECT_NEAR(classical_beta(kR, kS, eps, n).log_beta, expected, 1e-10) << "N=" << n << " eps=" << eps;
    }
  const ClassicalDistribution r({0.6, 0.4}), s({0.3, 0.7});
  for (int n = 1; n <= 3; ++n)
    for (double eps : {0.05, 0.3, 0.7})
      EXPECT_NEAR(classical_beta(r, s, eps, n).log_beta, oracle::exhaustive_log_beta(r.probs(), s.probs(), eps, n),
                  1e-10);
}

TEST(ClassicalBeta, TernaryIsFeasibleUpperBound) {
  const ClassicalDistribution r({0.5, 0.3, 0.2}), s({0.2, 0.3, 0.5});
  for (int n = 1; n <= 2; ++n)
    for (double eps : {0.05, 0.3, 0.6}) {
      const HypothesisTestResult res = classical_beta(r, s, eps, n);
      EXPECT_GE(res.coverage, 1.0 - eps - 1e-12);
      EXPECT_GE(res.log_beta, oracle::exhaustive_log_beta(r.probs(), s.probs(), eps, n) - 1e-12);
    }
}

TEST(ClassicalBeta, NonIncreasingInEpsilon) {
  for (int n = 1; n <= 6; ++n) {
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double lb = classical_beta(kR, kS, i / 100.0, n).log_beta;
      EXPECT_LE(lb, prev + 1e-12);
      prev = lb;
    }
  }
}

TEST(ClassicalBeta, NearOneKeepsNonemptySet) {
  const HypothesisTestResult res = classical_beta(kR, kS, 0.999999, 1);
  EXPECT_TRUE(std::isfinite(res.log_beta));
  EXPECT_NEAR(res.log_beta, std::log(0.1), 1e-12);
}

TEST(ClassicalBeta, IndistinguishableCase) {
  const ClassicalDistribution r({0.5, 0.5});
  for (int n : {1, 4, 20}) {
    const HypothesisTestResult res = classical_beta(r, r, 0.25, n);
    EXPECT_NEAR(res.log_beta, std::log(res.coverage), 1e-9);
    EXPECT_GE(res.coverage, 0.75 - 1e-12);
    EXPECT_LT(res.rate, 0.3 / n + 1e-12);
  }
}

TEST(ClassicalBeta, SupportViolationGivesZeroBeta) {
  const ClassicalDistribution r({0.5, 0.5, 0.0}), s({0.0, 0.5, 0.5});
  // Accepting only sequences where s vanishes is impossible at this coverage; beta is finite.
  EXPECT_TRUE(std::isfinite(classical_beta(r, s, 0.1, 2).log_beta));
  const ClassicalDistribution r2({1.0, 0.0}), s2({0.0, 1.0});
  EXPECT_TRUE(classical_beta(r2, s2, 0.1, 3).beta_zero());
}

TEST(ClassicalBeta, Validation) {
  EXPECT_THROW(classical_beta(kR, kS, 0.0, 3), InvalidArgument);
  EXPECT_THROW(classical_beta(kR, kS, 0.1, 0), InvalidArgument);
  EXPECT_THROW(classical_beta(kR, ClassicalDistribution({0.2, 0.3, 0.5}), 0.1, 3), InvalidArgument);
  EXPECT_THROW(ClassicalDistribution({0.5, 0.6}), InvalidArgument);
}

TEST(ErrorExponent, SandwichAtFiveHundred) {
  const double d = 0.8 * std::log(9.0);
  const auto curve = error_exponent_curve(kR, kS, 0.05, {10, 100, 500});
  ASSERT_EQ(curve.size(), 3u);
  EXPECT_GE(curve.back().rate, 0.9 * d);
  EXPECT_LE(curve.back().rate, 1.1 * d / 0.95);
  EXPECT_LT(curve[0].rate, curve[1].rate);
  EXPECT_LT(curve[1].rate, curve[2].rate);
}

TEST(ErrorExponent, EqualDistributionsHaveNearZeroRate) {
  const ClassicalDistribution r({0.3, 0.7});
  for (const auto& row : error_exponent_curve(r, r, 0.1, {50, 200})) EXPECT_LT(row.rate, 1e-2);
}

TEST(ErrorExponent, SwapSymmetricInstance) {
  const auto a = error_exponent_curve(kR, kS, 0.05, {100}), b = error_exponent_curve(kS, kR, 0.05, {100});
  EXPECT_NEAR(a[0].rate, b[0].rate, 1e-12);
}

TEST(ErrorExponent, LargeNStaysFinite) {
  const HypothesisTestResult res = classical_beta(kR, kS, 0.05, 2000);
  EXPECT_TRUE(std::isfinite(res.log_beta));
  EXPECT_NEAR(res.rate, 0.8 * std::log(9.0), 0.05);
  EXPECT_GE(res.coverage, 0.95 - 1e-12);
}

TEST(Classical, GarblingDoesNotIncreaseDivergence) {
  CounterRng rng(31);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = 2 + i % 3, m = 2 + (i / 3) % 3;
    std::vector<double> r(k), s(k);
    double sr = 0.0, ss = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      r[j] = rng.uniform(0.01, 1.0);
      s[j] = rng.uniform(0.01, 1.0);
      sr += r[j];
      ss += s[j];
    }
    for (std::size_t j = 0; j < k; ++j) {
      r[j] /= sr;
      s[j] /= ss;
    }
    // Column-stochastic P: column j is the output law of input symbol j.
    std::vector<std::vector<double>> p(m, std::vector<double>(k));
    for (std::size_t j = 0; j < k; ++j) {
      double col = 0.0;
      for (std::size_t a = 0; a < m; ++a) col += p[a][j] = rng.uniform();
      for (std::size_t a = 0; a < m; ++a) p[a][j] /= col;
    }
    std::vector<double> pr(m, 0.0), ps(m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < k; ++j) {
        pr[a] += p[a][j] * r[j];
        ps[a] += p[a][j] * s[j];
      }
    EXPECT_LE(classical_relative_entropy(pr, ps).value, classical_relative_entropy(r, s).value + 1e-12);
  }
}

TEST(Quantum, NonCommutingQubitTrend) {
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const DensityMatrix rho(HermitianMatrix(0.95 * plus + 0.05 * identity(2) / 2.0));
  const DensityMatrix sigma(HermitianMatrix(diagonal({0.7, 0.3})));
  const double d = umegaki(rho, sigma).value;
  std::vector<double> rates;
  for (int n = 2; n <= 8; ++n) rates.push_back(quantum_beta_np_family(rho, sigma, 0.1, n).rate);
  EXPECT_NEAR(rates.back(), d, 0.35 * d);
  // Least-squares slope of |rate - D| against N: the sequence moves toward D.
  const double mean_n = 5.0;
  double mean_gap = 0.0;
  for (double r : rates) mean_gap += std::abs(r - d) / double(rates.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    num += (double(i + 2) - mean_n) * (std::abs(rates[i] - d) - mean_gap);
    den += (double(i + 2) - mean_n) * (double(i + 2) - mean_n);
  }
  EXPECT_LE(num / den, 0.0);
}

TEST(Quantum, CommutingMatchesClassical) {
  const DensityMatrix rho(HermitianMatrix(diagonal({0.9, 0.1}))), sigma(HermitianMatrix(diagonal({0.1, 0.9})));
  for (int n = 1; n <= 5; ++n)
    for (double eps : {0.05, 0.2}) {
      const double q = quantum_beta_np_family(rho, sigma, eps, n).log_beta;
      EXPECT_NEAR(q, classical_beta(kR, kS, eps, n).log_beta, 1e-9) << n << " " << eps;
    }
}

TEST(Quantum, IdenticalStatesHaveNearZeroRate) {
  const DensityMatrix rho = random_density(2, 2, 3);
  const HypothesisTestResult res = quantum_beta_np_family(rho, rho, 0.1, 4);
  EXPECT_LT(res.rate, 0.05);
  EXPECT_GE(res.coverage, 0.9 - 1e-9);
}

TEST(Quantum, LimitsDimension) {
  const DensityMatrix rho = random_density(2, 2, 3);
  EXPECT_THROW(quantum_beta_np_family(rho, rho, 0.1, 13), InvalidArgument);
}

TEST(BsGap, CommutingAndGenericPairs) {
  const DensityMatrix a(HermitianMatrix(diagonal({0.3, 0.7}))), b(HermitianMatrix(diagonal({0.6, 0.4})));
  EXPECT_NEAR(bs_gap_report(a, b).gap, 0.0, 1e-10);
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const DensityMatrix rho(HermitianMatrix(0.95 * plus + 0.05 * identity(2) / 2.0));
  const DensityMatrix sigma(HermitianMatrix(diagonal({0.7, 0.3})));
  const BsGap g = bs_gap_report(rho, sigma);
  EXPECT_GT(g.gap, 1e-10);
  EXPECT_TRUE(g.strict);
  const BsGap same = bs_gap_report(sigma, sigma);
  EXPECT_NEAR(same.gap, 0.0, 1e-12);
  EXPECT_NEAR(same.umegaki, 0.0, 1e-12);
  EXPECT_NEAR(same.bs, 0.0, 1e-12);
}

}  // namespace
}  // namespace divlab
