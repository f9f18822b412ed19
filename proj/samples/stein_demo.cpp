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

// Classical and commuting-quantum Stein exponents for a binary pair, followed
// by the gap between the Umegaki and BS entropies on a random qubit pair.

#include <cstdio>

#include "divlab/divlab.hpp"

int main() {
  using namespace divlab;
  const ClassicalDistribution r({0.9, 0.1}), s({0.1, 0.9});
  const double eps = 0.05;
  const double d = classical_relative_entropy(r.probs(), s.probs()).value;
  std::printf("D(r||s) = %.6f  window [%.6f, %.6f]\n", d, d, d / (1.0 - eps));
  for (const auto& res : error_exponent_curve(r, s, eps, {10, 50, 100, 250, 500}))
    std::printf("N = %4d  log beta = %12.6f  rate = %.6f\n", res.N, res.log_beta, res.rate);

  CounterRng rng(2026);
  const DensityMatrix rho = random_density(2, 2, rng), sigma = random_density(2, 2, rng);
  const BsGap g = bs_gap_report(rho, sigma);
  std::printf("umegaki %.9f  bs %.9f  gap %.3e  ||[rho,sigma]|| %.3e\n", g.umegaki, g.bs, g.gap, g.commutator_norm);
  return 0;
}
