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

#ifndef DIVLAB_IDENTITIES_HPP
#define DIVLAB_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/channels.hpp"
#include "divlab/convexity.hpp"
#include "divlab/divergences.hpp"
#include "json.hpp"

namespace divlab {

/// Outcome of one identity suite.
struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  double worst = 0.0;  // largest observed error (or margin) in the suite's own units

  bool passed() const { return failures == 0 && checks > 0; }

  nlohmann::json to_json() const {
    return {{"name", name}, {"checks", checks}, {"failures", failures}, {"worst", worst}, {"passed", passed()}};
  }
};

namespace detail {

inline void record(SuiteResult& r, double err, double tol) {
  ++r.checks;
  if (!(err <= tol)) ++r.failures;
  if (err > r.worst || std::isnan(err)) r.worst = err;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

inline std::vector<ParamPoint> identity_points() {
  return {{0.5, 0.5, 1.0}, {0.7, 0.2, 1.3}, {-0.5, -0.3, 2.0}, {1.5, -0.5, 1.2}, {2.0, -1.0, 0.7}, {0.3, -0.8, -1.5}};
}

}  // namespace detail

/// Psi_{p,q,s}(A, B; K) = Psi_{-p,-q,-s}(A, B; K^{-*}).
inline SuiteResult suite_sign_flip(std::uint64_t seed, int samples = 50) {
  SuiteResult r{"sign-flip"};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const int n = 2 + i % 3;
    const auto a = random_positive_definite(n, 0.2, 5.0, rng), b = random_positive_definite(n, 0.2, 5.0, rng);
    const ComplexMatrix k = random_ginibre(n, n, rng);
    const ComplexMatrix l = k.inverse().adjoint();
    for (const auto& pt : detail::identity_points())
      detail::record(r, detail::rel_err(psi(a, b, k, pt), psi(a, b, l, {-pt.p, -pt.q, -pt.s})), 1e-8);
  }
  return r;
}

/// Psi_{p,q,s}(A, B; K) = Psi_{q,p,s}(B, A; K*).
inline SuiteResult suite_swap(std::uint64_t seed, int samples = 50) {
  SuiteResult r{"swap"};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const int n = 2 + i % 3;
    const auto a = random_positive_definite(n, 0.2, 5.0, rng), b = random_positive_definite(n, 0.2, 5.0, rng);
    const ComplexMatrix k = random_ginibre(n, n, rng);
    for (const auto& pt : detail::identity_points())
      detail::record(r, detail::rel_err(psi(a, b, k, pt), psi(b, a, k.adjoint(), {pt.q, pt.p, pt.s})), 1e-9);
  }
  return r;
}

/// Direct Psi against the 2N-dimensional block embedding.
inline SuiteResult suite_block_embedding(std::uint64_t seed, int samples = 50) {
  SuiteResult r{"block-embedding"};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const int n = 2 + i % 3;
    const auto a = random_positive_definite(n, 0.2, 5.0, rng), b = random_positive_definite(n, 0.2, 5.0, rng);
    const ComplexMatrix k = random_ginibre(n, n, rng);
    for (const auto& pt : detail::identity_points()) {
      if (pt.s < 0.0) continue;  // the embedded inner matrix is singular
      detail::record(r, detail::rel_err(psi(a, b, k, pt), psi_block_embedding(a, b, k, pt)), 1e-8);
    }
  }
  return r;
}

/// Psi is multiplicative and D_{alpha,z} additive under tensor products.
inline SuiteResult suite_tensor(std::uint64_t seed, int samples = 30) {
  SuiteResult r{"tensor"};
  const std::vector<std::pair<double, double>> az{{0.5, 1.0}, {2.0, 1.0}, {2.0, 2.0}, {1.5, 0.75}, {0.7, 0.4}};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const auto rho1 = random_density(2, 2, rng), sigma1 = random_density(2, 2, rng);
    const auto rho2 = random_density(3, 3, rng), sigma2 = random_density(3, 3, rng);
    const DensityMatrix rho(HermitianMatrix::symmetrize(tensor(rho1.matrix(), rho2.matrix())));
    const DensityMatrix sigma(HermitianMatrix::symmetrize(tensor(sigma1.matrix(), sigma2.matrix())));
    for (const auto& [alpha, z] : az) {
      const double joint = d_alpha_z(rho, sigma, alpha, z);
      const double parts = d_alpha_z(rho1, sigma1, alpha, z) + d_alpha_z(rho2, sigma2, alpha, z);
      detail::record(r, detail::rel_err(joint, parts), 1e-8);
    }
    const auto a1 = random_positive_definite(2, 0.2, 5.0, rng), b1 = random_positive_definite(2, 0.2, 5.0, rng);
    const auto a2 = random_positive_definite(2, 0.2, 5.0, rng), b2 = random_positive_definite(2, 0.2, 5.0, rng);
    const ComplexMatrix k1 = random_ginibre(2, 2, rng), k2 = random_ginibre(2, 2, rng);
    const PositiveDefiniteMatrix a(HermitianMatrix::symmetrize(tensor(a1.matrix(), a2.matrix())));
    const PositiveDefiniteMatrix b(HermitianMatrix::symmetrize(tensor(b1.matrix(), b2.matrix())));
    for (const auto& pt : detail::identity_points())
      detail::record(r, detail::rel_err(psi(a, b, tensor(k1, k2), pt), psi(a1, b1, k1, pt) * psi(a2, b2, k2, pt)),
                     1e-8);
  }
  return r;
}

/// Haar twirl of the dilated state against E(rho) (x) I/m.
inline SuiteResult suite_uhlmann(std::uint64_t seed, int samples = 40) {
  SuiteResult r{"uhlmann"};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const int n = 2 + i % 2, e = 1 + i % 4;
    const KrausChannel ch = random_cptp(n, e, rng);
    const DensityMatrix rho = random_density(n, 1 + i % n, rng);
    ++r.checks;
    if (!verify_uhlmann_identity(ch, rho, 1e-10)) ++r.failures;
  }
  return r;
}

/// classify is invariant under (p,q,s) -> (-p,-q,-s) and p <-> q.
inline SuiteResult suite_classify_symmetry() {
  SuiteResult r{"classify-symmetry"};
  for (int i = -12; i <= 12; ++i)
    for (int j = -12; j <= 12; ++j)
      for (int k = -8; k <= 8; ++k) {
        if (k == 0) continue;
        const double p = i / 4.0, q = j / 4.0, s = k / 4.0;
        const RegionLabel base = classify(p, q, s);
        ++r.checks;
        if (!(classify(-p, -q, -s) == base && classify(q, p, s) == base && classify(-q, -p, -s) == base))
          ++r.failures;
      }
  return r;
}

inline std::vector<SuiteResult> symmetry_suites(std::uint64_t seed) {
  return {suite_sign_flip(CounterRng::derive(seed, 1)),     suite_swap(CounterRng::derive(seed, 2)),
          suite_block_embedding(CounterRng::derive(seed, 3)), suite_tensor(CounterRng::derive(seed, 4)),
          suite_uhlmann(CounterRng::derive(seed, 5)),        suite_classify_symmetry()};
}

/// Both variational formulas: optimizer attainment and bound direction.
inline SuiteResult suite_variational(std::uint64_t seed, int matrices = 20, int random_y = 50) {
  SuiteResult r{"variational"};
  const std::vector<double> ss{-1.5, -0.5, 0.3, 0.5, 0.8, 1.5, 2.0, 3.0};
  for (int i = 0; i < matrices; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const auto x = random_positive_definite(2 + i % 3, 0.1, 5.0, rng);
    for (double s : ss) {
      const VariationalReport rep = verify_variational(x, s, random_y, rng());
      ++r.checks;
      if (!rep.passed) ++r.failures;
      r.worst = std::max(r.worst, rep.attainment_error);
    }
  }
  return r;
}

inline SuiteResult suite_lieb_thirring(std::uint64_t seed, int samples = 500) {
  SuiteResult r{"lieb-thirring"};
  const double ss[] = {0.3, 0.5, 0.9};
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(CounterRng::derive(seed, std::uint64_t(i)));
    const int n = 2 + i % 2;
    const HermitianMatrix x = random_positive_definite(n, 0.01, 5.0, rng).hermitian();
    const HermitianMatrix y = random_positive_definite(n, 0.01, 5.0, rng).hermitian();
    const double s = ss[i % 3];
    ++r.checks;
    if (!verify_lieb_thirring(x, y, s)) ++r.failures;
    r.worst = std::max(r.worst, -lieb_thirring_gap(x, y, s));
  }
  return r;
}

inline SuiteResult suite_opconv(std::uint64_t seed, long samples = 300) {
  SuiteResult r{"opconv"};
  for (double q : {-1.0, -0.5, -0.2, 0.0}) {
    const ProbeReport rep = verify_opconv(q, 3, samples, CounterRng::derive(seed, std::uint64_t(q * -10)));
    r.checks += rep.samples;
    r.failures += rep.violations;
    r.worst = std::max(r.worst, rep.worst_margin);
  }
  return r;
}

inline SuiteResult suite_integral_representation() {
  SuiteResult r{"integral-rep"};
  for (double x : {1e-3, 0.1, 1.0, 2.7, 4.0, 50.0, 1e3})
    for (double sigma : {0.05, 0.31, 0.5, 0.77, 0.95}) {
      const double err = verify_integral_representation(x, sigma, 200);
      detail::record(r, err / std::max(1.0, std::pow(x, sigma)), 1e-6);
    }
  return r;
}

/// Suites by CLI name: symmetries | variational | lieb-thirring | uhlmann | opconv | integral-rep.
inline std::vector<SuiteResult> run_identity_suite(const std::string& name, std::uint64_t seed) {
  if (name == "symmetries") return symmetry_suites(seed);
  if (name == "variational") return {suite_variational(seed)};
  if (name == "lieb-thirring") return {suite_lieb_thirring(seed)};
  if (name == "uhlmann") return {suite_uhlmann(seed)};
  if (name == "opconv") return {suite_opconv(seed)};
  if (name == "integral-rep") return {suite_integral_representation()};
  throw InvalidArgument("unknown suite '" + name +
                        "' (expected symmetries, variational, lieb-thirring, uhlmann, opconv or integral-rep)");
}

}  // namespace divlab

#endif  // DIVLAB_IDENTITIES_HPP
