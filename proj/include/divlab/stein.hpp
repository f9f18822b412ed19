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

#ifndef DIVLAB_STEIN_HPP
#define DIVLAB_STEIN_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "divlab/divergences.hpp"
#include "divlab/io.hpp"
#include "divlab/matrix.hpp"
#include "json.hpp"

namespace divlab {

/// Probability vector on {0, ..., k-1}.
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> probs) : p_(std::move(probs)) {
    detail::check_probability(p_, "distribution");
  }
  std::size_t size() const { return p_.size(); }
  const std::vector<double>& probs() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

struct HypothesisTestResult {
  int N = 0;
  double epsilon = 0.0;
  double log_beta = 0.0;   // natural log; -inf when the accepted set has zero s-mass
  double rate = 0.0;       // -log_beta / N
  double coverage = 0.0;   // r-mass (Tr rho P) of the accepted set
  std::string acceptance_summary;

  bool beta_zero() const { return std::isinf(log_beta) && log_beta < 0; }

  nlohmann::json to_json() const {
    auto num = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(format_double(x)); };
    return {{"N", N},          {"epsilon", epsilon},   {"log_beta", num(log_beta)},
            {"rate", num(rate)}, {"coverage", coverage}, {"acceptance", acceptance_summary}};
  }
};

namespace detail {

constexpr double kCoverageSlack = 1e-12;

inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

inline void check_test_args(double epsilon, int n) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (n < 1) throw InvalidArgument("N must be >= 1");
}

struct TypeClass {
  double log_count;   // log multinomial coefficient
  double log_r;       // log r^N of one sequence
  double log_s;
  double log_ratio;   // log_r - log_s, +inf where s vanishes
};

inline void enumerate_types(const ClassicalDistribution& r, const ClassicalDistribution& s, int n,
                            std::vector<TypeClass>& out) {
  const std::size_t k = r.size();
  std::vector<int> counts(k, 0);
  const double lg_n = std::lgamma(n + 1.0);
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  auto emit = [&]() {
    TypeClass t{lg_n, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < k; ++i) {
      t.log_count -= std::lgamma(counts[i] + 1.0);
      if (counts[i] == 0) continue;
      t.log_r += r[i] > 0.0 ? counts[i] * std::log(r[i]) : ninf;
      t.log_s += s[i] > 0.0 ? counts[i] * std::log(s[i]) : ninf;
    }
    if (t.log_r == ninf) t.log_ratio = ninf;
    else if (t.log_s == ninf) t.log_ratio = std::numeric_limits<double>::infinity();
    else t.log_ratio = t.log_r - t.log_s;
    out.push_back(t);
  };
  // Compositions of n into k parts, in lexicographic order.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == k) {
      counts[i] = left;
      emit();
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, n);
}

}  // namespace detail

/// Smallest s^N-mass of a deterministic acceptance set with r^N-mass at
/// least 1 - epsilon. Sequences are taken in decreasing likelihood ratio,
/// type class by type class; the boundary class contributes only as many
/// sequences as the coverage constraint needs. The accepted set is never
/// empty.
inline HypothesisTestResult classical_beta(const ClassicalDistribution& r, const ClassicalDistribution& s,
                                           double epsilon, int n) {
  detail::check_test_args(epsilon, n);
  if (r.size() != s.size()) throw InvalidArgument("classical_beta: r and s must share an alphabet");
  const double k = double(r.size());
  if (std::lgamma(n + k) - std::lgamma(n + 1.0) - std::lgamma(k) > std::log(5e6))
    throw InvalidArgument("classical_beta: too many type classes for N = " + std::to_string(n));
  std::vector<detail::TypeClass> types;
  detail::enumerate_types(r, s, n, types);
  std::vector<std::size_t> order(types.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return types[a].log_ratio > types[b].log_ratio; });

  const double target = (1.0 - epsilon) - detail::kCoverageSlack;
  double covered = 0.0;
  double log_beta = -std::numeric_limits<double>::infinity();
  std::size_t full = 0;
  double boundary_taken = 0.0, boundary_size = 0.0, boundary_ratio = 0.0;
  for (std::size_t idx : order) {
    const auto& t = types[idx];
    if (t.log_r == -std::numeric_limits<double>::infinity()) break;
    const double type_mass = std::exp(t.log_count + t.log_r);
    if (covered + type_mass < target) {
      covered += type_mass;
      log_beta = detail::log_add(log_beta, t.log_count + t.log_s);
      ++full;
      continue;
    }
    // Boundary class: m sequences, each of r-mass exp(log_r).
    const double log_need = std::log(std::max(target - covered, 0.0)) - t.log_r;
    double log_m;
    if (log_need > 40.0) {
      log_m = std::min(log_need, t.log_count);
    } else {
      const double m = std::max(1.0, std::ceil(std::exp(log_need) - 1e-9));
      log_m = std::min(std::log(m), t.log_count);
    }
    covered += std::exp(log_m + t.log_r);
    log_beta = detail::log_add(log_beta, log_m + t.log_s);
    if (log_m >= t.log_count - 1e-9 && covered < target) {
      ++full;
      continue;
    }
    boundary_taken = std::exp(log_m);
    boundary_size = std::exp(t.log_count);
    boundary_ratio = t.log_ratio;
    break;
  }
  HypothesisTestResult res;
  res.N = n;
  res.epsilon = epsilon;
  res.log_beta = log_beta;
  res.rate = -log_beta / n;
  res.coverage = covered;
  res.acceptance_summary = std::to_string(full) + " full type classes; boundary log-likelihood ratio " +
                           format_double(boundary_ratio) + " with " + format_double(boundary_taken) + " of " +
                           format_double(boundary_size) + " sequences";
  return res;
}

/// Rates -log beta_N / N for each N.
inline std::vector<HypothesisTestResult> error_exponent_curve(const ClassicalDistribution& r,
                                                              const ClassicalDistribution& s, double epsilon,
                                                              const std::vector<int>& ns) {
  std::vector<HypothesisTestResult> out;
  for (int n : ns) out.push_back(classical_beta(r, s, epsilon, n));
  return out;
}

namespace detail {

inline ComplexMatrix tensor_power(const ComplexMatrix& m, int n) {
  ComplexMatrix out = m;
  for (int i = 1; i < n; ++i) out = tensor(out, m);
  return out;
}

/// Best prefix of the eigenbasis of R - tS (eigenvalues descending) meeting
/// the coverage target. Returns {log Tr S P, Tr R P}.
inline std::pair<double, double> np_projection(const ComplexMatrix& big_r, const ComplexMatrix& big_s, double t,
                                               double target) {
  const ComplexMatrix diff = hermitian_part(big_r - t * big_s);
  const Spectrum sp = diff.rows() > 16 ? tridiagonal_eigen(diff) : jacobi_eigen(diff);
  const Eigen::Index d = sp.dim();
  // <v_i, R v_i> and <v_i, S v_i> for every eigenvector at once.
  const ComplexMatrix rv = big_r * sp.eigenvectors, sv = big_s * sp.eigenvectors;
  double cov = 0.0, beta = 0.0;
  for (Eigen::Index i = d - 1; i >= 0; --i) {
    cov += sp.eigenvectors.col(i).dot(rv.col(i)).real();
    beta += std::max(0.0, sp.eigenvectors.col(i).dot(sv.col(i)).real());
    if (cov >= target) break;
  }
  return {std::log(beta), cov};
}

}  // namespace detail

/// Neyman-Pearson projection family on rho^N vs sigma^N. For t on a
/// geometric grid the projections onto leading eigenvectors of
/// rho^N - t sigma^N are scanned; one refinement pass with an eighth of
/// the points follows around the best t. The result is an upper bound on
/// the optimal projective test, not a certified optimum.
inline HypothesisTestResult quantum_beta_np_family(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                   double epsilon, int n, int grid_points = 400) {
  detail::check_test_args(epsilon, n);
  if (rho.dim() != sigma.dim()) throw InvalidArgument("quantum_beta: rho and sigma must share a dimension");
  if (grid_points < 2) throw InvalidArgument("quantum_beta: need at least 2 grid points");
  if (std::pow(double(rho.dim()), n) > 4096.0) throw InvalidArgument("quantum_beta: dim^N exceeds 4096");
  const ComplexMatrix big_r = detail::tensor_power(rho.matrix(), n);
  const ComplexMatrix big_s = detail::tensor_power(sigma.matrix(), n);
  const double floor = tolerances().eigenvalue_floor;
  const double lo = n * (std::log(std::max(rho.spectrum().min(), floor)) - std::log(std::max(sigma.spectrum().max(), floor)));
  const double hi = n * (std::log(std::max(rho.spectrum().max(), floor)) - std::log(std::max(sigma.spectrum().min(), floor)));
  const double target = (1.0 - epsilon) - detail::kCoverageSlack;

  double best_log_beta = std::numeric_limits<double>::infinity(), best_cov = 0.0, best_log_t = lo;
  auto scan = [&](double a, double b, int points) {
    for (int i = 0; i < points; ++i) {
      const double log_t = a + (b - a) * double(i) / double(points - 1);
      const auto [lb, cov] = detail::np_projection(big_r, big_s, std::exp(log_t), target);
      if (cov >= target && lb < best_log_beta) {
        best_log_beta = lb;
        best_cov = cov;
        best_log_t = log_t;
      }
    }
  };
  const double pad = 1.0;
  scan(lo - pad, hi + pad, grid_points);
  if (best_log_beta == std::numeric_limits<double>::infinity())
    throw ConvergenceError("quantum_beta: no grid point meets the coverage constraint");
  const double step = (hi - lo + 2 * pad) / double(grid_points - 1);
  scan(best_log_t - step, best_log_t + step, std::max(8, grid_points / 8));

  HypothesisTestResult res;
  res.N = n;
  res.epsilon = epsilon;
  res.log_beta = best_log_beta;
  res.rate = -best_log_beta / n;
  res.coverage = best_cov;
  res.acceptance_summary = "projection family, log t = " + format_double(best_log_t);
  return res;
}

struct BsGap {
  double umegaki = 0.0;
  double bs = 0.0;
  double gap = 0.0;
  double commutator_norm = 0.0;
  bool strict = false;  // commutator above 1e-8 and gap above 1e-10

  nlohmann::json to_json() const {
    return {{"umegaki", umegaki}, {"bs", bs}, {"gap", gap}, {"commutator_norm", commutator_norm}, {"strict", strict}};
  }
};

inline BsGap bs_gap_report(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!sigma.is_positive_definite()) throw InvalidArgument("bs_gap_report: sigma must be positive definite");
  BsGap g;
  g.umegaki = umegaki(rho, sigma).value;
  g.bs = bs_entropy(rho, sigma).value;
  g.gap = g.bs - g.umegaki;
  g.commutator_norm = commutator_norm(rho.matrix(), sigma.matrix());
  g.strict = g.commutator_norm > 1e-8 && g.gap > 1e-10;
  return g;
}

}  // namespace divlab

#endif  // DIVLAB_STEIN_HPP
