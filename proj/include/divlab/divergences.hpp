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

#ifndef DIVLAB_DIVERGENCES_HPP
#define DIVLAB_DIVERGENCES_HPP

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "divlab/matrix.hpp"

namespace divlab {

//=========================================================================
// Parameters
//=========================================================================

/// Exponent triple (p, q, s) of Psi_{p,q,s}. The (alpha, z) family lives on
/// the slice s = 1/(p+q) via p = alpha/z, q = (1-alpha)/z.
struct ParamPoint {
  double p = 0.0;
  double q = 0.0;
  double s = 1.0;

  static ParamPoint from_alpha_z(double alpha, double z) {
    if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
      throw InvalidArgument("alpha must be positive, finite and different from 1");
    if (!(z > 0.0) || !std::isfinite(z)) throw InvalidArgument("z must be positive and finite");
    return {alpha / z, (1.0 - alpha) / z, z};
  }

  /// alpha = p/(p+q), z = 1/(p+q). Requires p + q != 0.
  std::pair<double, double> to_alpha_z() const {
    const double sum = p + q;
    if (sum == 0.0) throw InvalidArgument("(alpha, z) conversion needs p + q != 0");
    return {p / sum, 1.0 / sum};
  }

  bool operator==(const ParamPoint&) const = default;
};

/// Value of a divergence in nats; +inf on support violation.
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;

  static DivergenceValue infinite() { return {std::numeric_limits<double>::infinity(), false}; }
  operator double() const { return value; }
};

//=========================================================================
// Trace functionals
//=========================================================================

namespace detail {

/// Hermitian matrix B^{q/2} K* A^p K B^{q/2} from the operand spectra.
inline HermitianMatrix psi_inner(const Spectrum& a, const Spectrum& b, const ComplexMatrix& k, double p, double q,
                                 SpectralConvention convention) {
  if (k.rows() != a.dim() || k.cols() != b.dim())
    throw InvalidArgument("psi: K is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                          " but A, B have dimensions " + std::to_string(a.dim()) + ", " + std::to_string(b.dim()));
  const ComplexMatrix ap = apply_function(a, fn::power(p), convention);
  const ComplexMatrix bh = apply_function(b, fn::power(q / 2.0), convention);
  return HermitianMatrix::symmetrize(bh * k.adjoint() * ap * k * bh);
}

/// Tr X^s for the Hermitian PSD matrix X.
inline double trace_power(const HermitianMatrix& x, double s, SpectralConvention convention) {
  const Spectrum spec = eig_hermitian(x);
  if (s <= 0.0 && convention == SpectralConvention::Strict && spec.min() < tolerances().eigenvalue_floor)
    throw DomainError("inner matrix has eigenvalue " + std::to_string(spec.min()) +
                      " below floor while s <= 0 (singular input; K must be invertible)");
  return trace_function(spec, fn::power(s), convention);
}

inline double psi_spectra(const Spectrum& a, const Spectrum& b, const ComplexMatrix& k, const ParamPoint& pt,
                          SpectralConvention convention) {
  return trace_power(psi_inner(a, b, k, pt.p, pt.q, convention), pt.s, convention);
}

}  // namespace detail

/// Psi_{p,q,s}(A, B) = Tr (B^{q/2} K* A^p K B^{q/2})^s.
inline double psi(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, const ComplexMatrix& k,
                  const ParamPoint& pt) {
  return detail::psi_spectra(a.spectrum(), b.spectrum(), k, pt, SpectralConvention::Strict);
}

inline double psi(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, const ParamPoint& pt) {
  return psi(a, b, identity(a.dim()), pt);
}

/// Psi on PSD operands, with every power taken on the support (0^x = 0).
/// This is the convention needed for block states such as rho (x) |0><0|.
inline double psi_on_support(const HermitianMatrix& a, const HermitianMatrix& b, const ComplexMatrix& k,
                             const ParamPoint& pt) {
  return detail::psi_spectra(eig_hermitian(a), eig_hermitian(b), k, pt, SpectralConvention::Support);
}

/// Psi evaluated through the 2N-dimensional embedding C = diag(A, B),
/// L = [[0, K], [0, 0]]: Tr (C^{q/2} L* C^p L C^{q/2})^s.
inline double psi_block_embedding(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                  const ComplexMatrix& k, const ParamPoint& pt) {
  if (k.rows() != a.dim() || k.cols() != b.dim()) throw InvalidArgument("psi_block_embedding: K shape mismatch");
  const Eigen::Index n = a.dim() + b.dim();
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  c.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  c.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  l.topRightCorner(a.dim(), b.dim()) = k;
  const PositiveDefiniteMatrix cpd(HermitianMatrix::symmetrize(c));
  const HermitianMatrix inner = detail::psi_inner(cpd.spectrum(), cpd.spectrum(), l, pt.p, pt.q,
                                                  SpectralConvention::Strict);
  // The embedded inner matrix has an exact zero block of size dim(A).
  return detail::trace_power(inner, pt.s, SpectralConvention::Support);
}

/// Upsilon_{p,s}(A) = Tr (K* A^p K)^s.
inline double upsilon(const PositiveDefiniteMatrix& a, const ComplexMatrix& k, double p, double s) {
  if (k.rows() != a.dim()) throw InvalidArgument("upsilon: K row count must equal dim(A)");
  const ComplexMatrix ap = power(a, p);
  const HermitianMatrix inner = HermitianMatrix::symmetrize(k.adjoint() * ap * k);
  return detail::trace_power(inner, s, SpectralConvention::Strict);
}

/// Tr (1 + t M^{-1/(p+q)})^{-1} with M = B^{q/2} K* A^p K B^{q/2}.
/// Jointly concave in (A, B) for 0 <= p, q <= 1.
inline double hiai_functional(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                              const ComplexMatrix& k, double p, double q, double t) {
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0 || !(p + q > 0.0))
    throw InvalidArgument("hiai_functional: need 0 <= p, q <= 1 and p + q > 0");
  if (!(t > 0.0)) throw InvalidArgument("hiai_functional: t must be positive");
  const HermitianMatrix inner = detail::psi_inner(a.spectrum(), b.spectrum(), k, p, q, SpectralConvention::Strict);
  const Spectrum spec = eig_hermitian(inner);
  if (spec.min() < tolerances().eigenvalue_floor)
    throw DomainError("hiai_functional: singular inner matrix (K must be invertible)");
  const double exponent = -1.0 / (p + q);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < spec.dim(); ++i) acc += 1.0 / (1.0 + t * std::pow(spec.eigenvalues(i), exponent));
  return acc;
}

//=========================================================================
// Quantum divergences
//=========================================================================

namespace detail {

inline void check_alpha_z(double alpha, double z) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
    throw InvalidArgument("alpha must be positive, finite and different from 1");
  if (!(z > 0.0) || !std::isfinite(z)) throw InvalidArgument("z must be positive and finite");
}

inline void check_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("rho and sigma must have the same dimension");
}

/// Tr(rho P_ker(sigma)): weight of rho outside the support of sigma.
inline double weight_outside_support(const DensityMatrix& rho, const Spectrum& sigma) {
  const double floor = tolerances().eigenvalue_floor;
  double w = 0.0;
  for (Eigen::Index i = 0; i < sigma.dim(); ++i) {
    if (sigma.eigenvalues(i) >= floor) break;
    const auto v = sigma.eigenvectors.col(i);
    w += (v.adjoint() * rho.matrix() * v)(0, 0).real();
  }
  return w;
}

inline double entropy_term(const Spectrum& s) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const double x = s.eigenvalues(i);
    if (x > 0.0) acc += x * std::log(x);
  }
  return acc;
}

}  // namespace detail

/// D_{alpha,z}(rho||sigma) = (alpha-1)^{-1} ln( Tr(sigma^{(1-alpha)/2z} rho^{alpha/z}
/// sigma^{(1-alpha)/2z})^z / Tr rho ).
inline DivergenceValue d_alpha_z(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha, double z) {
  detail::check_alpha_z(alpha, z);
  detail::check_same_dim(rho, sigma);
  const ParamPoint pt = ParamPoint::from_alpha_z(alpha, z);
  if (pt.q < 0.0 && !sigma.is_positive_definite()) return DivergenceValue::infinite();
  const double functional =
      detail::psi_spectra(rho.spectrum(), sigma.spectrum(), identity(rho.dim()), pt, SpectralConvention::Strict);
  const double ratio = functional / rho.matrix().trace().real();
  if (!(ratio > 0.0)) return DivergenceValue::infinite();
  return {std::log(ratio) / (alpha - 1.0), true};
}

/// Petz-type Renyi divergence, z = 1.
inline DivergenceValue d_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  return d_alpha_z(rho, sigma, alpha, 1.0);
}

/// Sandwiched Renyi divergence, z = alpha.
inline DivergenceValue d_sandwiched(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  return d_alpha_z(rho, sigma, alpha, alpha);
}

/// S(rho) = -Tr rho log rho, with 0 log 0 = 0.
inline double von_neumann_entropy(const DensityMatrix& rho) { return -detail::entropy_term(rho.spectrum()); }

/// Umegaki relative entropy Tr[rho (log rho - log sigma)].
inline DivergenceValue umegaki(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::check_same_dim(rho, sigma);
  if (detail::weight_outside_support(rho, sigma.spectrum()) > tolerances().eigenvalue_floor)
    return DivergenceValue::infinite();
  const ComplexMatrix log_sigma = apply_function(sigma.spectrum(), fn::log(), SpectralConvention::Support);
  const double cross = (rho.matrix() * log_sigma).trace().real();
  return {detail::entropy_term(rho.spectrum()) - cross, true};
}

/// Belavkin-Staszewski entropy Tr[rho log(rho^{1/2} sigma^{-1} rho^{1/2})].
inline DivergenceValue bs_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::check_same_dim(rho, sigma);
  if (detail::weight_outside_support(rho, sigma.spectrum()) > tolerances().eigenvalue_floor)
    return DivergenceValue::infinite();
  const ComplexMatrix root = apply_function(rho.spectrum(), fn::sqrt());
  const ComplexMatrix sigma_inv = apply_function(sigma.spectrum(), fn::power(-1.0), SpectralConvention::Support);
  const HermitianMatrix x = HermitianMatrix::symmetrize(root * sigma_inv * root);
  const ComplexMatrix log_x = apply_function(eig_hermitian(x), fn::log(), SpectralConvention::Support);
  return {(rho.matrix() * log_x).trace().real(), true};
}

//=========================================================================
// Classical divergences
//=========================================================================

namespace detail {

inline void check_probability(std::span<const double> v, const char* name) {
  if (v.empty()) throw InvalidArgument(std::string(name) + ": empty probability vector");
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument(std::string(name) + ": entries must be >= 0");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tolerances().trace_one)
    throw InvalidArgument(std::string(name) + ": entries sum to " + std::to_string(sum) + ", not 1");
}

}  // namespace detail

/// Kullback-Leibler divergence sum r_i (ln r_i - ln s_i).
inline DivergenceValue classical_relative_entropy(std::span<const double> r, std::span<const double> s) {
  detail::check_probability(r, "r");
  detail::check_probability(s, "s");
  if (r.size() != s.size()) throw InvalidArgument("r and s must have the same length");
  double acc = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0.0) continue;
    if (s[i] == 0.0) return DivergenceValue::infinite();
    acc += r[i] * (std::log(r[i]) - std::log(s[i]));
  }
  return {acc, true};
}

/// (alpha-1)^{-1} ln sum r_i^alpha s_i^{1-alpha}.
inline DivergenceValue classical_renyi(std::span<const double> r, std::span<const double> s, double alpha) {
  detail::check_probability(r, "r");
  detail::check_probability(s, "s");
  if (r.size() != s.size()) throw InvalidArgument("r and s must have the same length");
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
    throw InvalidArgument("alpha must be positive, finite and different from 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0.0) continue;
    if (s[i] == 0.0) {
      if (alpha > 1.0) return DivergenceValue::infinite();
      continue;
    }
    acc += std::pow(r[i], alpha) * std::pow(s[i], 1.0 - alpha);
  }
  if (!(acc > 0.0)) return DivergenceValue::infinite();
  return {std::log(acc) / (alpha - 1.0), true};
}

}  // namespace divlab

#endif  // DIVLAB_DIVERGENCES_HPP
