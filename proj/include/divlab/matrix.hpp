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

#ifndef DIVLAB_MATRIX_HPP
#define DIVLAB_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "divlab/config.hpp"
#include "divlab/random.hpp"
#include "json.hpp"

namespace divlab {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. All other matrix types wrap one.
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

//=========================================================================
// Small helpers
//=========================================================================

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix diagonal(const std::vector<double>& d) {
  ComplexMatrix m = ComplexMatrix::Zero(Eigen::Index(d.size()), Eigen::Index(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(Eigen::Index(i), Eigen::Index(i)) = d[i];
  return m;
}

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

inline double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
  return r;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) * 0.5; }

inline double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b - b * a).norm(); }

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

//=========================================================================
// Spectrum and the eigensolver
//=========================================================================

/// Eigen-decomposition M = V diag(lambda) V*, eigenvalues ascending.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns

  Eigen::Index dim() const { return eigenvalues.size(); }
  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
  }
};

namespace detail {

inline Spectrum sorted_spectrum(RealVector values, ComplexMatrix vectors) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    s.eigenvalues(k) = values(order[std::size_t(k)]);
    s.eigenvectors.col(k) = vectors.col(order[std::size_t(k)]);
  }
  return s;
}

/// Cyclic Jacobi for complex Hermitian input. Each rotation is a phase
/// change making a_pq real followed by a real Givens rotation.
inline Spectrum jacobi_eigen(const ComplexMatrix& m) {
  const Tolerances& tol = tolerances();
  const Eigen::Index n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = identity(n);
  const double norm = a.norm();
  const double threshold = tol.jacobi_threshold * norm;

  auto off_norm = [&]() {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
  };

  bool converged = norm == 0.0 || off_norm() <= threshold;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx cph = std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * cph * akq;
          a(k, q) = s * akp + c * cph * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * cph * vkq;
          v(k, q) = s * vkp + c * cph * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
    converged = off_norm() <= threshold;
  }
  if (!converged)
    throw ConvergenceError("Jacobi eigensolver did not converge within " + std::to_string(tol.jacobi_max_sweeps) +
                           " sweeps");
  RealVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) values(i) = a(i, i).real();
  return sorted_spectrum(std::move(values), std::move(v));
}

inline Spectrum tridiagonal_eigen(const ComplexMatrix& m) {
  const Eigen::MatrixXcd col = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(col);
  if (solver.info() != Eigen::Success) throw ConvergenceError("tridiagonal QR eigensolver failed");
  return sorted_spectrum(solver.eigenvalues(), solver.eigenvectors());
}

}  // namespace detail

class HermitianMatrix;
Spectrum eig_hermitian(const HermitianMatrix& m);

//=========================================================================
// Typed matrices
//=========================================================================

/// Square matrix equal to its adjoint.
class HermitianMatrix {
 public:
  /// Checked: |M - M*| must be within tolerance (relative to max(1, max|M|)).
  explicit HermitianMatrix(const ComplexMatrix& m) : m_(m) {
    require_square(m, "HermitianMatrix");
    if (!all_finite(m)) throw InvariantViolation("HermitianMatrix: non-finite entry");
    const double asym = max_abs(m - m.adjoint());
    if (asym > tolerances().hermitian_abs * std::max(1.0, max_abs(m)))
      throw InvariantViolation("HermitianMatrix: not Hermitian (max |M - M*| = " + std::to_string(asym) + ")");
    m_ = hermitian_part(m);
  }

  /// Unchecked projection onto the Hermitian part; for products that are
  /// Hermitian in exact arithmetic.
  static HermitianMatrix symmetrize(const ComplexMatrix& m) {
    require_square(m, "HermitianMatrix");
    if (!all_finite(m)) throw InvariantViolation("HermitianMatrix: non-finite entry");
    HermitianMatrix h;
    h.m_ = hermitian_part(m);
    return h;
  }

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

 private:
  HermitianMatrix() = default;
  ComplexMatrix m_;
};

/// Deterministic for fixed input. Jacobi up to jacobi_max_dim, tridiagonal
/// QR above.
inline Spectrum eig_hermitian(const HermitianMatrix& m) {
  if (m.dim() <= tolerances().jacobi_max_dim) return detail::jacobi_eigen(m.matrix());
  return detail::tridiagonal_eigen(m.matrix());
}

/// Hermitian with all eigenvalues >= eigenvalue_floor. Caches its spectrum.
class PositiveDefiniteMatrix {
 public:
  explicit PositiveDefiniteMatrix(HermitianMatrix h) : h_(std::move(h)), spectrum_(eig_hermitian(h_)) {
    if (spectrum_.min() < tolerances().eigenvalue_floor)
      throw InvariantViolation("PositiveDefiniteMatrix: minimum eigenvalue " + std::to_string(spectrum_.min()) +
                               " below floor");
  }
  explicit PositiveDefiniteMatrix(const ComplexMatrix& m) : PositiveDefiniteMatrix(HermitianMatrix(m)) {}

  Eigen::Index dim() const { return h_.dim(); }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const Spectrum& spectrum() const { return spectrum_; }
  double min_eigenvalue() const { return spectrum_.min(); }

 private:
  HermitianMatrix h_;
  Spectrum spectrum_;
};

/// Positive semidefinite with unit trace. May be singular.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix h) : h_(std::move(h)), spectrum_(eig_hermitian(h_)) {
    const Tolerances& tol = tolerances();
    if (std::abs(h_.trace() - 1.0) > tol.trace_one)
      throw InvariantViolation("DensityMatrix: trace " + std::to_string(h_.trace()) + " differs from 1");
    if (spectrum_.min() < -tol.psd_slack * std::max(1.0, spectrum_.max()))
      throw InvariantViolation("DensityMatrix: negative eigenvalue " + std::to_string(spectrum_.min()));
  }
  explicit DensityMatrix(const ComplexMatrix& m) : DensityMatrix(HermitianMatrix(m)) {}

  /// Divide a PSD matrix by its trace.
  static DensityMatrix normalized(const ComplexMatrix& m) {
    const double tr = m.trace().real();
    if (!(tr > 0.0)) throw InvariantViolation("DensityMatrix: cannot normalize matrix with trace <= 0");
    return DensityMatrix(HermitianMatrix::symmetrize(m / tr));
  }

  Eigen::Index dim() const { return h_.dim(); }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const Spectrum& spectrum() const { return spectrum_; }
  bool is_positive_definite() const { return spectrum_.min() >= tolerances().eigenvalue_floor; }
  PositiveDefiniteMatrix as_positive_definite() const { return PositiveDefiniteMatrix(h_); }

 private:
  HermitianMatrix h_;
  Spectrum spectrum_;
};

/// U U* = I within unitary_fro.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {
    require_square(u_, "UnitaryMatrix");
    const double err = (u_ * u_.adjoint() - identity(u_.rows())).norm();
    if (!(err <= tolerances().unitary_fro))
      throw InvariantViolation("UnitaryMatrix: ||UU* - I||_F = " + std::to_string(err));
  }
  Eigen::Index dim() const { return u_.rows(); }
  const ComplexMatrix& matrix() const { return u_; }

 private:
  ComplexMatrix u_;
};

//=========================================================================
// Spectral calculus
//=========================================================================

enum class FunctionDomain { All, NonNegative, Positive };

/// Real scalar function with the part of the real line it accepts.
struct ScalarFunction {
  std::function<double(double)> f;
  FunctionDomain domain = FunctionDomain::All;
  std::string name;
};

namespace fn {

inline ScalarFunction power(double exponent) {
  if (exponent == 0.0) return {[](double) { return 1.0; }, FunctionDomain::NonNegative, "x^0"};
  if (exponent == 1.0) return {[](double x) { return x; }, FunctionDomain::All, "x"};
  if (exponent == 2.0) return {[](double x) { return x * x; }, FunctionDomain::All, "x^2"};
  return {[exponent](double x) { return std::pow(x, exponent); },
          exponent > 0.0 ? FunctionDomain::NonNegative : FunctionDomain::Positive,
          "x^" + std::to_string(exponent)};
}
inline ScalarFunction sqrt() {
  return {[](double x) { return std::sqrt(x); }, FunctionDomain::NonNegative, "sqrt"};
}
inline ScalarFunction log() {
  return {[](double x) { return std::log(x); }, FunctionDomain::Positive, "log"};
}
inline ScalarFunction exp() {
  return {[](double x) { return std::exp(x); }, FunctionDomain::All, "exp"};
}

}  // namespace fn

/// How eigenvalues near zero are treated.
///   Strict:  domain violations throw.
///   Support: eigenvalues below the floor map to 0 whatever f is (the
///            generalized-inverse convention, used on singular block states).
enum class SpectralConvention { Strict, Support };

/// Values f(lambda_i) with domain checks applied.
inline RealVector map_eigenvalues(const Spectrum& s, const ScalarFunction& f,
                                  SpectralConvention convention = SpectralConvention::Strict) {
  const Tolerances& tol = tolerances();
  const double scale = std::max({1.0, std::abs(s.min()), std::abs(s.max())});
  RealVector out(s.dim());
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    double x = s.eigenvalues(i);
    if (convention == SpectralConvention::Support && f.domain != FunctionDomain::All &&
        x < tol.eigenvalue_floor) {
      if (x < -tol.psd_slack * scale)
        throw DomainError(f.name + ": negative eigenvalue " + std::to_string(x) + " on a PSD operand");
      out(i) = 0.0;
      continue;
    }
    switch (f.domain) {
      case FunctionDomain::All:
        break;
      case FunctionDomain::NonNegative:
        if (x < -tol.psd_slack * scale)
          throw DomainError(f.name + ": eigenvalue " + std::to_string(x) + " outside [0, inf)");
        x = std::max(x, 0.0);
        break;
      case FunctionDomain::Positive:
        if (x < tol.eigenvalue_floor)
          throw DomainError(f.name + ": eigenvalue " + std::to_string(x) +
                            " below floor; a positive definite argument is required");
        break;
    }
    out(i) = f.f(x);
  }
  return out;
}

/// V diag(f(lambda)) V*.
inline ComplexMatrix apply_function(const Spectrum& s, const ScalarFunction& f,
                                    SpectralConvention convention = SpectralConvention::Strict) {
  const RealVector fv = map_eigenvalues(s, f, convention);
  return s.eigenvectors * fv.cast<cplx>().asDiagonal() * s.eigenvectors.adjoint();
}

inline HermitianMatrix matrix_function(const HermitianMatrix& m, const ScalarFunction& f) {
  return HermitianMatrix::symmetrize(apply_function(eig_hermitian(m), f));
}

inline ComplexMatrix power(const PositiveDefiniteMatrix& a, double exponent) {
  return apply_function(a.spectrum(), fn::power(exponent));
}

/// Tr f(M) without forming f(M).
inline double trace_function(const Spectrum& s, const ScalarFunction& f,
                             SpectralConvention convention = SpectralConvention::Strict) {
  return map_eigenvalues(s, f, convention).sum();
}

//=========================================================================
// Tensor products and partial traces
//=========================================================================

inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Trace out tensor factor `factor` (1 or 2) of M acting on C^n (x) C^m.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, int factor, Eigen::Index n, Eigen::Index mdim) {
  if (factor != 1 && factor != 2) throw InvalidArgument("partial_trace: factor must be 1 or 2");
  if (n < 1 || mdim < 1 || m.rows() != n * mdim || m.cols() != n * mdim)
    throw InvalidArgument("partial_trace: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected square of dimension " + std::to_string(n) + "*" + std::to_string(mdim));
  if (factor == 2) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < mdim; ++k) out(i, j) += m(i * mdim + k, j * mdim + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(mdim, mdim);
  for (Eigen::Index k = 0; k < mdim; ++k)
    for (Eigen::Index l = 0; l < mdim; ++l)
      for (Eigen::Index i = 0; i < n; ++i) out(k, l) += m(i * mdim + k, i * mdim + l);
  return out;
}

//=========================================================================
// Random ensembles
//=========================================================================

/// Complex Ginibre matrix, entries with E|g|^2 = 1.
inline ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

/// Haar unitary: QR of a Ginibre sample with the phases of diag(R) moved
/// into Q, so the triangular factor has positive real diagonal.
inline UnitaryMatrix random_haar_unitary(Eigen::Index dim, CounterRng& rng) {
  if (dim < 1) throw InvalidArgument("random_haar_unitary: dim must be >= 1");
  const Eigen::MatrixXcd g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : cplx(1.0);
  }
  return UnitaryMatrix(ComplexMatrix(q));
}

inline UnitaryMatrix random_haar_unitary(Eigen::Index dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_haar_unitary(dim, rng);
}

/// GUE-like sample (G + G*)/2.
inline HermitianMatrix random_hermitian(Eigen::Index dim, CounterRng& rng) {
  if (dim < 1) throw InvalidArgument("random_hermitian: dim must be >= 1");
  return HermitianMatrix::symmetrize(random_ginibre(dim, dim, rng));
}

inline HermitianMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_hermitian(dim, rng);
}

/// Normalized Wishart G G* / tr with G of shape dim x rank.
inline DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, CounterRng& rng) {
  if (dim < 1 || rank < 1 || rank > dim)
    throw InvalidArgument("random_density: need 1 <= rank <= dim (dim=" + std::to_string(dim) +
                          ", rank=" + std::to_string(rank) + ")");
  const ComplexMatrix g = random_ginibre(dim, rank, rng);
  return DensityMatrix::normalized(g * g.adjoint());
}

inline DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_density(dim, rank, rng);
}

/// Haar conjugation of eigenvalues uniform in [lo, hi].
inline PositiveDefiniteMatrix random_positive_definite(Eigen::Index dim, double lo, double hi, CounterRng& rng) {
  if (dim < 1) throw InvalidArgument("random_positive_definite: dim must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
    throw InvalidArgument("random_positive_definite: spectrum range must satisfy 0 < lo <= hi < inf");
  const UnitaryMatrix u = random_haar_unitary(dim, rng);
  RealVector d(dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i) = rng.uniform(lo, hi);
  const ComplexMatrix m = u.matrix() * d.cast<cplx>().asDiagonal() * u.matrix().adjoint();
  return PositiveDefiniteMatrix(HermitianMatrix::symmetrize(m));
}

inline PositiveDefiniteMatrix random_positive_definite(Eigen::Index dim, double lo, double hi, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_positive_definite(dim, lo, hi, rng);
}

//=========================================================================
// Matrix file format
//=========================================================================

/// {"dim": n, "entries": [[re, im], ...]} row-major. Non-square matrices
/// (Kraus operators of a partial trace) carry "rows"/"cols" instead of "dim".
inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json j;
  if (m.rows() == m.cols()) {
    j["dim"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back({m(i, k).real(), m(i, k).imag()});
  j["entries"] = std::move(entries);
  return j;
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("matrix: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "dim" && key != "rows" && key != "cols" && key != "entries")
      throw InvalidArgument("matrix: unknown field '" + key + "'");
  Eigen::Index rows = 0, cols = 0;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
      throw InvalidArgument("matrix: field 'dim' must be a positive integer");
    rows = cols = j["dim"].get<Eigen::Index>();
  } else if (j.contains("rows") && j.contains("cols")) {
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() || j["rows"].get<long long>() < 1 ||
        j["cols"].get<long long>() < 1)
      throw InvalidArgument("matrix: fields 'rows'/'cols' must be positive integers");
    rows = j["rows"].get<Eigen::Index>();
    cols = j["cols"].get<Eigen::Index>();
  } else {
    throw InvalidArgument("matrix: missing field 'dim'");
  }
  if (!j.contains("entries") || !j["entries"].is_array())
    throw InvalidArgument("matrix: missing array field 'entries'");
  const auto& e = j["entries"];
  if (Eigen::Index(e.size()) != rows * cols)
    throw InvalidArgument("matrix: 'entries' has " + std::to_string(e.size()) + " items, expected " +
                          std::to_string(rows * cols));
  ComplexMatrix m(rows, cols);
  for (Eigen::Index idx = 0; idx < rows * cols; ++idx) {
    const auto& z = e[std::size_t(idx)];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw InvalidArgument("matrix: entry " + std::to_string(idx) + " must be [re, im]");
    m(idx / cols, idx % cols) = cplx(z[0].get<double>(), z[1].get<double>());
  }
  if (!all_finite(m)) throw InvalidArgument("matrix: non-finite entry");
  return m;
}

}  // namespace divlab

#endif  // DIVLAB_MATRIX_HPP
