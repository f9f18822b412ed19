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

#ifndef DIVLAB_CHANNELS_HPP
#define DIVLAB_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "divlab/matrix.hpp"
#include "json.hpp"

namespace divlab {

/// Stinespring data of a channel built as E(rho) = Tr_2 U (rho (x) |0><0|) U*.
struct Dilation {
  ComplexMatrix unitary;  // on C^dim (x) C^env_dim
  Eigen::Index env_dim = 1;
};

/// CPTP map rho -> sum_j K_j rho K_j*.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus, std::optional<Dilation> dilation = std::nullopt)
      : kraus_(std::move(kraus)), dilation_(std::move(dilation)) {
    if (kraus_.empty()) throw InvariantViolation("KrausChannel: empty Kraus list");
    dim_out_ = kraus_.front().rows();
    dim_in_ = kraus_.front().cols();
    if (dim_in_ < 1 || dim_out_ < 1) throw InvariantViolation("KrausChannel: empty Kraus operator");
    ComplexMatrix completeness = ComplexMatrix::Zero(dim_in_, dim_in_);
    for (const auto& k : kraus_) {
      if (k.rows() != dim_out_ || k.cols() != dim_in_)
        throw InvariantViolation("KrausChannel: Kraus operators must share one shape");
      if (!all_finite(k)) throw InvariantViolation("KrausChannel: non-finite Kraus entry");
      completeness += k.adjoint() * k;
    }
    const double err = (completeness - identity(dim_in_)).norm();
    if (!(err <= tolerances().kraus_fro))
      throw InvariantViolation("KrausChannel: ||sum K*K - I||_F = " + std::to_string(err));
  }

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::optional<Dilation>& dilation() const { return dilation_; }

  ComplexMatrix apply_matrix(const ComplexMatrix& x) const {
    if (x.rows() != dim_in_ || x.cols() != dim_in_)
      throw InvalidArgument("channel input has dimension " + std::to_string(x.rows()) + ", expected " +
                            std::to_string(dim_in_));
    ComplexMatrix out = ComplexMatrix::Zero(dim_out_, dim_out_);
    for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
    return out;
  }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::optional<Dilation> dilation_;
  Eigen::Index dim_in_ = 0;
  Eigen::Index dim_out_ = 0;
};

inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(HermitianMatrix::symmetrize(ch.apply_matrix(rho.matrix())));
}

//=========================================================================
// Constructions
//=========================================================================

inline KrausChannel identity_channel(Eigen::Index dim) { return KrausChannel({identity(dim)}); }

/// rho -> (1 - lambda) rho + lambda I/dim.
inline KrausChannel depolarizing(Eigen::Index dim, double lambda) {
  if (dim < 1) throw InvalidArgument("depolarizing: dim must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("depolarizing: lambda must lie in [0, 1]");
  std::vector<ComplexMatrix> ops;
  if (lambda < 1.0) ops.push_back(std::sqrt(1.0 - lambda) * identity(dim));
  if (lambda > 0.0) {
    const double w = std::sqrt(lambda / double(dim));
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
        e(i, j) = w;
        ops.push_back(std::move(e));
      }
  }
  return KrausChannel(std::move(ops));
}

/// rho -> (1/M) sum_j U_j rho U_j*.
inline KrausChannel unitary_mixing(const std::vector<UnitaryMatrix>& us) {
  if (us.empty()) throw InvalidArgument("unitary_mixing: need at least one unitary");
  const double w = 1.0 / std::sqrt(double(us.size()));
  std::vector<ComplexMatrix> ops;
  for (const auto& u : us) {
    if (u.dim() != us.front().dim()) throw InvalidArgument("unitary_mixing: unitaries must share a dimension");
    ops.push_back(w * u.matrix());
  }
  return KrausChannel(std::move(ops));
}

/// Partial trace over factor 1 or 2 of C^n (x) C^m, as a channel.
inline KrausChannel partial_trace_channel(Eigen::Index n, Eigen::Index m, int factor) {
  if (n < 1 || m < 1) throw InvalidArgument("partial_trace_channel: dimensions must be >= 1");
  if (factor != 1 && factor != 2) throw InvalidArgument("partial_trace_channel: factor must be 1 or 2");
  std::vector<ComplexMatrix> ops;
  if (factor == 2) {
    for (Eigen::Index k = 0; k < m; ++k) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, m);
      bra(0, k) = 1.0;
      ops.push_back(tensor(identity(n), bra));
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, n);
      bra(0, i) = 1.0;
      ops.push_back(tensor(bra, identity(m)));
    }
  }
  return KrausChannel(std::move(ops));
}

/// Random channel from a Haar unitary U on C^dim (x) C^env_dim and the
/// environment state |0><0|: K_j = (I (x) <j|) U (I (x) |0>). Keeps the
/// dilation so the twirl identity can be checked.
inline KrausChannel random_cptp(Eigen::Index dim, Eigen::Index env_dim, CounterRng& rng) {
  if (dim < 1 || env_dim < 1) throw InvalidArgument("random_cptp: dim and env_dim must be >= 1");
  const UnitaryMatrix u = random_haar_unitary(dim * env_dim, rng);
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index a = 0; a < env_dim; ++a) {
    ComplexMatrix k(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) k(i, j) = u.matrix()(i * env_dim + a, j * env_dim);
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops), Dilation{u.matrix(), env_dim});
}

inline KrausChannel random_cptp(Eigen::Index dim, Eigen::Index env_dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_cptp(dim, env_dim, rng);
}

//=========================================================================
// Haar twirl
//=========================================================================

/// Exact average of (I (x) u) Y (I (x) u*) over Haar u on the second
/// factor: every m x m block B_kl becomes (Tr B_kl / m) I_m.
inline ComplexMatrix haar_twirl_second_factor(const ComplexMatrix& y, Eigen::Index n, Eigen::Index m) {
  if (n < 1 || m < 1 || y.rows() != n * m || y.cols() != n * m)
    throw InvalidArgument("haar_twirl_second_factor: matrix is not square of dimension n*m");
  ComplexMatrix out = ComplexMatrix::Zero(n * m, n * m);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) {
      const cplx tr = y.block(k * m, l * m, m, m).trace() / double(m);
      for (Eigen::Index d = 0; d < m; ++d) out(k * m + d, l * m + d) = tr;
    }
  return out;
}

/// Checks twirl(U (rho (x) |0><0|) U*) == E(rho) (x) I/env_dim within tol.
inline bool verify_uhlmann_identity(const KrausChannel& ch, const DensityMatrix& rho, double tol) {
  const Eigen::Index n = ch.dim_in();
  Dilation dil;
  if (ch.dilation()) {
    dil = *ch.dilation();
  } else if (ch.kraus().size() == 1 && ch.dim_in() == ch.dim_out() &&
             (ch.kraus().front() * ch.kraus().front().adjoint() - identity(n)).norm() <= tolerances().unitary_fro) {
    dil = Dilation{ch.kraus().front(), 1};  // a unitary channel is its own dilation
  } else {
    throw InvalidArgument("verify_uhlmann_identity: channel carries no dilation metadata");
  }
  if (rho.dim() != n) throw InvalidArgument("verify_uhlmann_identity: state dimension mismatch");
  const Eigen::Index e = dil.env_dim;
  ComplexMatrix tau = ComplexMatrix::Zero(e, e);
  tau(0, 0) = 1.0;
  const ComplexMatrix lifted = dil.unitary * tensor(rho.matrix(), tau) * dil.unitary.adjoint();
  const ComplexMatrix lhs = haar_twirl_second_factor(lifted, n, e);
  const ComplexMatrix rhs = tensor(ch.apply_matrix(rho.matrix()), identity(e) / double(e));
  return (lhs - rhs).norm() <= tol;
}

//=========================================================================
// Channel file format
//=========================================================================

inline nlohmann::json channel_to_json(const KrausChannel& ch) {
  nlohmann::json j;
  j["dim_in"] = ch.dim_in();
  j["dim_out"] = ch.dim_out();
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& k : ch.kraus()) ops.push_back(matrix_to_json(k));
  j["kraus"] = std::move(ops);
  return j;
}

inline KrausChannel channel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("channel: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "dim_in" && key != "dim_out" && key != "kraus")
      throw InvalidArgument("channel: unknown field '" + key + "'");
  for (const char* key : {"dim_in", "dim_out"})
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1)
      throw InvalidArgument(std::string("channel: field '") + key + "' must be a positive integer");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw InvalidArgument("channel: field 'kraus' must be a non-empty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& m : j["kraus"]) ops.push_back(matrix_from_json(m));
  KrausChannel ch(std::move(ops));
  if (ch.dim_in() != j["dim_in"].get<Eigen::Index>() || ch.dim_out() != j["dim_out"].get<Eigen::Index>())
    throw InvalidArgument("channel: Kraus shapes disagree with dim_in/dim_out");
  return ch;
}

}  // namespace divlab

#endif  // DIVLAB_CHANNELS_HPP
