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

#ifndef DIVLAB_CONFIG_HPP
#define DIVLAB_CONFIG_HPP

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace divlab {

//=========================================================================
// Errors
//=========================================================================

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition (bad dimension, parameter out of range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix does not satisfy the invariant of the type it is cast into.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Spectral calculus asked for f outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative routine did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Numerical inconsistency between two routes that must agree.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

//=========================================================================
// Tolerances
//=========================================================================

/// Every numerical threshold of the library in one place.
struct Tolerances {
  double hermitian_abs = 1e-12;       // |M - M*| entrywise
  double eigenvalue_floor = 1e-10;    // minimum eigenvalue for PD / negative powers / log
  double psd_slack = 1e-12;           // relative slack for "eigenvalue >= 0"
  double trace_one = 1e-12;           // |tr rho - 1|
  double unitary_fro = 1e-10;         // ||U U* - I||_F
  double kraus_fro = 1e-10;           // ||sum K*K - I||_F
  double reconstruction = 1e-9;       // spectral reconstruction, times dim
  int jacobi_max_sweeps = 100;
  double jacobi_threshold = 1e-13;    // off-diagonal norm relative to ||M||_F
  int jacobi_max_dim = 64;            // larger matrices use tridiagonal QR
  double violation_rel = 1e-8;        // probe violation threshold (relative)
  double boundary_rel = 1e-12;        // slack for region boundary comparisons
  double block_embedding_rel = 1e-8;  // probe cross-check agreement
};

namespace detail {

inline void apply_tolerance_overrides(Tolerances& t, const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("tolerance file: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") continue;
    if (!value.is_number()) throw InvalidArgument("tolerance file: field '" + key + "' must be a number");
    if (key == "hermitian_abs") t.hermitian_abs = value.get<double>();
    else if (key == "eigenvalue_floor") t.eigenvalue_floor = value.get<double>();
    else if (key == "psd_slack") t.psd_slack = value.get<double>();
    else if (key == "trace_one") t.trace_one = value.get<double>();
    else if (key == "unitary_fro") t.unitary_fro = value.get<double>();
    else if (key == "kraus_fro") t.kraus_fro = value.get<double>();
    else if (key == "reconstruction") t.reconstruction = value.get<double>();
    else if (key == "jacobi_max_sweeps") t.jacobi_max_sweeps = value.get<int>();
    else if (key == "jacobi_threshold") t.jacobi_threshold = value.get<double>();
    else if (key == "jacobi_max_dim") t.jacobi_max_dim = value.get<int>();
    else if (key == "violation_rel") t.violation_rel = value.get<double>();
    else if (key == "boundary_rel") t.boundary_rel = value.get<double>();
    else if (key == "block_embedding_rel") t.block_embedding_rel = value.get<double>();
    else throw InvalidArgument("tolerance file: unknown field '" + key + "'");
  }
}

inline Tolerances load_tolerances() {
  Tolerances t;
  const char* path = std::getenv("DIVLAB_TOLERANCE_FILE");
  if (path == nullptr || *path == '\0') return t;
  std::ifstream in(path);
  if (!in) throw InvalidArgument(std::string("cannot open tolerance file ") + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("tolerance file: ") + e.what());
  }
  apply_tolerance_overrides(t, j);
  return t;
}

}  // namespace detail

/// Process-wide tolerances. Read once (honouring DIVLAB_TOLERANCE_FILE) and
/// immutable afterwards.
inline const Tolerances& tolerances() {
  static const Tolerances t = detail::load_tolerances();
  return t;
}

}  // namespace divlab

#endif  // DIVLAB_CONFIG_HPP
