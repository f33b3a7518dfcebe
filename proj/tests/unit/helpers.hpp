// Copyright 2026 The QEAD Authors
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

#pragma once

#include "qead/rng.hpp"
#include "qead/statevector.hpp"

#include <Eigen/Dense>

#include <complex>

namespace qead::test {

/// Haar-ish random pure state: i.i.d. complex gaussian entries, normalized.
inline Eigen::VectorXcd random_state(int num_qubits, SplitMix64& rng) {
  const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
  Eigen::VectorXcd state(dim);
  for (std::ptrdiff_t i = 0; i < dim; ++i) {
    state[i] = std::complex<double>(standard_normal(rng), standard_normal(rng));
  }
  state /= state.norm();
  return state;
}

/// Full unitary of a gate, reconstructed column-by-column from the
/// statevector kernel.
inline Eigen::MatrixXcd gate_unitary(const GateOp& op, int num_qubits) {
  const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::ptrdiff_t j = 0; j < dim; ++j) {
    Statevector<double> sv = basis_state<double>(num_qubits,
                                                 static_cast<std::size_t>(j));
    apply_gate(sv, op);
    u.col(j) = sv.amps;
  }
  return u;
}

}  // namespace qead::test
