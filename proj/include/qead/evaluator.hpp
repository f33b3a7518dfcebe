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

#include "qead/circuit.hpp"
#include "qead/noise.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace qead {

/// Exact ancilla-zero probability of a similarity circuit, computed on the
/// full 2n+1-qubit state: statevector until the first reset, density matrix
/// from there on (from the start when gate noise is enabled). This is the
/// reference engine; it is exact but touches 4^(2n+1)-entry matrices.
double evaluate_full(const SimilarityCircuit& circuit,
                     const NoiseConfig& noise = {});

/// Heisenberg-picture image of the ancilla-zero projector under the swap-test
/// tail (H, controlled-swaps, H, with their noise channels). Register B and
/// the ancilla are untouched before the tail, so the tail's entire effect on
/// the measured probability collapses into one constant operator:
///
///   P0 = Re Tr[ M(phi) * rho_A ],   M(phi) = Tr_B[ O * (I_A (x) |phi><phi|) ]
///
/// where O is the propagated projector restricted to the ancilla-zero block.
/// Building it costs one small circuit evaluation per run; afterwards every
/// similarity evaluation touches only 2^n-dimensional register-A states.
class SwapTestObservable {
 public:
  SwapTestObservable(int n_qubits, const NoiseConfig& noise = {});

  int n_qubits() const { return n_qubits_; }

  /// Ancilla-zero block of the propagated projector, indexed by (B, A) basis
  /// pairs: dimension 4^n.
  const Eigen::MatrixXcd& block() const { return block_; }

  /// M(phi) for a reference state with real amplitudes phi.
  Eigen::MatrixXcd contract_reference(const Eigen::VectorXd& phi) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd block_;
};

/// Same value as evaluate_full, via the register-A factorization.
double evaluate_compact(const SimilarityCircuit& circuit,
                        const SwapTestObservable& observable,
                        const NoiseConfig& noise = {});

/// All compression levels of one sample under one parameter set, sharing the
/// encoded register state and the reference contraction across levels. This
/// is the pipeline's exact-mode engine.
std::vector<double> evaluate_levels(const AmplitudeVector& sample,
                                    const AnsatzParams& params,
                                    std::span<const CompressionLevel> levels,
                                    const SwapTestObservable& observable,
                                    const NoiseConfig& noise = {});

}  // namespace qead
