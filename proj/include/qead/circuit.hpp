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

#include "qead/encoding.hpp"
#include "qead/gates.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace qead {

/// Random rotation angles for the autoencoder: one RX and one RZ angle per
/// (layer, qubit), drawn i.i.d. from U[0, 2*pi).
struct AnsatzParams {
  int n_qubits = 0;
  int num_layers = 0;
  Eigen::MatrixXd rx_angles;  // num_layers x n_qubits
  Eigen::MatrixXd rz_angles;
};

/// Number of register qubits reset in the bottleneck. Production sweeps use
/// 1..n-1; 0 (identity check) and n (full reset) are test-harness values.
struct CompressionLevel {
  int reset_count = 0;
};

/// The full similarity circuit for one sample:
///   both registers initialized with the sample amplitudes, encoder on
///   register A, partial reset, mirrored decoder, then an ancilla-read swap
///   test between A and B.
/// Register A = qubits [0, n), register B = [n, 2n), ancilla = 2n.
struct SimilarityCircuit {
  int n_qubits = 0;
  int total_qubits = 0;
  int ancilla_index = 0;
  Eigen::VectorXd init_amplitudes;  // loaded into both registers
  std::vector<GateOp> ops;
  // Span markers into `ops`: [0, encoder_end) encoder, [encoder_end,
  // reset_end) resets, [reset_end, decoder_end) decoder, rest swap test.
  std::size_t encoder_end = 0;
  std::size_t reset_end = 0;
  std::size_t decoder_end = 0;
};

/// Draws ansatz angles deterministically from a seed.
AnsatzParams draw_params(int n_qubits, int num_layers, std::uint64_t seed);

/// Per layer: RX on every qubit, RZ on every qubit, then the linear CX chain
/// (q, q+1) for q = 0..n-2. Targets are register-A indices [0, n).
std::vector<GateOp> build_encoder(const AnsatzParams& params);

/// Exact inverse of the encoder: reversed op order with negated angles.
std::vector<GateOp> build_decoder(const AnsatzParams& params);

/// Assembles the full circuit for one encoded sample at one compression
/// level. The reset set is the `reset_count` highest-index qubits of
/// register A.
SimilarityCircuit build_circuit(const AmplitudeVector& sample,
                                const AnsatzParams& params,
                                CompressionLevel level);

}  // namespace qead
