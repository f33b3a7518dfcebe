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

#include "qead/circuit.hpp"

#include "qead/rng.hpp"

#include <stdexcept>

namespace qead {

AnsatzParams draw_params(int n_qubits, int num_layers, std::uint64_t seed) {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  if (num_layers < 1) throw std::invalid_argument("num_layers must be >= 1");
  AnsatzParams params;
  params.n_qubits = n_qubits;
  params.num_layers = num_layers;
  params.rx_angles.resize(num_layers, n_qubits);
  params.rz_angles.resize(num_layers, n_qubits);
  SplitMix64 rng(seed);
  for (int layer = 0; layer < num_layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q) params.rx_angles(layer, q) = uniform_angle(rng);
    for (int q = 0; q < n_qubits; ++q) params.rz_angles(layer, q) = uniform_angle(rng);
  }
  return params;
}

std::vector<GateOp> build_encoder(const AnsatzParams& params) {
  std::vector<GateOp> ops;
  const int n = params.n_qubits;
  ops.reserve(static_cast<std::size_t>(params.num_layers) *
              static_cast<std::size_t>(2 * n + (n - 1)));
  for (int layer = 0; layer < params.num_layers; ++layer) {
    for (int q = 0; q < n; ++q) ops.push_back(GateOp::rx(q, params.rx_angles(layer, q)));
    for (int q = 0; q < n; ++q) ops.push_back(GateOp::rz(q, params.rz_angles(layer, q)));
    for (int q = 0; q + 1 < n; ++q) ops.push_back(GateOp::cx(q, q + 1));
  }
  return ops;
}

std::vector<GateOp> build_decoder(const AnsatzParams& params) {
  std::vector<GateOp> encoder = build_encoder(params);
  std::vector<GateOp> ops(encoder.rbegin(), encoder.rend());
  for (GateOp& op : ops) op.angle = -op.angle;
  return ops;
}

SimilarityCircuit build_circuit(const AmplitudeVector& sample,
                                const AnsatzParams& params,
                                CompressionLevel level) {
  const int n = params.n_qubits;
  if (sample.n_qubits != n) {
    throw std::invalid_argument("sample qubit count does not match ansatz");
  }
  if (level.reset_count < 0 || level.reset_count > n) {
    throw std::invalid_argument("reset_count outside [0, n]");
  }
  SimilarityCircuit circuit;
  circuit.n_qubits = n;
  circuit.total_qubits = 2 * n + 1;
  circuit.ancilla_index = 2 * n;
  circuit.init_amplitudes = sample.amplitudes;

  circuit.ops = build_encoder(params);
  circuit.encoder_end = circuit.ops.size();

  // Bottleneck: reset the highest-index qubits of register A.
  for (int k = 0; k < level.reset_count; ++k) {
    circuit.ops.push_back(GateOp::reset(n - 1 - k));
  }
  circuit.reset_end = circuit.ops.size();

  const std::vector<GateOp> decoder = build_decoder(params);
  circuit.ops.insert(circuit.ops.end(), decoder.begin(), decoder.end());
  circuit.decoder_end = circuit.ops.size();

  circuit.ops.push_back(GateOp::h(circuit.ancilla_index));
  for (int q = 0; q < n; ++q) {
    circuit.ops.push_back(GateOp::cswap(circuit.ancilla_index, q, n + q));
  }
  circuit.ops.push_back(GateOp::h(circuit.ancilla_index));
  return circuit;
}

}  // namespace qead
