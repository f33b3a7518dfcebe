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

#include "qead/evaluator.hpp"

#include "qead/density_matrix.hpp"
#include "qead/statevector.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace qead {

namespace {

// Product state |phi>_B (x) |phi>_A with the ancilla in |0>.
Statevector<double> dual_register_state(const SimilarityCircuit& circuit) {
  const std::ptrdiff_t reg_dim = circuit.init_amplitudes.size();
  Statevector<double> sv;
  sv.num_qubits = circuit.total_qubits;
  sv.amps = Statevector<double>::Vector::Zero(std::ptrdiff_t{1}
                                              << circuit.total_qubits);
  for (std::ptrdiff_t b = 0; b < reg_dim; ++b) {
    for (std::ptrdiff_t a = 0; a < reg_dim; ++a) {
      sv.amps[b * reg_dim + a] =
          circuit.init_amplitudes[b] * circuit.init_amplitudes[a];
    }
  }
  return sv;
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

// Swap-test tail ops exactly as build_circuit emits them.
std::vector<GateOp> swap_test_tail(int n_qubits) {
  std::vector<GateOp> ops;
  const int ancilla = 2 * n_qubits;
  ops.push_back(GateOp::h(ancilla));
  for (int q = 0; q < n_qubits; ++q) {
    ops.push_back(GateOp::cswap(ancilla, q, n_qubits + q));
  }
  ops.push_back(GateOp::h(ancilla));
  return ops;
}

// Re Tr[M rho] without forming the product.
double real_trace_product(const Eigen::MatrixXcd& m,
                          const Eigen::MatrixXcd& rho) {
  return m.cwiseProduct(rho.transpose()).sum().real();
}

}  // namespace

double evaluate_full(const SimilarityCircuit& circuit,
                     const NoiseConfig& noise) {
  if (noise.enabled) {
    // Mixed from the first noisy gate on, so run the density matrix
    // end to end.
    auto dm = from_statevector(dual_register_state(circuit));
    for (const GateOp& op : circuit.ops) {
      if (op.is_reset()) {
        apply_reset(dm, op.targets[0]);
      } else {
        apply_gate(dm, op);
        apply_gate_noise(dm, op, noise);
      }
    }
    return ancilla_zero_probability(dm, circuit.ancilla_index);
  }

  Statevector<double> sv = dual_register_state(circuit);
  std::size_t i = 0;
  for (; i < circuit.ops.size() && !circuit.ops[i].is_reset(); ++i) {
    apply_gate(sv, circuit.ops[i]);
  }
  if (i == circuit.ops.size()) {
    return clamp_probability(bit_zero_probability(sv, circuit.ancilla_index));
  }
  auto dm = from_statevector(sv);
  for (; i < circuit.ops.size(); ++i) {
    const GateOp& op = circuit.ops[i];
    if (op.is_reset()) {
      apply_reset(dm, op.targets[0]);
    } else {
      apply_gate(dm, op);
    }
  }
  return ancilla_zero_probability(dm, circuit.ancilla_index);
}

SwapTestObservable::SwapTestObservable(int n_qubits, const NoiseConfig& noise)
    : n_qubits_(n_qubits) {
  const int total = 2 * n_qubits + 1;
  const std::ptrdiff_t full_dim = std::ptrdiff_t{1} << total;
  const std::ptrdiff_t half_dim = full_dim / 2;

  // Start from the ancilla-zero projector and pull it back through the tail.
  // Every tail gate is self-inverse and the depolarizing channel is
  // self-adjoint, so the pullback reuses the forward kernels.
  DensityMatrix<double> obs;
  obs.num_qubits = total;
  obs.rho = Eigen::MatrixXcd::Zero(full_dim, full_dim);
  obs.rho.topLeftCorner(half_dim, half_dim) =
      Eigen::MatrixXcd::Identity(half_dim, half_dim);

  const std::vector<GateOp> tail = swap_test_tail(n_qubits);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    apply_gate_noise(obs, *it, noise);
    apply_gate(obs, *it);
  }
  // The ancilla is the top bit, so its zero block is the leading corner.
  block_ = obs.rho.topLeftCorner(half_dim, half_dim);
}

Eigen::MatrixXcd SwapTestObservable::contract_reference(
    const Eigen::VectorXd& phi) const {
  const std::ptrdiff_t d = std::ptrdiff_t{1} << n_qubits_;
  if (phi.size() != d) {
    throw std::invalid_argument("reference state dimension mismatch");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::ptrdiff_t ib = 0; ib < d; ++ib) {
    if (phi[ib] == 0.0) continue;
    for (std::ptrdiff_t jb = 0; jb < d; ++jb) {
      if (phi[jb] == 0.0) continue;
      m += (phi[ib] * phi[jb]) * block_.block(ib * d, jb * d, d, d);
    }
  }
  return m;
}

namespace {

// Register-A evolution shared by evaluate_compact and evaluate_levels.
struct RegisterAEvolution {
  bool pure = true;                // still on the statevector fast path
  Statevector<double> sv;          // valid while pure
  DensityMatrix<double> dm;        // valid once mixed (or noisy)

  static RegisterAEvolution start(const Eigen::VectorXd& phi, int n_qubits,
                                  bool noisy) {
    RegisterAEvolution evo;
    if (noisy) {
      evo.pure = false;
      evo.dm = init_state(n_qubits, phi);
    } else {
      evo.sv = statevector_from_amplitudes(n_qubits, phi);
    }
    return evo;
  }

  void apply(const GateOp& op, const NoiseConfig& noise) {
    if (op.is_reset()) {
      promote();
      apply_reset(dm, op.targets[0]);
      return;
    }
    if (pure) {
      apply_gate(sv, op);
    } else {
      apply_gate(dm, op);
      apply_gate_noise(dm, op, noise);
    }
  }

  void promote() {
    if (pure) {
      dm = from_statevector(sv);
      pure = false;
    }
  }

  double probability(const Eigen::MatrixXcd& m) const {
    if (pure) {
      return (sv.amps.adjoint() * m * sv.amps).value().real();
    }
    return real_trace_product(m, dm.rho);
  }
};

}  // namespace

double evaluate_compact(const SimilarityCircuit& circuit,
                        const SwapTestObservable& observable,
                        const NoiseConfig& noise) {
  if (observable.n_qubits() != circuit.n_qubits) {
    throw std::invalid_argument("observable built for a different width");
  }
  for (std::size_t i = 0; i < circuit.decoder_end; ++i) {
    for (int t = 0; t < circuit.ops[i].num_targets; ++t) {
      if (circuit.ops[i].targets[t] >= circuit.n_qubits) {
        throw std::invalid_argument(
            "circuit body leaves register A; compact engine does not apply");
      }
    }
  }
  const Eigen::MatrixXcd m =
      observable.contract_reference(circuit.init_amplitudes);
  auto evo = RegisterAEvolution::start(circuit.init_amplitudes,
                                       circuit.n_qubits, noise.enabled);
  for (std::size_t i = 0; i < circuit.decoder_end; ++i) {
    evo.apply(circuit.ops[i], noise);
  }
  return clamp_probability(evo.probability(m));
}

std::vector<double> evaluate_levels(const AmplitudeVector& sample,
                                    const AnsatzParams& params,
                                    std::span<const CompressionLevel> levels,
                                    const SwapTestObservable& observable,
                                    const NoiseConfig& noise) {
  if (observable.n_qubits() != params.n_qubits) {
    throw std::invalid_argument("observable built for a different width");
  }
  const int n = params.n_qubits;
  const Eigen::MatrixXcd m = observable.contract_reference(sample.amplitudes);
  const std::vector<GateOp> encoder = build_encoder(params);
  const std::vector<GateOp> decoder = build_decoder(params);

  auto encoded = RegisterAEvolution::start(sample.amplitudes, n, noise.enabled);
  for (const GateOp& op : encoder) encoded.apply(op, noise);

  std::vector<double> out;
  out.reserve(levels.size());
  for (const CompressionLevel& level : levels) {
    if (level.reset_count < 0 || level.reset_count > n) {
      throw std::invalid_argument("reset_count outside [0, n]");
    }
    RegisterAEvolution evo = encoded;
    for (int k = 0; k < level.reset_count; ++k) {
      evo.apply(GateOp::reset(n - 1 - k), noise);
    }
    for (const GateOp& op : decoder) evo.apply(op, noise);
    out.push_back(clamp_probability(evo.probability(m)));
  }
  return out;
}

}  // namespace qead
