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

#include "qead/density_matrix.hpp"
#include "qead/gates.hpp"

#include <span>
#include <stdexcept>

namespace qead {

/// Gate-level noise model: a depolarizing channel after every gate plus a
/// classical readout flip on the measured probability. Defaults are the
/// median error rates of a current superconducting backend.
struct NoiseConfig {
  bool enabled = false;
  double depol_1q = 2.274e-4;
  double depol_2q = 2.903e-3;
  double readout_flip = 1.38e-2;

  void validate() const {
    for (double p : {depol_1q, depol_2q, readout_flip}) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("noise probability outside [0, 1]");
      }
    }
  }
};

/// Depolarizing rate for an op under the config: single-qubit rate for 1q
/// gates, two-qubit rate for entangling gates (CSWAP included; on hardware it
/// decomposes into two-qubit gates). Resets carry no gate error.
inline double depolarizing_rate(const GateOp& op, const NoiseConfig& cfg) {
  if (op.is_reset()) return 0.0;
  return op.num_targets == 1 ? cfg.depol_1q : cfg.depol_2q;
}

/// Applies the post-gate depolarizing channel on the gate's qubits.
template <typename Scalar>
void apply_gate_noise(DensityMatrix<Scalar>& dm, const GateOp& op,
                      const NoiseConfig& cfg) {
  if (!cfg.enabled) return;
  const double p = depolarizing_rate(op, cfg);
  if (p == 0.0) return;
  apply_depolarizing(dm, std::span<const int>(op.targets.data(),
                                              static_cast<std::size_t>(
                                                  op.num_targets)),
                     p);
}

/// Readout error on the ancilla-zero probability: p' = p(1-f) + (1-p)f.
inline double apply_readout_flip(double p_zero, double flip) {
  return p_zero * (1.0 - flip) + (1.0 - p_zero) * flip;
}

}  // namespace qead
