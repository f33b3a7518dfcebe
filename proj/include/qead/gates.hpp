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

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qead {

// Basis convention: little-endian. Bit q of a basis index is the state of
// qubit q, so qubit 0 is the least significant bit.

enum class GateKind : std::uint8_t { kRx, kRz, kHadamard, kCx, kCswap, kReset };

/// One circuit operation: a gate or a mid-circuit reset.
struct GateOp {
  GateKind kind;
  std::array<int, 3> targets{-1, -1, -1};
  int num_targets = 0;
  double angle = 0.0;  // RX/RZ only

  static GateOp rx(int qubit, double theta) {
    return {GateKind::kRx, {qubit, -1, -1}, 1, theta};
  }
  static GateOp rz(int qubit, double theta) {
    return {GateKind::kRz, {qubit, -1, -1}, 1, theta};
  }
  static GateOp h(int qubit) {
    return {GateKind::kHadamard, {qubit, -1, -1}, 1, 0.0};
  }
  static GateOp cx(int control, int target) {
    return {GateKind::kCx, {control, target, -1}, 2, 0.0};
  }
  static GateOp cswap(int control, int a, int b) {
    return {GateKind::kCswap, {control, a, b}, 3, 0.0};
  }
  static GateOp reset(int qubit) {
    return {GateKind::kReset, {qubit, -1, -1}, 1, 0.0};
  }

  bool is_reset() const { return kind == GateKind::kReset; }
};

/// Throws std::invalid_argument unless the op's targets are distinct, in
/// range, and its angle is finite.
inline void validate_op(const GateOp& op, int num_qubits) {
  for (int i = 0; i < op.num_targets; ++i) {
    const int q = op.targets[i];
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("gate target " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
    for (int j = i + 1; j < op.num_targets; ++j) {
      if (op.targets[j] == q) {
        throw std::invalid_argument("gate targets must be distinct");
      }
    }
  }
  if (!std::isfinite(op.angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
}

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar = double>
Matrix2c<Scalar> rx_matrix(Scalar theta) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(theta / 2);
  const Scalar s = std::sin(theta / 2);
  Matrix2c<Scalar> u;
  u << C(c, 0), C(0, -s), C(0, -s), C(c, 0);
  return u;
}

template <typename Scalar = double>
Matrix2c<Scalar> rz_matrix(Scalar theta) {
  using C = std::complex<Scalar>;
  Matrix2c<Scalar> u;
  u << std::exp(C(0, -theta / 2)), C(0, 0), C(0, 0), std::exp(C(0, theta / 2));
  return u;
}

template <typename Scalar = double>
Matrix2c<Scalar> hadamard_matrix() {
  using C = std::complex<Scalar>;
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Matrix2c<Scalar> u;
  u << C(r, 0), C(r, 0), C(r, 0), C(-r, 0);
  return u;
}

/// The 2x2 matrix of a single-qubit op.
template <typename Scalar = double>
Matrix2c<Scalar> single_qubit_matrix(const GateOp& op) {
  switch (op.kind) {
    case GateKind::kRx:
      return rx_matrix<Scalar>(static_cast<Scalar>(op.angle));
    case GateKind::kRz:
      return rz_matrix<Scalar>(static_cast<Scalar>(op.angle));
    case GateKind::kHadamard:
      return hadamard_matrix<Scalar>();
    default:
      throw std::invalid_argument("not a single-qubit unitary");
  }
}

/// Basis-index image under a permutation gate (CX or CSWAP).
inline std::size_t permute_basis_index(const GateOp& op, std::size_t index) {
  switch (op.kind) {
    case GateKind::kCx: {
      const std::size_t control = std::size_t{1} << op.targets[0];
      const std::size_t target = std::size_t{1} << op.targets[1];
      return (index & control) ? (index ^ target) : index;
    }
    case GateKind::kCswap: {
      const std::size_t control = std::size_t{1} << op.targets[0];
      if (!(index & control)) return index;
      const std::size_t a = std::size_t{1} << op.targets[1];
      const std::size_t b = std::size_t{1} << op.targets[2];
      const bool bit_a = index & a;
      const bool bit_b = index & b;
      if (bit_a == bit_b) return index;
      return index ^ a ^ b;
    }
    default:
      throw std::invalid_argument("not a permutation gate");
  }
}

}  // namespace qead
