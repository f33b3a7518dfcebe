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

#include "qead/gates.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qead {

inline constexpr double kNormTolerance = 1e-9;

/// Pure state of `num_qubits` qubits. Valid only for circuits without resets;
/// once a reset appears the state must be promoted to a DensityMatrix.
template <typename Scalar = double>
struct Statevector {
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  int num_qubits = 0;
  Vector amps;

  std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }
};

template <typename Scalar = double>
Statevector<Scalar> basis_state(int num_qubits, std::size_t index = 0) {
  Statevector<Scalar> sv;
  sv.num_qubits = num_qubits;
  sv.amps = Statevector<Scalar>::Vector::Zero(std::ptrdiff_t{1} << num_qubits);
  sv.amps[static_cast<std::ptrdiff_t>(index)] = {1, 0};
  return sv;
}

/// Builds a pure state from explicit amplitudes. Rejects (rather than
/// renormalizes) input whose squared norm strays from 1 by more than 1e-9.
template <typename Derived>
Statevector<typename Derived::RealScalar> statevector_from_amplitudes(
    int num_qubits, const Eigen::MatrixBase<Derived>& amplitudes) {
  using Scalar = typename Derived::RealScalar;
  const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
  if (amplitudes.size() != dim) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  Statevector<Scalar> sv;
  sv.num_qubits = num_qubits;
  sv.amps = amplitudes.template cast<std::complex<Scalar>>();
  const double norm2 = sv.amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return sv;
}

/// In-place single-qubit unitary on a raw amplitude array.
template <typename Scalar>
void apply_single_qubit(typename Statevector<Scalar>::Vector& amps, int qubit,
                        const Matrix2c<Scalar>& u) {
  using Complex = std::complex<Scalar>;
  const std::size_t dim = static_cast<std::size_t>(amps.size());
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    const std::size_t pair = base | mask;
    const Complex a0 = amps[static_cast<std::ptrdiff_t>(base)];
    const Complex a1 = amps[static_cast<std::ptrdiff_t>(pair)];
    amps[static_cast<std::ptrdiff_t>(base)] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[static_cast<std::ptrdiff_t>(pair)] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

template <typename Scalar>
void apply_permutation(typename Statevector<Scalar>::Vector& amps,
                       const GateOp& op) {
  using Vector = typename Statevector<Scalar>::Vector;
  const std::size_t dim = static_cast<std::size_t>(amps.size());
  Vector out(amps.size());
  for (std::size_t i = 0; i < dim; ++i) {
    out[static_cast<std::ptrdiff_t>(permute_basis_index(op, i))] =
        amps[static_cast<std::ptrdiff_t>(i)];
  }
  amps.swap(out);
}

/// Applies a unitary gate. Resets are not representable on a pure state and
/// throw.
template <typename Scalar>
void apply_gate(Statevector<Scalar>& sv, const GateOp& op) {
  validate_op(op, sv.num_qubits);
  switch (op.kind) {
    case GateKind::kRx:
    case GateKind::kRz:
    case GateKind::kHadamard:
      apply_single_qubit<Scalar>(sv.amps, op.targets[0],
                                 single_qubit_matrix<Scalar>(op));
      return;
    case GateKind::kCx:
    case GateKind::kCswap:
      apply_permutation<Scalar>(sv.amps, op);
      return;
    case GateKind::kReset:
      throw std::invalid_argument("reset is not unitary; use a DensityMatrix");
  }
  throw std::logic_error("unreachable gate kind");
}

/// Probability that `qubit` reads 0.
template <typename Scalar>
double bit_zero_probability(const Statevector<Scalar>& sv, int qubit) {
  if (qubit < 0 || qubit >= sv.num_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::size_t mask = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < sv.dim(); ++i) {
    if (!(i & mask)) p += std::norm(sv.amps[static_cast<std::ptrdiff_t>(i)]);
  }
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace qead
