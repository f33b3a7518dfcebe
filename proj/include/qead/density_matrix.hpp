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
#include "qead/statevector.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <stdexcept>

namespace qead {

/// Possibly-mixed state of `num_qubits` qubits. Required once a reset (a
/// non-unitary channel) enters the circuit. Every operation preserves trace
/// and Hermiticity to working precision.
template <typename Scalar = double>
struct DensityMatrix {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  int num_qubits = 0;
  Matrix rho;

  std::size_t dim() const { return static_cast<std::size_t>(rho.rows()); }
};

template <typename Scalar>
DensityMatrix<Scalar> from_statevector(const Statevector<Scalar>& sv) {
  DensityMatrix<Scalar> dm;
  dm.num_qubits = sv.num_qubits;
  dm.rho = sv.amps * sv.amps.adjoint();
  return dm;
}

/// rho = |a><a| from explicit amplitudes; rejects non-normalized input.
template <typename Derived>
DensityMatrix<typename Derived::RealScalar> init_state(
    int num_qubits, const Eigen::MatrixBase<Derived>& amplitudes) {
  return from_statevector(statevector_from_amplitudes(num_qubits, amplitudes));
}

template <typename Scalar>
double trace_real(const DensityMatrix<Scalar>& dm) {
  return dm.rho.trace().real();
}

/// Tr(rho^2); equals the squared Frobenius norm for Hermitian rho.
template <typename Scalar>
double purity(const DensityMatrix<Scalar>& dm) {
  return dm.rho.squaredNorm();
}

template <typename Scalar>
bool is_hermitian(const DensityMatrix<Scalar>& dm, double tol = 1e-9) {
  return (dm.rho - dm.rho.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// rho <- U rho U^dagger for a unitary gate. Resets throw; use apply_reset.
template <typename Scalar>
void apply_gate(DensityMatrix<Scalar>& dm, const GateOp& op) {
  using Complex = std::complex<Scalar>;
  validate_op(op, dm.num_qubits);
  const std::size_t dim = dm.dim();
  switch (op.kind) {
    case GateKind::kRx:
    case GateKind::kRz:
    case GateKind::kHadamard: {
      const Matrix2c<Scalar> u = single_qubit_matrix<Scalar>(op);
      const std::size_t mask = std::size_t{1} << op.targets[0];
      // Left-multiply U: combine row pairs, one column expression at a time.
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        const std::ptrdiff_t r0 = static_cast<std::ptrdiff_t>(base);
        const std::ptrdiff_t r1 = static_cast<std::ptrdiff_t>(base | mask);
        const auto row0 = dm.rho.row(r0).eval();
        const auto row1 = dm.rho.row(r1).eval();
        dm.rho.row(r0) = u(0, 0) * row0 + u(0, 1) * row1;
        dm.rho.row(r1) = u(1, 0) * row0 + u(1, 1) * row1;
      }
      // Right-multiply U^dagger: combine column pairs.
      const Complex c00 = std::conj(u(0, 0));
      const Complex c01 = std::conj(u(0, 1));
      const Complex c10 = std::conj(u(1, 0));
      const Complex c11 = std::conj(u(1, 1));
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        const std::ptrdiff_t c0 = static_cast<std::ptrdiff_t>(base);
        const std::ptrdiff_t c1 = static_cast<std::ptrdiff_t>(base | mask);
        const auto col0 = dm.rho.col(c0).eval();
        const auto col1 = dm.rho.col(c1).eval();
        dm.rho.col(c0) = col0 * c00 + col1 * c01;
        dm.rho.col(c1) = col0 * c10 + col1 * c11;
      }
      return;
    }
    case GateKind::kCx:
    case GateKind::kCswap: {
      typename DensityMatrix<Scalar>::Matrix out(dm.rho.rows(), dm.rho.cols());
      for (std::size_t c = 0; c < dim; ++c) {
        const std::ptrdiff_t pc =
            static_cast<std::ptrdiff_t>(permute_basis_index(op, c));
        for (std::size_t r = 0; r < dim; ++r) {
          const std::ptrdiff_t pr =
              static_cast<std::ptrdiff_t>(permute_basis_index(op, r));
          out(pr, pc) = dm.rho(static_cast<std::ptrdiff_t>(r),
                               static_cast<std::ptrdiff_t>(c));
        }
      }
      dm.rho.swap(out);
      return;
    }
    case GateKind::kReset:
      throw std::invalid_argument("apply_gate cannot apply a reset");
  }
  throw std::logic_error("unreachable gate kind");
}

/// Measure-and-reinitialize channel: rho <- P0 rho P0 + X P1 rho P1 X on the
/// target qubit. The qubit's marginal afterwards is exactly |0><0|.
template <typename Scalar>
void apply_reset(DensityMatrix<Scalar>& dm, int qubit) {
  if (qubit < 0 || qubit >= dm.num_qubits) {
    throw std::invalid_argument("reset qubit out of range");
  }
  const std::size_t dim = dm.dim();
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t c = 0; c < dim; ++c) {
    if (c & mask) continue;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r & mask) continue;
      dm.rho(static_cast<std::ptrdiff_t>(r), static_cast<std::ptrdiff_t>(c)) +=
          dm.rho(static_cast<std::ptrdiff_t>(r | mask),
                 static_cast<std::ptrdiff_t>(c | mask));
    }
  }
  // Zero every entry that touches the qubit's |1> subspace.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & mask) || (c & mask)) {
        dm.rho(static_cast<std::ptrdiff_t>(r),
               static_cast<std::ptrdiff_t>(c)) = {0, 0};
      }
    }
  }
}

/// Partial trace over `traced` qubits; the result is indexed by the remaining
/// qubits in ascending order.
template <typename Scalar>
typename DensityMatrix<Scalar>::Matrix partial_trace(
    const typename DensityMatrix<Scalar>::Matrix& rho, int num_qubits,
    std::span<const int> traced) {
  std::size_t traced_mask = 0;
  for (int q : traced) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("traced qubit out of range");
    }
    traced_mask |= std::size_t{1} << q;
  }
  const int kept_qubits = num_qubits - static_cast<int>(traced.size());
  const std::size_t kept_dim = std::size_t{1} << kept_qubits;
  const std::size_t traced_dim = std::size_t{1} << traced.size();

  // expand(j, kept) scatters the bits of j into the positions selected by
  // `kept`; kept and traced positions interleave to form a full index.
  std::vector<std::size_t> kept_bits;
  std::vector<std::size_t> traced_bits;
  for (int q = 0; q < num_qubits; ++q) {
    if (traced_mask & (std::size_t{1} << q)) {
      traced_bits.push_back(std::size_t{1} << q);
    } else {
      kept_bits.push_back(std::size_t{1} << q);
    }
  }
  auto expand = [](std::size_t packed, const std::vector<std::size_t>& bits) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (packed & (std::size_t{1} << i)) out |= bits[i];
    }
    return out;
  };

  typename DensityMatrix<Scalar>::Matrix out =
      DensityMatrix<Scalar>::Matrix::Zero(static_cast<std::ptrdiff_t>(kept_dim),
                                          static_cast<std::ptrdiff_t>(kept_dim));
  for (std::size_t c = 0; c < kept_dim; ++c) {
    const std::size_t cbase = expand(c, kept_bits);
    for (std::size_t r = 0; r < kept_dim; ++r) {
      const std::size_t rbase = expand(r, kept_bits);
      std::complex<Scalar> sum{0, 0};
      for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t toff = expand(t, traced_bits);
        sum += rho(static_cast<std::ptrdiff_t>(rbase | toff),
                   static_cast<std::ptrdiff_t>(cbase | toff));
      }
      out(static_cast<std::ptrdiff_t>(r), static_cast<std::ptrdiff_t>(c)) = sum;
    }
  }
  return out;
}

/// Joint depolarizing channel on a qubit subset:
///   rho <- (1-p) rho + p * (I_S / 2^|S|) (x) Tr_S(rho).
/// With p = 1 and a single qubit this replaces the qubit with the maximally
/// mixed state.
template <typename Scalar>
void apply_depolarizing(DensityMatrix<Scalar>& dm, std::span<const int> qubits,
                        double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("depolarizing probability outside [0, 1]");
  }
  if (p == 0.0 || qubits.empty()) return;
  const auto reduced =
      partial_trace<Scalar>(dm.rho, dm.num_qubits, qubits);
  dm.rho *= std::complex<Scalar>(1.0 - p, 0);

  std::size_t subset_mask = 0;
  for (int q : qubits) subset_mask |= std::size_t{1} << q;
  std::vector<std::size_t> kept_bits;
  std::vector<std::size_t> subset_bits;
  for (int q = 0; q < dm.num_qubits; ++q) {
    if (subset_mask & (std::size_t{1} << q)) {
      subset_bits.push_back(std::size_t{1} << q);
    } else {
      kept_bits.push_back(std::size_t{1} << q);
    }
  }
  auto expand = [](std::size_t packed, const std::vector<std::size_t>& bits) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (packed & (std::size_t{1} << i)) out |= bits[i];
    }
    return out;
  };
  const std::size_t kept_dim = std::size_t{1} << kept_bits.size();
  const std::size_t subset_dim = std::size_t{1} << subset_bits.size();
  const Scalar weight = static_cast<Scalar>(p / static_cast<double>(subset_dim));
  for (std::size_t c = 0; c < kept_dim; ++c) {
    const std::size_t cbase = expand(c, kept_bits);
    for (std::size_t r = 0; r < kept_dim; ++r) {
      const std::size_t rbase = expand(r, kept_bits);
      const std::complex<Scalar> add =
          weight * reduced(static_cast<std::ptrdiff_t>(r),
                           static_cast<std::ptrdiff_t>(c));
      for (std::size_t s = 0; s < subset_dim; ++s) {
        const std::size_t soff = expand(s, subset_bits);
        dm.rho(static_cast<std::ptrdiff_t>(rbase | soff),
               static_cast<std::ptrdiff_t>(cbase | soff)) += add;
      }
    }
  }
}

/// Tr(P0 rho) for the projector onto `ancilla` = |0>, clamped to [0, 1].
template <typename Scalar>
double ancilla_zero_probability(const DensityMatrix<Scalar>& dm, int ancilla) {
  if (ancilla < 0 || ancilla >= dm.num_qubits) {
    throw std::invalid_argument("ancilla index out of range");
  }
  const std::size_t mask = std::size_t{1} << ancilla;
  double p = 0.0;
  for (std::size_t i = 0; i < dm.dim(); ++i) {
    if (!(i & mask)) {
      p += dm.rho(static_cast<std::ptrdiff_t>(i),
                  static_cast<std::ptrdiff_t>(i))
               .real();
    }
  }
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace qead
