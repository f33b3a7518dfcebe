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

#include "qead/gates.hpp"

#include "helpers.hpp"
#include "qead/statevector.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qead;
using qead::test::gate_unitary;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rotation matrices match their definitions") {
  const auto rx = rx_matrix(kPi / 3);
  CHECK(rx(0, 0).real() == doctest::Approx(std::cos(kPi / 6)).epsilon(1e-12));
  CHECK(rx(0, 1).imag() == doctest::Approx(-std::sin(kPi / 6)).epsilon(1e-12));
  CHECK(rx(0, 1).real() == doctest::Approx(0.0));

  const auto rz = rz_matrix(kPi / 3);
  CHECK(rz(0, 0) == std::exp(std::complex<double>(0, -kPi / 6)));
  CHECK(rz(1, 1) == std::exp(std::complex<double>(0, kPi / 6)));
  CHECK(std::abs(rz(0, 1)) == 0.0);
}

TEST_CASE("every gate kind is unitary at random angles") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const double theta = uniform_angle(rng);
    const std::array<GateOp, 5> ops = {
        GateOp::rx(0, theta), GateOp::rz(1, theta), GateOp::h(2),
        GateOp::cx(0, 2), GateOp::cswap(2, 0, 1)};
    for (const GateOp& op : ops) {
      const Eigen::MatrixXcd u = gate_unitary(op, 3);
      const Eigen::MatrixXcd id =
          Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      CHECK((u * u.adjoint() - id).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("RX(pi) flips |0> to |1>") {
  auto sv = basis_state<double>(1, 0);
  apply_gate(sv, GateOp::rx(0, kPi));
  CHECK(std::norm(sv.amps[1]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bit_zero_probability(sv, 0) == doctest::Approx(0.0));
}

TEST_CASE("CX with a set control flips the target") {
  // Qubit 0 = 1, qubit 1 = 0.
  auto sv = basis_state<double>(2, 0b01);
  apply_gate(sv, GateOp::cx(0, 1));
  CHECK(std::norm(sv.amps[0b11]) == doctest::Approx(1.0).epsilon(1e-12));
  // Clear control leaves the state alone.
  auto sv2 = basis_state<double>(2, 0b10);
  apply_gate(sv2, GateOp::cx(0, 1));
  CHECK(std::norm(sv2.amps[0b10]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("CX matrix equals its textbook form") {
  // Basis ordered |q1 q0> with qubit 0 the control: the permutation swaps
  // |01> and |11>.
  const Eigen::MatrixXcd u = gate_unitary(GateOp::cx(0, 1), 2);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(0, 0) = 1;  // |00> -> |00>
  expected(3, 1) = 1;  // control set: |01> -> |11>
  expected(2, 2) = 1;  // |10> -> |10>
  expected(1, 3) = 1;  // |11> -> |01>
  CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("RZ leaves measurement probabilities unchanged") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Statevector<double> sv;
    sv.num_qubits = 2;
    sv.amps = qead::test::random_state(2, rng);
    const double before = bit_zero_probability(sv, 0);
    apply_gate(sv, GateOp::rz(0, uniform_angle(rng)));
    CHECK(bit_zero_probability(sv, 0) == doctest::Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("cswap permutes only when the control is set") {
  const GateOp op = GateOp::cswap(2, 0, 1);
  CHECK(permute_basis_index(op, 0b001) == 0b001);        // control clear
  CHECK(permute_basis_index(op, 0b101) == 0b110);        // swap bits 0,1
  CHECK(permute_basis_index(op, 0b111) == 0b111);        // equal bits
}

TEST_CASE("ops with bad targets are rejected") {
  CHECK_THROWS_AS(validate_op(GateOp::rx(3, 0.1), 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_op(GateOp::cx(1, 1), 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_op(GateOp::rx(0, std::nan("")), 3),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_op(GateOp::cswap(2, 0, 1), 3));
}
