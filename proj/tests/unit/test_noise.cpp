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

#include "qead/noise.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace qead;

TEST_CASE("zero-probability depolarizing leaves the state untouched") {
  SplitMix64 rng(47);
  auto dm = from_statevector(statevector_from_amplitudes(
      2, qead::test::random_state(2, rng)));
  const Eigen::MatrixXcd before = dm.rho;
  const std::array<int, 1> targets{0};
  apply_depolarizing(dm, targets, 0.0);
  CHECK((dm.rho - before).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("full single-qubit depolarizing yields the maximally mixed state") {
  Eigen::VectorXd zero(2);
  zero << 1, 0;
  auto dm = init_state(1, zero);
  const std::array<int, 1> targets{0};
  apply_depolarizing(dm, targets, 1.0);
  CHECK(dm.rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dm.rho(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ancilla_zero_probability(dm, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("depolarizing preserves trace and hermiticity on entangled states") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    auto dm = from_statevector(statevector_from_amplitudes(
        3, qead::test::random_state(3, rng)));
    const std::array<int, 2> pair{0, 2};
    apply_depolarizing(dm, pair, 0.3);
    CHECK(std::abs(trace_real(dm) - 1.0) < 1e-9);
    CHECK(is_hermitian(dm, 1e-9));
    const std::array<int, 1> single{1};
    apply_depolarizing(dm, single, 0.05);
    CHECK(std::abs(trace_real(dm) - 1.0) < 1e-9);
  }
}

TEST_CASE("joint depolarizing at p=1 replaces the subset with I/2^k") {
  SplitMix64 rng(59);
  auto dm = from_statevector(statevector_from_amplitudes(
      2, qead::test::random_state(2, rng)));
  const std::array<int, 2> both{0, 1};
  apply_depolarizing(dm, both, 1.0);
  const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  CHECK((dm.rho - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gate noise picks the rate by arity") {
  NoiseConfig cfg;
  cfg.enabled = true;
  CHECK(depolarizing_rate(GateOp::rx(0, 1.0), cfg) == cfg.depol_1q);
  CHECK(depolarizing_rate(GateOp::h(0), cfg) == cfg.depol_1q);
  CHECK(depolarizing_rate(GateOp::cx(0, 1), cfg) == cfg.depol_2q);
  CHECK(depolarizing_rate(GateOp::cswap(0, 1, 2), cfg) == cfg.depol_2q);
  CHECK(depolarizing_rate(GateOp::reset(0), cfg) == 0.0);
}

TEST_CASE("readout flip biases the measured probability") {
  CHECK(apply_readout_flip(1.0, 1.38e-2) ==
        doctest::Approx(0.9862).epsilon(1e-12));
  CHECK(apply_readout_flip(0.0, 1.38e-2) ==
        doctest::Approx(0.0138).epsilon(1e-12));
  CHECK(apply_readout_flip(0.5, 1.38e-2) == doctest::Approx(0.5));
}

TEST_CASE("noise config rejects bad probabilities") {
  NoiseConfig cfg;
  cfg.depol_1q = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.depol_1q = -0.1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.depol_1q = 0.5;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("default error rates match the reference backend medians") {
  const NoiseConfig cfg;
  CHECK(cfg.depol_1q == doctest::Approx(2.274e-4));
  CHECK(cfg.depol_2q == doctest::Approx(2.903e-3));
  CHECK(cfg.readout_flip == doctest::Approx(1.38e-2));
}
