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

#include "qead/config.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace qead;

TEST_CASE("defaults match the reference experimental setup") {
  const RunConfig config;
  CHECK(config.n_qubits == 3);
  CHECK(config.num_layers == 2);
  CHECK(config.shots == 4096);
  CHECK(config.ensemble_groups == 1000);
  CHECK_FALSE(config.noise.enabled);
  CHECK_FALSE(config.exact_mode);
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("config files apply in order and support comments") {
  const auto path = std::filesystem::temp_directory_path() / "qead_test.conf";
  {
    std::ofstream out(path);
    out << "# reference run\n"
        << "shots = 1024\n"
        << "ensemble_groups = 50   # fewer for a smoke run\n"
        << "noise = on\n"
        << "readout_flip = 0.02\n"
        << "label_column = label\n"
        << "\n"
        << "exact_mode = false\n";
  }
  RunConfig config;
  load_config_file(config, path);
  CHECK(config.shots == 1024);
  CHECK(config.ensemble_groups == 50);
  CHECK(config.noise.enabled);
  CHECK(config.noise.readout_flip == 0.02);
  CHECK(config.label_column == "label");
  // Untouched keys keep their defaults.
  CHECK(config.n_qubits == 3);
  std::filesystem::remove(path);
}

TEST_CASE("flags override file values") {
  // Precedence is exercised by applying the file first, then the flag.
  RunConfig config;
  apply_setting(config, "shots", "1024");
  apply_setting(config, "shots", "4096");
  CHECK(config.shots == 4096);
}

TEST_CASE("unknown keys are rejected by name") {
  RunConfig config;
  CHECK_THROWS_WITH_AS(apply_setting(config, "shotz", "10"),
                       doctest::Contains("shotz"), ConfigError);
}

TEST_CASE("range violations name the offending key") {
  RunConfig config;
  apply_setting(config, "target_prob", "1.2");
  CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("target_prob"),
                       ConfigError);

  RunConfig config2;
  apply_setting(config2, "anomaly_rate", "0");
  CHECK_THROWS_WITH_AS(config2.validate(), doctest::Contains("anomaly_rate"),
                       ConfigError);

  RunConfig config3;
  CHECK_THROWS_WITH_AS(apply_setting(config3, "shots", "abc"),
                       doctest::Contains("shots"), ConfigError);
}

TEST_CASE("malformed config lines carry the line number") {
  const auto path = std::filesystem::temp_directory_path() / "qead_bad.conf";
  {
    std::ofstream out(path);
    out << "shots = 10\nnot a setting\n";
  }
  RunConfig config;
  CHECK_THROWS_WITH_AS(load_config_file(config, path), doctest::Contains(":2"),
                       ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("worker resolution prefers explicit count, then the environment") {
  RunConfig config;
  config.workers = 5;
  CHECK(resolve_workers(config) == 5);

  config.workers = 0;
  setenv("QEAD_WORKERS", "3", 1);
  CHECK(resolve_workers(config) == 3);
  setenv("QEAD_WORKERS", "zero", 1);
  CHECK_THROWS_AS(resolve_workers(config), ConfigError);
  unsetenv("QEAD_WORKERS");
  CHECK(resolve_workers(config) >= 1);
}
