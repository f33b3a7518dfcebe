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

#include "qead/noise.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace qead {

/// Bad configuration (unknown key, out-of-range value, missing file). Maps to
/// exit code 1 at the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full run configuration. Defaults are the reference setup: 3-qubit
/// encodings, 2 ansatz layers, 4096 shots, 1000 ensemble groups.
struct RunConfig {
  std::filesystem::path dataset;
  std::optional<std::string> label_column;
  int n_qubits = 3;
  int num_layers = 2;
  std::uint64_t shots = 4096;
  std::size_t ensemble_groups = 1000;
  double target_prob = 0.75;
  double anomaly_rate = 0.03;
  std::uint64_t master_seed = 1;
  bool exact_mode = false;
  NoiseConfig noise;
  std::filesystem::path output_dir = "out";
  unsigned workers = 0;  // 0 = QEAD_WORKERS env var, else hardware threads
  bool save_group_results = false;
  bool resume = false;

  void validate() const;
};

/// Applies one `key = value` setting; throws ConfigError naming the key on
/// unknown keys or out-of-range values.
void apply_setting(RunConfig& config, const std::string& key,
                   const std::string& value);

/// Parses a key-value config file ('#' comments, blank lines allowed).
/// Settings apply in file order on top of the current values.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Resolved worker count: explicit setting, else QEAD_WORKERS, else hardware
/// concurrency.
unsigned resolve_workers(const RunConfig& config);

}  // namespace qead
