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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qead {

/// User-facing failure caused by the input data (bad file, non-finite cell,
/// shape mismatch). Maps to exit code 2 at the CLI.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One CSV cell before coercion: missing, numeric, or text.
using Cell = std::variant<std::monostate, double, std::string>;

/// Dataset as ingested: rectangular cells, label column already stripped.
struct RawDataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<Cell>> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_features() const { return feature_names.size(); }
};

/// Ground-truth anomaly flags. Kept strictly out of the scoring path; only
/// evaluation code may consume this type.
struct LabelTable {
  std::vector<std::uint8_t> flags;

  std::size_t size() const { return flags.size(); }
  std::size_t num_anomalies() const;
};

/// All-numeric dataset (rows x features).
struct NumericDataset {
  std::vector<std::string> feature_names;
  Eigen::MatrixXd values;

  std::size_t num_rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t num_features() const {
    return static_cast<std::size_t>(values.cols());
  }
};

/// Per-feature min-max scaled dataset; every cell lies in [0, 1/M].
struct NormalizedDataset {
  Eigen::MatrixXd values;
  Eigen::VectorXd feature_mins;
  Eigen::VectorXd feature_maxes;

  std::size_t num_rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t num_features() const {
    return static_cast<std::size_t>(values.cols());
  }
};

/// Encoded sample: 2^n - 1 feature amplitudes plus one trailing overflow
/// amplitude that absorbs the residual probability mass.
struct AmplitudeVector {
  int n_qubits = 0;
  Eigen::VectorXd amplitudes;
};

/// FNV-1a 64-bit hash. Fixed and platform-independent; text features coerce
/// through this exact function on every platform.
constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char byte : text) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct CoercionStats {
  std::size_t hashed_cells = 0;
  std::size_t empty_cells = 0;
};

/// Replaces text cells by fnv1a64(text)/2^64 in [0,1) and empty cells by 0.0
/// (counted in stats). Numeric cells pass through unchanged.
NumericDataset coerce_numeric(const RawDataset& dataset,
                              CoercionStats* stats = nullptr);

/// Per-feature min-max scaling onto [0, 1/M]: c' = (c - min)/(max - min) / M.
/// Constant features map to 0. Non-finite cells are rejected with the row
/// index in the message.
NormalizedDataset normalize(const NumericDataset& dataset);

/// Amplitude embedding of `selected` normalized values into an n-qubit state.
/// amplitude_j = value_j for j < 2^n - 1; the last amplitude is
/// sqrt(1 - sum of squares). Rejects probability mass beyond 1 + 1e-12.
AmplitudeVector embed(const Eigen::Ref<const Eigen::RowVectorXd>& row,
                      std::span<const std::size_t> selected, int n_qubits);

}  // namespace qead
