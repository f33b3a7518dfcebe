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

#include "qead/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace qead {

namespace {
constexpr double kOverflowTolerance = 1e-12;
}

std::size_t LabelTable::num_anomalies() const {
  std::size_t n = 0;
  for (auto f : flags) n += f ? 1 : 0;
  return n;
}

NumericDataset coerce_numeric(const RawDataset& dataset, CoercionStats* stats) {
  if (dataset.num_rows() == 0 || dataset.num_features() == 0) {
    throw DataError("dataset must have at least one row and one feature");
  }
  NumericDataset out;
  out.feature_names = dataset.feature_names;
  out.values.resize(static_cast<std::ptrdiff_t>(dataset.num_rows()),
                    static_cast<std::ptrdiff_t>(dataset.num_features()));
  CoercionStats local;
  for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
    const auto& row = dataset.rows[r];
    if (row.size() != dataset.num_features()) {
      throw DataError("row " + std::to_string(r) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(dataset.num_features()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      double value = 0.0;
      if (std::holds_alternative<double>(row[c])) {
        value = std::get<double>(row[c]);
      } else if (std::holds_alternative<std::string>(row[c])) {
        value = static_cast<double>(fnv1a64(std::get<std::string>(row[c]))) *
                0x1.0p-64;
        ++local.hashed_cells;
      } else {
        ++local.empty_cells;
      }
      out.values(static_cast<std::ptrdiff_t>(r),
                 static_cast<std::ptrdiff_t>(c)) = value;
    }
  }
  if (stats) *stats = local;
  return out;
}

NormalizedDataset normalize(const NumericDataset& dataset) {
  const std::ptrdiff_t rows = dataset.values.rows();
  const std::ptrdiff_t cols = dataset.values.cols();
  if (rows == 0 || cols == 0) {
    throw DataError("cannot normalize an empty dataset");
  }
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::ptrdiff_t c = 0; c < cols; ++c) {
      if (!std::isfinite(dataset.values(r, c))) {
        throw DataError("non-finite value at row " + std::to_string(r) +
                        ", feature " + std::to_string(c));
      }
    }
  }
  NormalizedDataset out;
  out.feature_mins = dataset.values.colwise().minCoeff();
  out.feature_maxes = dataset.values.colwise().maxCoeff();
  out.values.resize(rows, cols);
  const double scale = 1.0 / static_cast<double>(cols);
  for (std::ptrdiff_t c = 0; c < cols; ++c) {
    const double lo = out.feature_mins[c];
    const double span = out.feature_maxes[c] - lo;
    if (span == 0.0) {
      out.values.col(c).setZero();
    } else {
      out.values.col(c) = (dataset.values.col(c).array() - lo) / span * scale;
    }
  }
  return out;
}

AmplitudeVector embed(const Eigen::Ref<const Eigen::RowVectorXd>& row,
                      std::span<const std::size_t> selected, int n_qubits) {
  const std::size_t m = (std::size_t{1} << n_qubits) - 1;
  if (selected.size() != m) {
    throw DataError("embed expects " + std::to_string(m) +
                    " selected features for " + std::to_string(n_qubits) +
                    " qubits, got " + std::to_string(selected.size()));
  }
  AmplitudeVector out;
  out.n_qubits = n_qubits;
  out.amplitudes.resize(static_cast<std::ptrdiff_t>(m) + 1);
  double mass = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t f = selected[j];
    if (f >= static_cast<std::size_t>(row.size())) {
      throw DataError("selected feature index out of range");
    }
    for (std::size_t k = j + 1; k < m; ++k) {
      if (selected[k] == f) throw DataError("selected features must be distinct");
    }
    const double v = row[static_cast<std::ptrdiff_t>(f)];
    out.amplitudes[static_cast<std::ptrdiff_t>(j)] = v;
    mass += v * v;
  }
  if (mass > 1.0 + kOverflowTolerance) {
    throw DataError("embedded probability mass exceeds 1; normalization bug");
  }
  out.amplitudes[static_cast<std::ptrdiff_t>(m)] =
      std::sqrt(std::max(0.0, 1.0 - mass));
  return out;
}

}  // namespace qead
