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

#include "qead/encoding.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qead {

/// A dataset split at load time: features for the pipeline, labels (when a
/// label column was named) quarantined for evaluation only.
struct LoadedDataset {
  RawDataset data;
  std::optional<LabelTable> labels;
};

/// Reads a CSV with a header row. Quoted fields and empty cells are
/// supported; the named label column, if any, is stripped from the feature
/// table. Label cells parse as anomalous when numeric non-zero or one of
/// {true, yes, anomaly} case-insensitively.
LoadedDataset load_csv(const std::filesystem::path& path,
                       const std::optional<std::string>& label_column);

/// Writes a numeric dataset (optionally with a label column appended).
void write_csv(const std::filesystem::path& path, const NumericDataset& data,
               const LabelTable* labels = nullptr,
               const std::string& label_column = "label");

}  // namespace qead
