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

#include "qead/config.hpp"
#include "qead/csv.hpp"
#include "qead/metrics.hpp"
#include "qead/pipeline.hpp"

#include <filesystem>
#include <optional>

namespace qead {

/// In-memory result of a full ensemble run.
struct EnsembleOutcome {
  ScoreTable scores;
  RankedScores ranked;
};

/// Runs every ensemble group over `data` with a worker pool and folds the
/// contributions in canonical group order. Output is byte-identical for a
/// fixed (config, master_seed) whatever the worker count.
EnsembleOutcome execute_ensemble(const NormalizedDataset& data,
                                 const RunConfig& config);

/// Paths of the artifacts a run produced.
struct RunArtifacts {
  std::filesystem::path scores_csv;
  std::filesystem::path manifest_json;
  std::optional<std::filesystem::path> metrics_json;
  std::optional<std::filesystem::path> curve_csv;
};

/// End-to-end run: load the dataset (labels quarantined), preprocess,
/// execute the ensemble, write scores/metrics/manifest into
/// config.output_dir.
RunArtifacts run_pipeline(const RunConfig& config);

/// scores CSV: "sample_index,final_score,rank,flagged", one row per sample in
/// index order.
void write_scores_csv(const std::filesystem::path& path,
                      const ScoreTable& scores, const RankedScores& ranked);

/// Reads back the final_score column of a scores CSV (for the standalone
/// metrics command).
ScoreTable read_scores_csv(const std::filesystem::path& path);

}  // namespace qead
