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
#include "qead/pipeline.hpp"

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace qead {

/// Classification metrics plus the detection-rate curve over integer
/// percentiles 1..100.
///
/// Zero-division conventions: precision is 0 when nothing is flagged; recall
/// and F1 are 0 when there are no true anomalies; F1 is 0 when precision and
/// recall are both 0.
struct MetricsReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::vector<std::pair<int, double>> detection_curve;
};

/// Fraction of true anomalies ranked within the top `percentile`% of scores.
/// Throws DataError when the labels contain no anomalies (undefined rate).
double detection_rate_at(std::span<const std::size_t> ranking,
                         const LabelTable& labels, int percentile);

/// Precision/recall/F1/accuracy of the flagged set against the labels.
MetricsReport confusion_metrics(const RankedScores& ranked,
                                const LabelTable& labels);

/// confusion_metrics plus the full detection curve (empty when the labels
/// contain no anomalies).
MetricsReport compute_metrics(const RankedScores& ranked,
                              const LabelTable& labels);

/// {precision, recall, f1, accuracy, detection_curve: [[k, rate]...]}.
void write_metrics_json(const std::filesystem::path& path,
                        const MetricsReport& report);

/// CSV with header "percentile,detection_rate".
void write_curve_csv(const std::filesystem::path& path,
                     const MetricsReport& report);

/// Round-trip reader for the curve CSV.
std::vector<std::pair<int, double>> read_curve_csv(
    const std::filesystem::path& path);

}  // namespace qead
