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

#include "qead/circuit.hpp"
#include "qead/encoding.hpp"
#include "qead/evaluator.hpp"
#include "qead/noise.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qead {

/// Smallest bucket size B with P(bucket contains >= 1 anomaly) >= target_prob
/// under an i.i.d. anomaly rate, i.e. ceil(ln(1-p)/ln(1-r)), clamped to >= 2.
int compute_bucket_size(double target_prob, double anomaly_rate);

/// Random partition of sample indices into consecutive chunks of size B.
/// A trailing remainder of size 1 is merged into the previous bucket; larger
/// remainders stay as a short final bucket.
struct BucketPlan {
  int bucket_size = 0;
  std::vector<std::vector<std::size_t>> buckets;
};

BucketPlan make_bucket_plan(std::size_t num_samples, int bucket_size,
                            std::uint64_t seed);

/// Everything one ensemble group needs, derived deterministically from
/// (master_seed, group_index): bucket partition, feature subset, ansatz
/// angles, shot-noise streams, and the compression sweep [n-1 .. 1].
struct GroupConfig {
  std::size_t group_index = 0;
  std::uint64_t shot_seed = 0;
  std::vector<std::size_t> feature_subset;  // 2^n - 1 indices, sorted
  std::vector<CompressionLevel> levels;
  BucketPlan plan;
  AnsatzParams params;
};

GroupConfig make_group_config(std::uint64_t master_seed,
                              std::size_t group_index,
                              std::size_t num_samples,
                              std::size_t num_features, int n_qubits,
                              int num_layers, double target_prob,
                              double anomaly_rate);

/// Similarity estimates of one group, level-major:
/// similarities[level_index * num_samples + sample_index].
struct GroupResult {
  std::size_t group_index = 0;
  std::size_t num_samples = 0;
  std::vector<int> level_reset_counts;
  std::vector<double> similarities;

  double at(std::size_t level_index, std::size_t sample_index) const {
    return similarities[level_index * num_samples + sample_index];
  }
};

/// Embeds every sample with the group's feature subset, runs every
/// compression level, and estimates the ancilla-zero probability. exact_mode
/// skips shot sampling and records the exact value (readout flip still
/// applies when noise is enabled: it biases the infinite-shot mean).
GroupResult run_group(const GroupConfig& config, const NormalizedDataset& data,
                      const SwapTestObservable& observable,
                      std::uint64_t shots, bool exact_mode,
                      const NoiseConfig& noise);

/// Accumulated per-sample anomaly scores.
struct ScoreTable {
  Eigen::VectorXd final_score;
  std::vector<std::uint32_t> contribution_count;
  std::size_t singleton_buckets = 0;  // size-1 buckets seen (contribution 0)

  std::size_t num_samples() const {
    return static_cast<std::size_t>(final_score.size());
  }
};

inline constexpr double kSigmaFloor = 1e-9;

/// Per (group, level, bucket): mean and population standard deviation of the
/// bucket's similarities; each sample contributes |s - mean| / max(sigma,
/// floor). Contributions are folded in canonical (group, level) order so the
/// result is identical however groups were computed.
ScoreTable score(std::span<const GroupResult> results,
                 std::span<const BucketPlan> plans, std::size_t num_samples);

/// Ranking by descending score with index tie-break, plus the flagged set:
/// the top ceil(anomaly_rate * N) samples.
struct RankedScores {
  std::vector<std::size_t> ranking;     // sample indices, most anomalous first
  std::vector<std::uint8_t> flagged;    // per-sample flag
  std::size_t num_flagged = 0;
};

RankedScores rank_and_flag(const ScoreTable& scores, double anomaly_rate);

/// Intermediate per-group artifact (CSV: group_index,level,sample_index,
/// similarity) so long runs can be distributed or resumed.
void write_group_results(const std::filesystem::path& path,
                         const GroupResult& result);
GroupResult read_group_results(const std::filesystem::path& path);

}  // namespace qead
