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

#include "qead/pipeline.hpp"

#include "qead/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qead {

namespace {

// Seed streams split off each (master_seed, group_index).
enum SeedStream : std::uint64_t {
  kBucketStream = 0,
  kFeatureStream = 1,
  kAngleStream = 2,
  kShotStream = 3,
};

std::uint64_t group_stream_seed(std::uint64_t master, std::size_t group,
                                SeedStream stream) {
  return derive_seed(master, static_cast<std::uint64_t>(group),
                     static_cast<std::uint64_t>(stream));
}

}  // namespace

int compute_bucket_size(double target_prob, double anomaly_rate) {
  if (!(target_prob > 0.0 && target_prob < 1.0)) {
    throw std::invalid_argument("target_prob must lie in (0, 1)");
  }
  if (!(anomaly_rate > 0.0 && anomaly_rate < 1.0)) {
    throw std::invalid_argument("anomaly_rate must lie in (0, 1)");
  }
  const double raw =
      std::log1p(-target_prob) / std::log1p(-anomaly_rate);
  const int b = static_cast<int>(std::ceil(raw));
  return std::max(b, 2);
}

BucketPlan make_bucket_plan(std::size_t num_samples, int bucket_size,
                            std::uint64_t seed) {
  if (bucket_size < 2) throw std::invalid_argument("bucket_size must be >= 2");
  if (num_samples < 2) throw std::invalid_argument("need at least 2 samples");
  std::vector<std::size_t> order(num_samples);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  shuffle_in_place(order, rng);

  BucketPlan plan;
  plan.bucket_size = bucket_size;
  const std::size_t b = static_cast<std::size_t>(bucket_size);
  for (std::size_t start = 0; start < num_samples; start += b) {
    const std::size_t end = std::min(start + b, num_samples);
    if (end - start == 1 && !plan.buckets.empty()) {
      // Never score a singleton: fold the remainder into the previous bucket.
      plan.buckets.back().push_back(order[start]);
    } else {
      plan.buckets.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                                order.begin() + static_cast<std::ptrdiff_t>(end));
    }
  }
  return plan;
}

GroupConfig make_group_config(std::uint64_t master_seed,
                              std::size_t group_index,
                              std::size_t num_samples,
                              std::size_t num_features, int n_qubits,
                              int num_layers, double target_prob,
                              double anomaly_rate) {
  const std::size_t m = (std::size_t{1} << n_qubits) - 1;
  if (num_features < m) {
    throw DataError("dataset has " + std::to_string(num_features) +
                    " features but " + std::to_string(n_qubits) +
                    "-qubit encoding needs " + std::to_string(m) +
                    "; lower n_qubits");
  }
  GroupConfig config;
  config.group_index = group_index;
  config.shot_seed = group_stream_seed(master_seed, group_index, kShotStream);

  const int bucket_size = compute_bucket_size(target_prob, anomaly_rate);
  config.plan = make_bucket_plan(
      num_samples, bucket_size,
      group_stream_seed(master_seed, group_index, kBucketStream));

  SplitMix64 feature_rng(
      group_stream_seed(master_seed, group_index, kFeatureStream));
  config.feature_subset = sample_indices(m, num_features, feature_rng);

  config.params =
      draw_params(n_qubits, num_layers,
                  group_stream_seed(master_seed, group_index, kAngleStream));

  for (int k = n_qubits - 1; k >= 1; --k) {
    config.levels.push_back(CompressionLevel{k});
  }
  return config;
}

GroupResult run_group(const GroupConfig& config, const NormalizedDataset& data,
                      const SwapTestObservable& observable,
                      std::uint64_t shots, bool exact_mode,
                      const NoiseConfig& noise) {
  if (!exact_mode && shots == 0) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const std::size_t num_samples = data.num_rows();
  const std::size_t num_levels = config.levels.size();
  GroupResult result;
  result.group_index = config.group_index;
  result.num_samples = num_samples;
  for (const CompressionLevel& level : config.levels) {
    result.level_reset_counts.push_back(level.reset_count);
  }
  result.similarities.assign(num_levels * num_samples, 0.0);

  for (std::size_t s = 0; s < num_samples; ++s) {
    std::vector<double> exact;
    try {
      const AmplitudeVector state =
          embed(data.values.row(static_cast<std::ptrdiff_t>(s)),
                config.feature_subset, config.params.n_qubits);
      exact = evaluate_levels(state, config.params, config.levels, observable,
                              noise);
    } catch (const std::exception& e) {
      throw DataError("group " + std::to_string(config.group_index) +
                      ", sample " + std::to_string(s) + ": " + e.what());
    }
    for (std::size_t l = 0; l < num_levels; ++l) {
      double p = exact[l];
      if (noise.enabled) p = apply_readout_flip(p, noise.readout_flip);
      if (!exact_mode) {
        p = sample_shots(p, shots,
                         derive_seed(config.shot_seed,
                                     static_cast<std::uint64_t>(l),
                                     static_cast<std::uint64_t>(s)));
      }
      result.similarities[l * num_samples + s] = p;
    }
  }
  return result;
}

ScoreTable score(std::span<const GroupResult> results,
                 std::span<const BucketPlan> plans, std::size_t num_samples) {
  if (results.size() != plans.size()) {
    throw std::invalid_argument("results/plans size mismatch");
  }
  ScoreTable table;
  table.final_score = Eigen::VectorXd::Zero(
      static_cast<std::ptrdiff_t>(num_samples));
  table.contribution_count.assign(num_samples, 0);

  for (std::size_t g = 0; g < results.size(); ++g) {
    const GroupResult& result = results[g];
    if (result.num_samples != num_samples) {
      throw std::invalid_argument("group result sample count mismatch");
    }
    const std::size_t num_levels = result.level_reset_counts.size();
    for (std::size_t l = 0; l < num_levels; ++l) {
      for (const auto& bucket : plans[g].buckets) {
        if (bucket.size() < 2) {
          // Undefined deviation; record and move on.
          table.singleton_buckets += 1;
          for (std::size_t s : bucket) table.contribution_count[s] += 1;
          continue;
        }
        double mean = 0.0;
        for (std::size_t s : bucket) mean += result.at(l, s);
        mean /= static_cast<double>(bucket.size());
        double var = 0.0;
        for (std::size_t s : bucket) {
          const double d = result.at(l, s) - mean;
          var += d * d;
        }
        var /= static_cast<double>(bucket.size());
        const double sigma = std::max(std::sqrt(var), kSigmaFloor);
        for (std::size_t s : bucket) {
          table.final_score[static_cast<std::ptrdiff_t>(s)] +=
              std::abs(result.at(l, s) - mean) / sigma;
          table.contribution_count[s] += 1;
        }
      }
    }
  }
  return table;
}

RankedScores rank_and_flag(const ScoreTable& scores, double anomaly_rate) {
  if (!(anomaly_rate > 0.0 && anomaly_rate < 1.0)) {
    throw std::invalid_argument("anomaly_rate must lie in (0, 1)");
  }
  const std::size_t n = scores.num_samples();
  RankedScores out;
  out.ranking.resize(n);
  std::iota(out.ranking.begin(), out.ranking.end(), std::size_t{0});
  std::sort(out.ranking.begin(), out.ranking.end(),
            [&scores](std::size_t a, std::size_t b) {
              const double sa = scores.final_score[static_cast<std::ptrdiff_t>(a)];
              const double sb = scores.final_score[static_cast<std::ptrdiff_t>(b)];
              if (sa != sb) return sa > sb;
              return a < b;
            });
  out.num_flagged = static_cast<std::size_t>(
      std::ceil(anomaly_rate * static_cast<double>(n)));
  out.num_flagged = std::min(out.num_flagged, n);
  out.flagged.assign(n, 0);
  for (std::size_t i = 0; i < out.num_flagged; ++i) {
    out.flagged[out.ranking[i]] = 1;
  }
  return out;
}

void write_group_results(const std::filesystem::path& path,
                         const GroupResult& result) {
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path.string());
  file << "group_index,level,sample_index,similarity\n";
  char buffer[64];
  for (std::size_t l = 0; l < result.level_reset_counts.size(); ++l) {
    for (std::size_t s = 0; s < result.num_samples; ++s) {
      std::snprintf(buffer, sizeof buffer, "%.17g", result.at(l, s));
      file << result.group_index << ',' << result.level_reset_counts[l] << ','
           << s << ',' << buffer << '\n';
    }
  }
  if (!file.good()) throw DataError("write failed: " + path.string());
}

GroupResult read_group_results(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot read " + path.string());
  std::string line;
  if (!std::getline(file, line) ||
      line != "group_index,level,sample_index,similarity") {
    throw DataError("bad group result header in " + path.string());
  }
  GroupResult result;
  bool first = true;
  std::vector<double> values;
  std::vector<int> levels;
  std::vector<std::size_t> samples;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::size_t group = 0, sample = 0;
    int level = 0;
    double similarity = 0.0;
    char comma = 0;
    if (!(ss >> group >> comma >> level >> comma >> sample >> comma >>
          similarity)) {
      throw DataError("bad group result row in " + path.string());
    }
    if (first) {
      result.group_index = group;
      first = false;
    } else if (group != result.group_index) {
      throw DataError("mixed group indices in " + path.string());
    }
    levels.push_back(level);
    samples.push_back(sample);
    values.push_back(similarity);
  }
  if (values.empty()) throw DataError("empty group result " + path.string());

  // Rows are emitted level-major with sample as the fast index.
  std::size_t num_samples = samples.size();
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] == 0) {
      num_samples = i;
      break;
    }
  }
  if (samples[0] != 0 || values.size() % num_samples != 0) {
    throw DataError("inconsistent group result shape in " + path.string());
  }
  result.num_samples = num_samples;
  const std::size_t num_levels = values.size() / num_samples;
  for (std::size_t l = 0; l < num_levels; ++l) {
    result.level_reset_counts.push_back(levels[l * num_samples]);
    for (std::size_t s = 0; s < num_samples; ++s) {
      const std::size_t i = l * num_samples + s;
      if (samples[i] != s || levels[i] != result.level_reset_counts[l]) {
        throw DataError("out-of-order rows in " + path.string());
      }
    }
  }
  result.similarities = std::move(values);
  return result;
}

}  // namespace qead
