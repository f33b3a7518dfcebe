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

#include "qead/runner.hpp"

#include "qead/version.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

namespace qead {

namespace {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::vector<char> buffer(1 << 16);
  while (file) {
    file.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    EVP_DigestUpdate(ctx, buffer.data(),
                     static_cast<std::size_t>(file.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  hex.reserve(2 * length);
  static const char* alphabet = "0123456789abcdef";
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(alphabet[digest[i] >> 4]);
    hex.push_back(alphabet[digest[i] & 0xF]);
  }
  return hex;
}

std::filesystem::path group_result_path(const RunConfig& config,
                                        std::size_t group_index) {
  char name[32];
  std::snprintf(name, sizeof name, "group_%06zu.csv", group_index);
  return config.output_dir / "groups" / name;
}

}  // namespace

EnsembleOutcome execute_ensemble(const NormalizedDataset& data,
                                 const RunConfig& config) {
  config.validate();
  const std::size_t num_samples = data.num_rows();
  const std::size_t num_groups = config.ensemble_groups;
  const SwapTestObservable observable(config.n_qubits, config.noise);

  const bool persist = config.save_group_results || config.resume;
  if (persist) {
    std::filesystem::create_directories(config.output_dir / "groups");
  }

  std::vector<GroupConfig> configs(num_groups);
  std::vector<GroupResult> results(num_groups);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t failed_group = 0;

  auto work = [&] {
    for (;;) {
      const std::size_t g = next.fetch_add(1);
      if (g >= num_groups) return;
      try {
        configs[g] = make_group_config(
            config.master_seed, g, num_samples, data.num_features(),
            config.n_qubits, config.num_layers, config.target_prob,
            config.anomaly_rate);
        const auto path = group_result_path(config, g);
        if (config.resume && std::filesystem::exists(path)) {
          GroupResult cached = read_group_results(path);
          if (cached.num_samples != num_samples ||
              cached.level_reset_counts.size() != configs[g].levels.size()) {
            throw DataError("cached result shape mismatch: " + path.string());
          }
          results[g] = std::move(cached);
        } else {
          results[g] = run_group(configs[g], data, observable, config.shots,
                                 config.exact_mode, config.noise);
          if (config.save_group_results) {
            write_group_results(path, results[g]);
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
          failed_group = g;
        }
        next.store(num_groups);  // drain the queue
        return;
      }
    }
  };

  const unsigned workers =
      std::min<unsigned>(resolve_workers(config),
                         static_cast<unsigned>(num_groups));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      throw DataError("group " + std::to_string(failed_group) +
                      " failed under master_seed " +
                      std::to_string(config.master_seed) + ": " + e.what());
    }
  }

  std::vector<BucketPlan> plans;
  plans.reserve(num_groups);
  for (auto& c : configs) plans.push_back(std::move(c.plan));

  EnsembleOutcome outcome;
  outcome.scores = score(results, plans, num_samples);
  outcome.ranked = rank_and_flag(outcome.scores, config.anomaly_rate);
  return outcome;
}

void write_scores_csv(const std::filesystem::path& path,
                      const ScoreTable& scores, const RankedScores& ranked) {
  const std::size_t n = scores.num_samples();
  std::vector<std::size_t> rank_of(n);
  for (std::size_t i = 0; i < n; ++i) rank_of[ranked.ranking[i]] = i + 1;
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path.string());
  file << "sample_index,final_score,rank,flagged\n";
  char buffer[64];
  for (std::size_t s = 0; s < n; ++s) {
    std::snprintf(buffer, sizeof buffer, "%.17g",
                  scores.final_score[static_cast<std::ptrdiff_t>(s)]);
    file << s << ',' << buffer << ',' << rank_of[s] << ','
         << int(ranked.flagged[s]) << '\n';
  }
  if (!file.good()) throw DataError("write failed: " + path.string());
}

ScoreTable read_scores_csv(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot read " + path.string());
  std::string line;
  if (!std::getline(file, line) ||
      line != "sample_index,final_score,rank,flagged") {
    throw DataError("bad scores header in " + path.string());
  }
  std::vector<double> values;
  std::size_t expected = 0;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::size_t sample = 0, rank = 0;
    double value = 0.0;
    int flagged = 0;
    char comma = 0;
    if (!(ss >> sample >> comma >> value >> comma >> rank >> comma >> flagged) ||
        sample != expected) {
      throw DataError("bad scores row in " + path.string());
    }
    values.push_back(value);
    ++expected;
  }
  if (values.empty()) throw DataError("empty scores file " + path.string());
  ScoreTable table;
  table.final_score = Eigen::Map<Eigen::VectorXd>(
      values.data(), static_cast<std::ptrdiff_t>(values.size()));
  table.contribution_count.assign(values.size(), 0);
  return table;
}

RunArtifacts run_pipeline(const RunConfig& config) {
  config.validate();
  if (config.dataset.empty()) throw ConfigError("dataset path not set");
  const auto start = std::chrono::steady_clock::now();

  const LoadedDataset loaded = load_csv(config.dataset, config.label_column);
  CoercionStats stats;
  const NumericDataset numeric = coerce_numeric(loaded.data, &stats);
  const NormalizedDataset normalized = normalize(numeric);
  if (stats.empty_cells > 0) {
    std::cerr << "warning: " << stats.empty_cells
              << " empty cells treated as 0.0\n";
  }

  const EnsembleOutcome outcome = execute_ensemble(normalized, config);
  if (outcome.scores.singleton_buckets > 0) {
    std::cerr << "notice: " << outcome.scores.singleton_buckets
              << " singleton buckets contributed no deviation\n";
  }

  std::filesystem::create_directories(config.output_dir);
  RunArtifacts artifacts;
  artifacts.scores_csv = config.output_dir / "scores.csv";
  write_scores_csv(artifacts.scores_csv, outcome.scores, outcome.ranked);

  if (loaded.labels) {
    const MetricsReport report = compute_metrics(outcome.ranked, *loaded.labels);
    artifacts.metrics_json = config.output_dir / "metrics.json";
    artifacts.curve_csv = config.output_dir / "detection_curve.csv";
    write_metrics_json(*artifacts.metrics_json, report);
    write_curve_csv(*artifacts.curve_csv, report);
  } else {
    std::cerr << "no label column configured; metrics skipped\n";
  }

  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  nlohmann::ordered_json manifest;
  manifest["tool"] = {
      {"name", "qead"},
      {"version", kVersion},
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                    std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION)},
      {"compiler", __VERSION__},
  };
  manifest["config"] = {
      {"dataset", config.dataset.string()},
      {"label_column",
       config.label_column ? nlohmann::json(*config.label_column)
                           : nlohmann::json(nullptr)},
      {"n_qubits", config.n_qubits},
      {"num_layers", config.num_layers},
      {"shots", config.shots},
      {"ensemble_groups", config.ensemble_groups},
      {"target_prob", config.target_prob},
      {"anomaly_rate", config.anomaly_rate},
      {"master_seed", config.master_seed},
      {"exact_mode", config.exact_mode},
      {"noise",
       {{"enabled", config.noise.enabled},
        {"depol_1q", config.noise.depol_1q},
        {"depol_2q", config.noise.depol_2q},
        {"readout_flip", config.noise.readout_flip}}},
      {"output_dir", config.output_dir.string()},
  };
  manifest["dataset"] = {
      {"sha256", sha256_file(config.dataset)},
      {"num_samples", normalized.num_rows()},
      {"num_features", normalized.num_features()},
      {"hashed_cells", stats.hashed_cells},
      {"empty_cells", stats.empty_cells},
  };
  manifest["bucket_size"] =
      compute_bucket_size(config.target_prob, config.anomaly_rate);
  manifest["wall_time_seconds"] = elapsed;
  artifacts.manifest_json = config.output_dir / "manifest.json";
  std::ofstream manifest_file(artifacts.manifest_json);
  if (!manifest_file) {
    throw DataError("cannot write " + artifacts.manifest_json.string());
  }
  manifest_file << manifest.dump(2) << '\n';
  return artifacts;
}

}  // namespace qead
