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

#include "qead/synth.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

using namespace qead;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) {
    path = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file);
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

RunConfig small_config(const std::filesystem::path& dataset,
                       const std::filesystem::path& out) {
  RunConfig config;
  config.dataset = dataset;
  config.label_column = "label";
  config.ensemble_groups = 6;
  config.exact_mode = true;
  config.anomaly_rate = 0.05;
  config.target_prob = 0.6;
  config.master_seed = 97;
  config.output_dir = out;
  return config;
}

}  // namespace

TEST_CASE("worker count does not change any output byte") {
  TempDir dir("qead_runner_workers");
  SyntheticSpec spec;
  spec.samples = 40;
  spec.features = 8;
  spec.anomalies = 2;
  const LabeledDataset synth = make_gaussian_dataset(spec, 5);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data, &synth.labels, "label");

  RunConfig one = small_config(dataset, dir.path / "one");
  one.workers = 1;
  RunConfig eight = small_config(dataset, dir.path / "eight");
  eight.workers = 8;

  const RunArtifacts a = run_pipeline(one);
  const RunArtifacts b = run_pipeline(eight);
  CHECK(slurp(a.scores_csv) == slurp(b.scores_csv));
  REQUIRE(a.metrics_json.has_value());
  REQUIRE(b.metrics_json.has_value());
  CHECK(slurp(*a.metrics_json) == slurp(*b.metrics_json));
  CHECK(slurp(*a.curve_csv) == slurp(*b.curve_csv));
}

TEST_CASE("runs without a label column skip metrics") {
  TempDir dir("qead_runner_nolabels");
  SyntheticSpec spec;
  spec.samples = 30;
  spec.features = 8;
  spec.anomalies = 0;
  const LabeledDataset synth = make_gaussian_dataset(spec, 6);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data);  // no label column written

  RunConfig config = small_config(dataset, dir.path / "out");
  config.label_column.reset();
  const RunArtifacts artifacts = run_pipeline(config);
  CHECK(std::filesystem::exists(artifacts.scores_csv));
  CHECK_FALSE(artifacts.metrics_json.has_value());
  CHECK(std::filesystem::exists(artifacts.manifest_json));
}

TEST_CASE("scores csv has one row per sample and round-trips") {
  TempDir dir("qead_runner_scores");
  SyntheticSpec spec;
  spec.samples = 25;
  spec.features = 8;
  spec.anomalies = 2;
  const LabeledDataset synth = make_gaussian_dataset(spec, 8);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data, &synth.labels, "label");

  const RunArtifacts artifacts =
      run_pipeline(small_config(dataset, dir.path / "out"));
  const ScoreTable scores = read_scores_csv(artifacts.scores_csv);
  CHECK(scores.num_samples() == 25);
  for (int s = 0; s < 25; ++s) CHECK(scores.final_score[s] >= 0.0);
}

TEST_CASE("manifest records config, dataset digest, and versions") {
  TempDir dir("qead_runner_manifest");
  SyntheticSpec spec;
  spec.samples = 20;
  spec.features = 8;
  spec.anomalies = 1;
  const LabeledDataset synth = make_gaussian_dataset(spec, 9);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data, &synth.labels, "label");

  RunConfig config = small_config(dataset, dir.path / "out");
  config.ensemble_groups = 3;
  const RunArtifacts artifacts = run_pipeline(config);
  const auto manifest = nlohmann::json::parse(slurp(artifacts.manifest_json));
  CHECK(manifest["tool"]["name"] == "qead");
  CHECK(manifest["config"]["master_seed"] == 97);
  CHECK(manifest["config"]["ensemble_groups"] == 3);
  CHECK(manifest["dataset"]["num_samples"] == 20);
  CHECK(manifest["dataset"]["sha256"].get<std::string>().size() == 64);
  CHECK(manifest["bucket_size"].get<int>() ==
        compute_bucket_size(config.target_prob, config.anomaly_rate));
}

TEST_CASE("saved group results allow resuming and match fresh runs") {
  TempDir dir("qead_runner_resume");
  SyntheticSpec spec;
  spec.samples = 30;
  spec.features = 8;
  spec.anomalies = 2;
  const LabeledDataset synth = make_gaussian_dataset(spec, 10);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data, &synth.labels, "label");

  RunConfig first = small_config(dataset, dir.path / "out");
  first.save_group_results = true;
  const RunArtifacts a = run_pipeline(first);
  CHECK(std::filesystem::exists(first.output_dir / "groups" /
                                "group_000000.csv"));

  RunConfig second = first;
  second.resume = true;
  const RunArtifacts b = run_pipeline(second);
  CHECK(slurp(a.scores_csv) == slurp(b.scores_csv));
}

TEST_CASE("anomalies outscore normals on planted data across seeds") {
  // Mean final score of the planted anomalies must beat the normals' mean
  // in nearly every master seed, already at a small desk scale.
  SyntheticSpec spec;
  spec.samples = 100;
  spec.features = 16;
  spec.anomalies = 3;
  int separated = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const LabeledDataset synth = make_gaussian_dataset(spec, seed);
    const NormalizedDataset normalized =
        normalize({synth.data.feature_names, synth.data.values});
    RunConfig config;
    config.ensemble_groups = 20;
    config.exact_mode = true;
    config.anomaly_rate = 0.03;
    config.target_prob = 0.75;
    config.master_seed = seed * 17;
    const EnsembleOutcome outcome = execute_ensemble(normalized, config);
    double anomaly_mean = 0.0, normal_mean = 0.0;
    for (std::size_t s = 0; s < 100; ++s) {
      (synth.labels.flags[s] ? anomaly_mean : normal_mean) +=
          outcome.scores.final_score[static_cast<std::ptrdiff_t>(s)];
    }
    anomaly_mean /= 3.0;
    normal_mean /= 97.0;
    if (anomaly_mean > normal_mean) ++separated;
  }
  CHECK(separated >= 19);  // >= 95% of seeds
}

TEST_CASE("a failing group report names the group and seed") {
  // Force a failure: 3-qubit encoding needs 7 features, give 5.
  TempDir dir("qead_runner_fail");
  SyntheticSpec spec;
  spec.samples = 20;
  spec.features = 5;
  spec.anomalies = 1;
  const LabeledDataset synth = make_gaussian_dataset(spec, 11);
  const auto dataset = dir.path / "data.csv";
  write_csv(dataset, synth.data, &synth.labels, "label");

  const RunConfig config = small_config(dataset, dir.path / "out");
  CHECK_THROWS_WITH_AS(run_pipeline(config), doctest::Contains("master_seed"),
                       DataError);
}
