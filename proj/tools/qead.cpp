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

#include "qead/config.hpp"
#include "qead/csv.hpp"
#include "qead/metrics.hpp"
#include "qead/pipeline.hpp"
#include "qead/runner.hpp"
#include "qead/synth.hpp"
#include "qead/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct RunFlags {
  std::optional<std::string> config_file;
  std::optional<std::string> dataset;
  std::optional<std::string> label_column;
  std::optional<int> n_qubits;
  std::optional<int> num_layers;
  std::optional<std::uint64_t> shots;
  std::optional<std::size_t> groups;
  std::optional<double> target_prob;
  std::optional<double> anomaly_rate;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  std::optional<unsigned> workers;
  bool exact = false;
  bool noise = false;
  bool save_group_results = false;
  bool resume = false;
};

qead::RunConfig resolve_run_config(const RunFlags& flags) {
  qead::RunConfig config;
  if (flags.config_file) qead::load_config_file(config, *flags.config_file);
  // Command-line flags win over file settings.
  if (flags.dataset) config.dataset = *flags.dataset;
  if (flags.label_column) config.label_column = *flags.label_column;
  if (flags.n_qubits) config.n_qubits = *flags.n_qubits;
  if (flags.num_layers) config.num_layers = *flags.num_layers;
  if (flags.shots) config.shots = *flags.shots;
  if (flags.groups) config.ensemble_groups = *flags.groups;
  if (flags.target_prob) config.target_prob = *flags.target_prob;
  if (flags.anomaly_rate) config.anomaly_rate = *flags.anomaly_rate;
  if (flags.seed) config.master_seed = *flags.seed;
  if (flags.output_dir) config.output_dir = *flags.output_dir;
  if (flags.workers) config.workers = *flags.workers;
  if (flags.exact) config.exact_mode = true;
  if (flags.noise) config.noise.enabled = true;
  if (flags.save_group_results) config.save_group_results = true;
  if (flags.resume) config.resume = true;
  config.validate();
  return config;
}

void echo_config(const qead::RunConfig& config) {
  std::cout << "dataset          = " << config.dataset.string() << '\n'
            << "label_column     = "
            << (config.label_column ? *config.label_column : "(none)") << '\n'
            << "n_qubits         = " << config.n_qubits << '\n'
            << "num_layers       = " << config.num_layers << '\n'
            << "shots            = " << config.shots
            << (config.exact_mode ? " (exact mode; shots unused)" : "") << '\n'
            << "ensemble_groups  = " << config.ensemble_groups << '\n'
            << "target_prob      = " << config.target_prob << '\n'
            << "anomaly_rate     = " << config.anomaly_rate << '\n'
            << "bucket_size      = "
            << qead::compute_bucket_size(config.target_prob,
                                         config.anomaly_rate)
            << '\n'
            << "master_seed      = " << config.master_seed << '\n'
            << "noise            = " << (config.noise.enabled ? "on" : "off")
            << '\n'
            << "workers          = " << qead::resolve_workers(config) << '\n'
            << "output_dir       = " << config.output_dir.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ensemble anomaly detection via randomly-parameterized quantum "
               "autoencoder circuits"};
  app.set_version_flag("--version", qead::kVersion);
  app.require_subcommand(1);

  // --- run ---
  RunFlags flags;
  auto* run = app.add_subcommand("run", "Score a dataset");
  run->add_option("--config", flags.config_file, "Key-value config file");
  run->add_option("--dataset", flags.dataset, "Input CSV (header row)");
  run->add_option("--label-column", flags.label_column,
                  "Label column to quarantine for evaluation");
  run->add_option("--n-qubits", flags.n_qubits, "Register width (default 3)");
  run->add_option("--layers", flags.num_layers, "Ansatz layers (default 2)");
  run->add_option("--shots", flags.shots, "Shots per circuit (default 4096)");
  run->add_option("--groups", flags.groups,
                  "Ensemble groups (default 1000)");
  run->add_option("--target-prob", flags.target_prob,
                  "Probability of an anomaly per bucket (default 0.75)");
  run->add_option("--anomaly-rate", flags.anomaly_rate,
                  "Estimated anomaly rate (default 0.03)");
  run->add_option("--seed", flags.seed, "Master seed (default 1)");
  run->add_option("--out", flags.output_dir, "Output directory (default out)");
  run->add_option("--workers", flags.workers,
                  "Worker threads (default: QEAD_WORKERS or hardware)");
  run->add_flag("--exact", flags.exact, "Exact probabilities (infinite shots)");
  run->add_flag("--noise", flags.noise, "Enable the gate-noise model");
  run->add_flag("--save-group-results", flags.save_group_results,
                "Write per-group similarity CSVs");
  run->add_flag("--resume", flags.resume,
                "Reuse per-group CSVs already in the output directory");

  // --- inject ---
  std::string inject_input, inject_output;
  std::string inject_label = "label";
  std::size_t inject_count = 0;
  std::uint64_t inject_seed = 1;
  auto* inject = app.add_subcommand(
      "inject", "Replace random rows with plausible synthetic anomalies");
  inject->add_option("--input", inject_input, "Numeric CSV")->required();
  inject->add_option("--output", inject_output, "Output CSV")->required();
  inject->add_option("--count", inject_count, "Rows to replace")->required();
  inject->add_option("--seed", inject_seed, "RNG seed (default 1)");
  inject->add_option("--label-column", inject_label,
                     "Name of the appended label column (default 'label')");

  // --- metrics ---
  std::string metrics_scores, metrics_dataset, metrics_label, metrics_out = "out";
  double metrics_rate = 0.0;
  auto* metrics = app.add_subcommand(
      "metrics", "Recompute metrics from a scores CSV and labeled dataset");
  metrics->add_option("--scores", metrics_scores, "scores.csv from a run")
      ->required();
  metrics->add_option("--dataset", metrics_dataset, "Labeled CSV")->required();
  metrics->add_option("--label-column", metrics_label, "Label column name")
      ->required();
  metrics->add_option("--anomaly-rate", metrics_rate,
                      "Flagging rate (default: true rate from labels)");
  metrics->add_option("--out", metrics_out, "Output directory (default out)");

  // --- bucket-size ---
  double bucket_p = 0.0, bucket_r = 0.0;
  auto* bucket = app.add_subcommand(
      "bucket-size", "Print the bucket size for a target probability");
  bucket->add_option("--target-prob", bucket_p, "Probability in (0,1)")
      ->required();
  bucket->add_option("--anomaly-rate", bucket_r, "Rate in (0,1)")->required();

  // --- synth ---
  qead::SyntheticSpec synth_spec;
  std::string synth_output;
  std::string synth_label = "label";
  std::uint64_t synth_seed = 1;
  auto* synth = app.add_subcommand(
      "synth", "Generate a labeled Gaussian benchmark dataset");
  synth->add_option("--output", synth_output, "Output CSV")->required();
  synth->add_option("--samples", synth_spec.samples, "Rows (default 300)");
  synth->add_option("--features", synth_spec.features,
                    "Features (default 16)");
  synth->add_option("--anomalies", synth_spec.anomalies,
                    "Anomalous rows (default 10)");
  synth->add_option("--shift", synth_spec.shift_sigmas,
                    "Mean shift in feature sigmas (default 4)");
  synth->add_option("--seed", synth_seed, "RNG seed (default 1)");
  synth->add_option("--label-column", synth_label,
                    "Name of the label column (default 'label')");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const qead::RunConfig config = resolve_run_config(flags);
      echo_config(config);
      const qead::RunArtifacts artifacts = qead::run_pipeline(config);
      std::cout << "scores   -> " << artifacts.scores_csv.string() << '\n';
      if (artifacts.metrics_json) {
        std::cout << "metrics  -> " << artifacts.metrics_json->string() << '\n'
                  << "curve    -> " << artifacts.curve_csv->string() << '\n';
      }
      std::cout << "manifest -> " << artifacts.manifest_json.string() << '\n';
    } else if (*inject) {
      const qead::LoadedDataset loaded = qead::load_csv(inject_input, std::nullopt);
      const qead::NumericDataset numeric = qead::coerce_numeric(loaded.data);
      const qead::LabeledDataset out =
          qead::inject_anomalies(numeric, inject_count, inject_seed);
      qead::write_csv(inject_output, out.data, &out.labels, inject_label);
      std::cout << "wrote " << inject_output << " with " << inject_count
                << " injected anomalies\n";
    } else if (*metrics) {
      const qead::ScoreTable scores = qead::read_scores_csv(metrics_scores);
      const qead::LoadedDataset loaded =
          qead::load_csv(metrics_dataset, metrics_label);
      if (!loaded.labels || loaded.labels->size() != scores.num_samples()) {
        throw qead::DataError("labels do not match the scores table");
      }
      double rate = metrics_rate;
      if (rate <= 0.0) {
        rate = static_cast<double>(loaded.labels->num_anomalies()) /
               static_cast<double>(loaded.labels->size());
        if (rate <= 0.0) throw qead::DataError("labels contain no anomalies");
      }
      const qead::RankedScores ranked = qead::rank_and_flag(scores, rate);
      const qead::MetricsReport report =
          qead::compute_metrics(ranked, *loaded.labels);
      std::filesystem::create_directories(metrics_out);
      qead::write_metrics_json(
          std::filesystem::path(metrics_out) / "metrics.json", report);
      qead::write_curve_csv(
          std::filesystem::path(metrics_out) / "detection_curve.csv", report);
      std::cout << "precision = " << report.precision << '\n'
                << "recall    = " << report.recall << '\n'
                << "f1        = " << report.f1 << '\n'
                << "accuracy  = " << report.accuracy << '\n';
    } else if (*bucket) {
      std::cout << qead::compute_bucket_size(bucket_p, bucket_r) << '\n';
    } else if (*synth) {
      const qead::LabeledDataset out =
          qead::make_gaussian_dataset(synth_spec, synth_seed);
      qead::write_csv(synth_output, out.data, &out.labels, synth_label);
      std::cout << "wrote " << synth_output << " (" << synth_spec.samples
                << " rows, " << synth_spec.anomalies << " anomalies)\n";
    }
  } catch (const qead::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qead::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
