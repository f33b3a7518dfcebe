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

#include "qead/metrics.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qead {

double detection_rate_at(std::span<const std::size_t> ranking,
                         const LabelTable& labels, int percentile) {
  if (percentile < 1 || percentile > 100) {
    throw std::invalid_argument("percentile must lie in [1, 100]");
  }
  if (ranking.size() != labels.size()) {
    throw std::invalid_argument("ranking/labels size mismatch");
  }
  const std::size_t total_anomalies = labels.num_anomalies();
  if (total_anomalies == 0) {
    throw DataError("detection rate undefined: labels contain no anomalies");
  }
  const std::size_t n = ranking.size();
  const std::size_t top = static_cast<std::size_t>(std::ceil(
      static_cast<double>(percentile) * static_cast<double>(n) / 100.0));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(top, n); ++i) {
    hits += labels.flags[ranking[i]] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(total_anomalies);
}

MetricsReport confusion_metrics(const RankedScores& ranked,
                                const LabelTable& labels) {
  if (ranked.flagged.size() != labels.size()) {
    throw std::invalid_argument("flags/labels size mismatch");
  }
  const std::size_t n = labels.size();
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool flagged = ranked.flagged[i] != 0;
    const bool truth = labels.flags[i] != 0;
    if (flagged && truth) ++tp;
    else if (flagged) ++fp;
    else if (truth) ++fn;
    else ++tn;
  }
  MetricsReport report;
  report.precision =
      (tp + fp) == 0 ? 0.0
                     : static_cast<double>(tp) / static_cast<double>(tp + fp);
  report.recall =
      (tp + fn) == 0 ? 0.0
                     : static_cast<double>(tp) / static_cast<double>(tp + fn);
  report.f1 = (report.precision + report.recall) == 0.0
                  ? 0.0
                  : 2.0 * report.precision * report.recall /
                        (report.precision + report.recall);
  report.accuracy = static_cast<double>(tp + tn) / static_cast<double>(n);
  return report;
}

MetricsReport compute_metrics(const RankedScores& ranked,
                              const LabelTable& labels) {
  MetricsReport report = confusion_metrics(ranked, labels);
  if (labels.num_anomalies() > 0) {
    report.detection_curve.reserve(100);
    for (int k = 1; k <= 100; ++k) {
      report.detection_curve.emplace_back(
          k, detection_rate_at(ranked.ranking, labels, k));
    }
  }
  return report;
}

void write_metrics_json(const std::filesystem::path& path,
                        const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["accuracy"] = report.accuracy;
  auto curve = nlohmann::ordered_json::array();
  for (const auto& [k, rate] : report.detection_curve) {
    curve.push_back({k, rate});
  }
  j["detection_curve"] = std::move(curve);
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path.string());
  file << j.dump(2) << '\n';
  if (!file.good()) throw DataError("write failed: " + path.string());
}

void write_curve_csv(const std::filesystem::path& path,
                     const MetricsReport& report) {
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path.string());
  file << "percentile,detection_rate\n";
  char buffer[64];
  for (const auto& [k, rate] : report.detection_curve) {
    std::snprintf(buffer, sizeof buffer, "%.17g", rate);
    file << k << ',' << buffer << '\n';
  }
  if (!file.good()) throw DataError("write failed: " + path.string());
}

std::vector<std::pair<int, double>> read_curve_csv(
    const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot read " + path.string());
  std::string line;
  if (!std::getline(file, line) || line != "percentile,detection_rate") {
    throw DataError("bad curve header in " + path.string());
  }
  std::vector<std::pair<int, double>> curve;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    int k = 0;
    double rate = 0.0;
    char comma = 0;
    if (!(ss >> k >> comma >> rate)) {
      throw DataError("bad curve row in " + path.string());
    }
    curve.emplace_back(k, rate);
  }
  return curve;
}

}  // namespace qead
