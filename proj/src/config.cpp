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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace qead {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string lower(value);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "on" || lower == "1" || lower == "yes") return true;
  if (lower == "false" || lower == "off" || lower == "0" || lower == "no") return false;
  throw ConfigError("invalid boolean for " + key + ": '" + value + "'");
}

void check_probability(const std::string& key, double p, bool open_interval) {
  const bool ok = open_interval ? (p > 0.0 && p < 1.0) : (p >= 0.0 && p <= 1.0);
  if (!ok) {
    throw ConfigError(key + " = " + std::to_string(p) + " outside " +
                      (open_interval ? "(0, 1)" : "[0, 1]"));
  }
}

}  // namespace

void RunConfig::validate() const {
  if (n_qubits < 1 || n_qubits > 10) {
    throw ConfigError("n_qubits = " + std::to_string(n_qubits) +
                      " outside [1, 10]");
  }
  if (num_layers < 1) throw ConfigError("num_layers must be >= 1");
  if (shots < 1) throw ConfigError("shots must be >= 1");
  if (ensemble_groups < 1) throw ConfigError("ensemble_groups must be >= 1");
  check_probability("target_prob", target_prob, true);
  check_probability("anomaly_rate", anomaly_rate, true);
  check_probability("depol_1q", noise.depol_1q, false);
  check_probability("depol_2q", noise.depol_2q, false);
  check_probability("readout_flip", noise.readout_flip, false);
}

void apply_setting(RunConfig& config, const std::string& raw_key,
                   const std::string& raw_value) {
  const std::string key = trimmed(raw_key);
  const std::string value = trimmed(raw_value);
  if (key == "dataset") {
    config.dataset = value;
  } else if (key == "label_column") {
    config.label_column = value.empty() ? std::nullopt
                                        : std::optional<std::string>(value);
  } else if (key == "n_qubits") {
    config.n_qubits = parse_number<int>(key, value);
  } else if (key == "num_layers") {
    config.num_layers = parse_number<int>(key, value);
  } else if (key == "shots") {
    config.shots = parse_number<std::uint64_t>(key, value);
  } else if (key == "ensemble_groups") {
    config.ensemble_groups = parse_number<std::size_t>(key, value);
  } else if (key == "target_prob") {
    config.target_prob = parse_number<double>(key, value);
  } else if (key == "anomaly_rate") {
    config.anomaly_rate = parse_number<double>(key, value);
  } else if (key == "master_seed") {
    config.master_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "exact_mode") {
    config.exact_mode = parse_bool(key, value);
  } else if (key == "noise") {
    config.noise.enabled = parse_bool(key, value);
  } else if (key == "depol_1q") {
    config.noise.depol_1q = parse_number<double>(key, value);
  } else if (key == "depol_2q") {
    config.noise.depol_2q = parse_number<double>(key, value);
  } else if (key == "readout_flip") {
    config.noise.readout_flip = parse_number<double>(key, value);
  } else if (key == "output_dir") {
    config.output_dir = value;
  } else if (key == "workers") {
    config.workers = parse_number<unsigned>(key, value);
  } else if (key == "save_group_results") {
    config.save_group_results = parse_bool(key, value);
  } else if (key == "resume") {
    config.resume = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file " + path.string());
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trimmed(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    apply_setting(config, stripped.substr(0, eq), stripped.substr(eq + 1));
  }
}

unsigned resolve_workers(const RunConfig& config) {
  if (config.workers > 0) return config.workers;
  if (const char* env = std::getenv("QEAD_WORKERS")) {
    const std::string value(env);
    unsigned out = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec == std::errc{} && ptr == value.data() + value.size() && out > 0) {
      return out;
    }
    throw ConfigError("QEAD_WORKERS must be a positive integer");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace qead
