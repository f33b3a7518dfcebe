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

#include "qead/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>

namespace qead {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

Cell parse_cell(const std::string& raw) {
  const std::string text = trimmed(raw);
  if (text.empty()) return std::monostate{};
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc{} && ptr == end) return value;
  return text;
}

bool parse_label(const std::string& raw) {
  const std::string text = trimmed(raw);
  if (text.empty()) return false;
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc{} && ptr == end) return value != 0.0;
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return lower == "true" || lower == "yes" || lower == "anomaly";
}

}  // namespace

LoadedDataset load_csv(const std::filesystem::path& path,
                       const std::optional<std::string>& label_column) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot open " + path.string());
  std::string line;
  if (!std::getline(file, line)) throw DataError("empty file " + path.string());

  const std::vector<std::string> header = split_csv_line(line);
  std::ptrdiff_t label_index = -1;
  LoadedDataset out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = trimmed(header[i]);
    if (label_column && name == *label_column) {
      if (label_index >= 0) {
        throw DataError("duplicate label column '" + *label_column + "'");
      }
      label_index = static_cast<std::ptrdiff_t>(i);
    } else {
      out.data.feature_names.push_back(name);
    }
  }
  if (label_column && label_index < 0) {
    throw DataError("label column '" + *label_column + "' not found in " +
                    path.string());
  }
  if (out.data.feature_names.empty()) {
    throw DataError("no feature columns in " + path.string());
  }
  if (label_column) out.labels = LabelTable{};

  std::size_t row_number = 1;
  while (std::getline(file, line)) {
    ++row_number;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw DataError(path.string() + ":" + std::to_string(row_number) +
                      ": expected " + std::to_string(header.size()) +
                      " fields, got " + std::to_string(fields.size()));
    }
    std::vector<Cell> row;
    row.reserve(out.data.feature_names.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == label_index) {
        out.labels->flags.push_back(parse_label(fields[i]) ? 1 : 0);
      } else {
        row.push_back(parse_cell(fields[i]));
      }
    }
    out.data.rows.push_back(std::move(row));
  }
  if (out.data.rows.empty()) {
    throw DataError("no data rows in " + path.string());
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const NumericDataset& data,
               const LabelTable* labels, const std::string& label_column) {
  if (labels && labels->size() != data.num_rows()) {
    throw DataError("label count does not match row count");
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path.string());
  for (std::size_t c = 0; c < data.feature_names.size(); ++c) {
    if (c) file << ',';
    file << data.feature_names[c];
  }
  if (labels) file << ',' << label_column;
  file << '\n';
  char buffer[64];
  for (std::size_t r = 0; r < data.num_rows(); ++r) {
    for (std::size_t c = 0; c < data.num_features(); ++c) {
      if (c) file << ',';
      std::snprintf(buffer, sizeof buffer, "%.17g",
                    data.values(static_cast<std::ptrdiff_t>(r),
                                static_cast<std::ptrdiff_t>(c)));
      file << buffer;
    }
    if (labels) file << ',' << (labels->flags[r] ? 1 : 0);
    file << '\n';
  }
  if (!file.good()) throw DataError("write failed: " + path.string());
}

}  // namespace qead
