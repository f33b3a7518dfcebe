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

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace qead;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content = "") {
    path = std::filesystem::temp_directory_path() / name;
    if (!content.empty()) {
      std::ofstream out(path);
      out << content;
    }
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("load_csv splits features from the label column") {
  TempFile csv("qead_test_basic.csv",
               "a,b,label,c\n"
               "1,2,0,hello\n"
               "4,,1,\"quoted, text\"\n");
  const LoadedDataset loaded = load_csv(csv.path, std::string("label"));
  CHECK(loaded.data.feature_names == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(loaded.labels.has_value());
  CHECK(loaded.labels->flags == std::vector<std::uint8_t>{0, 1});
  CHECK(loaded.data.num_rows() == 2);
  CHECK(std::get<double>(loaded.data.rows[0][0]) == 1.0);
  CHECK(std::holds_alternative<std::monostate>(loaded.data.rows[1][1]));
  CHECK(std::get<std::string>(loaded.data.rows[1][2]) == "quoted, text");
}

TEST_CASE("load_csv without a label column quarantines nothing") {
  TempFile csv("qead_test_nolabel.csv", "x,y\n1,2\n3,4\n");
  const LoadedDataset loaded = load_csv(csv.path, std::nullopt);
  CHECK_FALSE(loaded.labels.has_value());
  CHECK(loaded.data.num_features() == 2);
}

TEST_CASE("load_csv errors are specific") {
  TempFile missing_col("qead_test_missingcol.csv", "x,y\n1,2\n");
  CHECK_THROWS_AS(load_csv(missing_col.path, std::string("label")), DataError);

  TempFile ragged("qead_test_ragged.csv", "x,y\n1,2\n1\n");
  CHECK_THROWS_AS(load_csv(ragged.path, std::nullopt), DataError);

  CHECK_THROWS_AS(load_csv("/nonexistent/file.csv", std::nullopt), DataError);
}

TEST_CASE("write_csv then load_csv round-trips numeric data and labels") {
  NumericDataset data;
  data.feature_names = {"u", "v"};
  data.values.resize(3, 2);
  data.values << 0.25, -1.5, 3.0625, 2, 1e-3, 123456.789;
  LabelTable labels;
  labels.flags = {0, 1, 0};

  TempFile csv("qead_test_roundtrip.csv");
  write_csv(csv.path, data, &labels, "label");
  const LoadedDataset loaded = load_csv(csv.path, std::string("label"));
  REQUIRE(loaded.labels.has_value());
  CHECK(loaded.labels->flags == labels.flags);
  const NumericDataset back = coerce_numeric(loaded.data);
  CHECK((back.values - data.values).cwiseAbs().maxCoeff() == 0.0);
}
