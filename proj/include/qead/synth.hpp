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

#include <cstdint>

namespace qead {

struct LabeledDataset {
  NumericDataset data;
  LabelTable labels;
};

/// Synthetic benchmark: independent Gaussian features (random per-feature
/// location and scale), with `anomalies` rows mean-shifted by
/// `shift_sigmas` standard deviations on a random half of the features.
struct SyntheticSpec {
  std::size_t samples = 300;
  std::size_t features = 16;
  std::size_t anomalies = 10;
  double shift_sigmas = 4.0;
};

LabeledDataset make_gaussian_dataset(const SyntheticSpec& spec,
                                     std::uint64_t seed);

/// Replaces `count` random rows with plausible anomalies: every feature drawn
/// uniformly from its observed [min, max], then at least half the features
/// pushed into the top or bottom 5% tail of that range. Rejects count >= N/10
/// (heavier contamination would distort the normalization statistics).
LabeledDataset inject_anomalies(const NumericDataset& data, std::size_t count,
                                std::uint64_t seed);

}  // namespace qead
