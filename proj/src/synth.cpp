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

#include "qead/synth.hpp"

#include "qead/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qead {

LabeledDataset make_gaussian_dataset(const SyntheticSpec& spec,
                                     std::uint64_t seed) {
  if (spec.samples < 2 || spec.features < 1) {
    throw std::invalid_argument("synthetic dataset needs >= 2 samples and >= 1 feature");
  }
  if (spec.anomalies >= spec.samples) {
    throw std::invalid_argument("anomaly count must be below sample count");
  }
  LabeledDataset out;
  out.data.values.resize(static_cast<std::ptrdiff_t>(spec.samples),
                         static_cast<std::ptrdiff_t>(spec.features));
  for (std::size_t c = 0; c < spec.features; ++c) {
    out.data.feature_names.push_back("f" + std::to_string(c));
  }

  SplitMix64 rng(derive_seed(seed, 0, 0));
  std::vector<double> mu(spec.features), sigma(spec.features);
  for (std::size_t c = 0; c < spec.features; ++c) {
    mu[c] = -10.0 + 20.0 * uniform_double(rng);
    sigma[c] = 0.5 + 2.5 * uniform_double(rng);
  }
  for (std::size_t r = 0; r < spec.samples; ++r) {
    for (std::size_t c = 0; c < spec.features; ++c) {
      out.data.values(static_cast<std::ptrdiff_t>(r),
                      static_cast<std::ptrdiff_t>(c)) =
          mu[c] + sigma[c] * standard_normal(rng);
    }
  }

  out.labels.flags.assign(spec.samples, 0);
  SplitMix64 pick_rng(derive_seed(seed, 1, 0));
  const std::vector<std::size_t> chosen =
      sample_indices(spec.anomalies, spec.samples, pick_rng);
  const std::size_t shifted =
      (spec.features + 1) / 2;  // half the features, rounded up
  for (std::size_t row : chosen) {
    out.labels.flags[row] = 1;
    const std::vector<std::size_t> cols =
        sample_indices(shifted, spec.features, pick_rng);
    for (std::size_t c : cols) {
      const double direction = uniform_double(pick_rng) < 0.5 ? -1.0 : 1.0;
      out.data.values(static_cast<std::ptrdiff_t>(row),
                      static_cast<std::ptrdiff_t>(c)) +=
          direction * spec.shift_sigmas * sigma[c];
    }
  }
  return out;
}

LabeledDataset inject_anomalies(const NumericDataset& data, std::size_t count,
                                std::uint64_t seed) {
  const std::size_t n = data.num_rows();
  const std::size_t m = data.num_features();
  if (count * 10 >= n) {
    throw DataError("injected count must stay below a tenth of the dataset");
  }
  LabeledDataset out;
  out.data = data;
  out.labels.flags.assign(n, 0);
  if (count == 0) return out;

  const Eigen::VectorXd mins = data.values.colwise().minCoeff();
  const Eigen::VectorXd maxes = data.values.colwise().maxCoeff();

  SplitMix64 rng(seed);
  const std::vector<std::size_t> rows = sample_indices(count, n, rng);
  const std::size_t tail_features = (m + 1) / 2;
  for (std::size_t row : rows) {
    out.labels.flags[row] = 1;
    for (std::size_t c = 0; c < m; ++c) {
      const double lo = mins[static_cast<std::ptrdiff_t>(c)];
      const double hi = maxes[static_cast<std::ptrdiff_t>(c)];
      out.data.values(static_cast<std::ptrdiff_t>(row),
                      static_cast<std::ptrdiff_t>(c)) =
          lo + (hi - lo) * uniform_double(rng);
    }
    // Push a random half of the features into a 5% tail of their range.
    const std::vector<std::size_t> cols = sample_indices(tail_features, m, rng);
    for (std::size_t c : cols) {
      const double lo = mins[static_cast<std::ptrdiff_t>(c)];
      const double hi = maxes[static_cast<std::ptrdiff_t>(c)];
      const double width = 0.05 * (hi - lo);
      const bool top = uniform_double(rng) < 0.5;
      const double u = uniform_double(rng);
      out.data.values(static_cast<std::ptrdiff_t>(row),
                      static_cast<std::ptrdiff_t>(c)) =
          top ? hi - width * u : lo + width * u;
    }
  }
  return out;
}

}  // namespace qead
