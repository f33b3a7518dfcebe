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

#include "qead/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qead {

double standard_normal(SplitMix64& rng) {
  // u1 is kept away from 0 so the log is finite.
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform_double(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> sample_indices(std::size_t m, std::size_t universe,
                                        SplitMix64& rng) {
  if (m > universe) {
    throw std::invalid_argument("sample_indices: m exceeds universe size");
  }
  std::vector<std::size_t> pool(universe);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(uniform_below(rng, universe - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t sample_binomial(std::uint64_t shots, double p, SplitMix64& rng) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return shots;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    hits += uniform_double(rng) < p ? 1 : 0;
  }
  return hits;
}

double sample_shots(double p_zero, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_shots: shots must be >= 1");
  if (!(p_zero >= 0.0 && p_zero <= 1.0)) {
    throw std::invalid_argument("sample_shots: p_zero outside [0, 1]");
  }
  SplitMix64 rng(seed);
  return static_cast<double>(sample_binomial(shots, p_zero, rng)) /
         static_cast<double>(shots);
}

}  // namespace qead
