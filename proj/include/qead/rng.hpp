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

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qead {

// All randomness in this project flows through the generator below. The
// standard library distributions are implementation-defined, so every mapping
// from raw bits to a value (uniform double, bounded integer, shuffle,
// gaussian, binomial) is spelled out here and frozen by golden tests.

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 output mixing function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based seed split: sub-seed for stream `b` of work unit `a` under a
/// master seed. Pure function of its inputs, so any worker can derive any
/// stream without touching shared state.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0) {
  std::uint64_t z = master;
  z = mix64(z + kGolden64 * (a + 1));
  z = mix64(z + kGolden64 * (b + 1));
  return z;
}

/// SplitMix64 generator. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += kGolden64;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// Uniform double in [0, 1) using the top 53 bits.
inline double uniform_double(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2*pi).
inline double uniform_angle(SplitMix64& rng) {
  return uniform_double(rng) * 2.0 * std::numbers::pi;
}

/// Unbiased uniform integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t limit = SplitMix64::max() - SplitMix64::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

/// Standard normal via Box-Muller (first variate only; its pair is discarded
/// so consumption is one draw per call, independent of call history).
double standard_normal(SplitMix64& rng);

/// Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

/// m distinct indices sampled uniformly from [0, universe), returned sorted.
std::vector<std::size_t> sample_indices(std::size_t m, std::size_t universe,
                                        SplitMix64& rng);

/// Binomial(shots, p) draw as a Bernoulli sum; exact and platform-stable.
std::uint64_t sample_binomial(std::uint64_t shots, double p, SplitMix64& rng);

/// Shot-based estimate of a probability: k/shots with k ~ Binomial(shots, p).
double sample_shots(double p_zero, std::uint64_t shots, std::uint64_t seed);

}  // namespace qead
