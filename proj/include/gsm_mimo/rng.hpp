// SPDX-License-Identifier: Apache-2.0
//
// gsm-mimo: energy-efficiency simulator for GSM-aided massive MIMO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef GSM_MIMO_RNG_HPP
#define GSM_MIMO_RNG_HPP

// Reproducible random streams.
//
// Every stream is a std::mt19937_64 whose 64-bit seed is derived from the run
// seed and a tuple of stream coordinates (sweep point, mode, trial, redraw
// attempt, purpose) by chained SplitMix64 mixing. Two streams with different
// coordinates are statistically independent, so trials can run on any number
// of workers without changing results.
//
// Uniform doubles take the top 53 bits of an engine output. Normals use the
// Box-Muller transform and are produced in pairs, which is exactly what a
// complex Gaussian draw consumes. Neither depends on the standard library's
// implementation-defined distributions, so outputs are stable across
// toolchains.

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace gsm_mimo {

enum class StreamPurpose : std::uint64_t {
  kDistances = 1,
  kChannel = 2,
  kMutualInfoOracle = 3,
  kTest = 4,
};

struct StreamId {
  std::uint64_t point = 0;
  std::uint64_t mode = 0;
  std::uint64_t trial = 0;
  std::uint64_t attempt = 0;
  StreamPurpose purpose = StreamPurpose::kTest;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed for the engine of stream `id` under run seed `seed`.
std::uint64_t derive_stream_seed(std::uint64_t seed, const StreamId& id);

class Rng {
 public:
  explicit Rng(std::uint64_t engine_seed) : engine_(engine_seed) {}
  Rng(std::uint64_t seed, const StreamId& id)
      : engine_(derive_stream_seed(seed, id)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Two independent standard normals.
  std::pair<double, double> normal_pair();

  // Circularly-symmetric complex Gaussian with total variance `variance`.
  std::complex<double> complex_normal(double variance);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gsm_mimo

#endif  // GSM_MIMO_RNG_HPP
