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


#include "gsm_mimo/rng.hpp"

#include <cmath>
#include <numbers>

namespace gsm_mimo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, const StreamId& id) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ id.point);
  h = splitmix64(h ^ id.mode);
  h = splitmix64(h ^ id.trial);
  h = splitmix64(h ^ id.attempt);
  h = splitmix64(h ^ static_cast<std::uint64_t>(id.purpose));
  return h;
}

std::pair<double, double> Rng::normal_pair() {
  // 1 - u lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::complex<double> Rng::complex_normal(double variance) {
  const auto [re, im] = normal_pair();
  const double s = std::sqrt(variance / 2.0);
  return {s * re, s * im};
}

}  // namespace gsm_mimo
