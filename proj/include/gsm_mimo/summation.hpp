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


#ifndef GSM_MIMO_SUMMATION_HPP
#define GSM_MIMO_SUMMATION_HPP

#include <cstddef>
#include <span>

namespace gsm_mimo {

// Pairwise (cascade) summation: error grows as O(log n) instead of O(n).
// Deterministic for a given input order.
template <typename T>
T pairwise_sum(std::span<const T> x) {
  constexpr std::size_t kBlock = 16;
  if (x.size() <= kBlock) {
    T acc{0};
    for (const T& v : x) acc += v;
    return acc;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace gsm_mimo

#endif  // GSM_MIMO_SUMMATION_HPP
