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


#ifndef GSM_MIMO_GSM_HPP
#define GSM_MIMO_GSM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gsm_mimo/linalg.hpp"

namespace gsm_mimo {

// Sorted, 1-based antenna-group indices of one activated combination.
using Combination = std::vector<int>;

// 2^floor(log2(binom(n_m, n_rf))), exact in integer arithmetic.
// Requires 1 <= n_rf <= n_m <= 64.
std::uint64_t valid_combination_count(int n_m, int n_rf);

std::uint64_t binomial(int n, int k);

// The first `m_count` n_rf-subsets of {1..n_m} in lexicographic order.
std::vector<Combination> enumerate_combinations(int n_m, int n_rf,
                                                std::uint64_t m_count);

// (n_m * n_k) x |u| selection matrix [e_u1, e_u2, ...] (x) 1_{n_k}, scaled by
// 1/sqrt(n_k) so that every column has unit norm.
linalg::CMatrixd build_gsm_matrix(std::span<const int> u, int n_m, int n_k);

class GsmCodebook {
 public:
  // Matrices are precomputed when the codebook is small enough; otherwise
  // matrix() builds them from the combination on each call.
  static constexpr std::uint64_t kMaxMaterializedCount = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kMaxMaterializedEntries = std::uint64_t{1} << 21;

  GsmCodebook(int n_m, int n_k, int n_rf);

  int n_t() const { return n_m_ * n_k_; }
  int n_m() const { return n_m_; }
  int n_k() const { return n_k_; }
  int n_rf() const { return n_rf_; }
  std::size_t size() const { return combinations_.size(); }

  const std::vector<Combination>& combinations() const { return combinations_; }
  const Combination& combination(std::size_t m) const { return combinations_.at(m); }

  bool materialized() const { return !matrices_.empty(); }
  linalg::CMatrixd matrix(std::size_t m) const;

 private:
  int n_m_;
  int n_k_;
  int n_rf_;
  std::vector<Combination> combinations_;
  std::vector<linalg::CMatrixd> matrices_;
};

}  // namespace gsm_mimo

#endif  // GSM_MIMO_GSM_HPP
