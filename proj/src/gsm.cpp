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


#include "gsm_mimo/gsm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace gsm_mimo {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("binomial: need 0 <= k <= n");
  }
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i is binom(n - k + i, i), always an integer.
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument("binomial: overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t valid_combination_count(int n_m, int n_rf) {
  if (n_rf < 1 || n_m > 64 || n_rf > n_m) {
    throw InvalidArgument("valid_combination_count: need 1 <= n_rf <= n_m <= 64, got n_m=" +
                          std::to_string(n_m) + ", n_rf=" + std::to_string(n_rf));
  }
  return std::bit_floor(binomial(n_m, n_rf));
}

std::vector<Combination> enumerate_combinations(int n_m, int n_rf,
                                                std::uint64_t m_count) {
  if (n_rf < 1 || n_rf > n_m) {
    throw InvalidArgument("enumerate_combinations: need 1 <= n_rf <= n_m");
  }
  if (m_count > binomial(n_m, n_rf)) {
    throw InvalidArgument("enumerate_combinations: m_count exceeds binom(n_m, n_rf)");
  }
  std::vector<Combination> out;
  out.reserve(m_count);
  Combination cur(static_cast<std::size_t>(n_rf));
  for (int i = 0; i < n_rf; ++i) cur[i] = i + 1;
  while (out.size() < m_count) {
    out.push_back(cur);
    // Advance to the lexicographic successor.
    int i = n_rf - 1;
    while (i >= 0 && cur[i] == n_m - n_rf + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n_rf; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

linalg::CMatrixd build_gsm_matrix(std::span<const int> u, int n_m, int n_k) {
  if (u.empty() || n_m < 1 || n_k < 1) {
    throw InvalidArgument("build_gsm_matrix: empty combination or bad group shape");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 1 || u[i] > n_m) {
      throw InvalidArgument("build_gsm_matrix: group index " + std::to_string(u[i]) +
                            " outside 1.." + std::to_string(n_m));
    }
    if (i > 0 && u[i] <= u[i - 1]) {
      throw InvalidArgument("build_gsm_matrix: indices must be strictly increasing");
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_k));
  linalg::CMatrixd c = linalg::CMatrixd::Zero(n_m * n_k, static_cast<Eigen::Index>(u.size()));
  for (std::size_t col = 0; col < u.size(); ++col) {
    const int first = (u[col] - 1) * n_k;
    for (int r = 0; r < n_k; ++r) c(first + r, static_cast<Eigen::Index>(col)) = scale;
  }
  return c;
}

GsmCodebook::GsmCodebook(int n_m, int n_k, int n_rf)
    : n_m_(n_m), n_k_(n_k), n_rf_(n_rf) {
  if (n_k < 1) throw InvalidArgument("GsmCodebook: n_k must be >= 1");
  if (n_rf > n_m) {
    throw InvalidArgument("GsmCodebook: N_m >= N_RF violated (N_m=" + std::to_string(n_m) +
                          ", N_RF=" + std::to_string(n_rf) + ")");
  }
  const std::uint64_t m_count = valid_combination_count(n_m, n_rf);
  combinations_ = enumerate_combinations(n_m, n_rf, m_count);

  const std::uint64_t entries = m_count * static_cast<std::uint64_t>(n_t()) *
                                static_cast<std::uint64_t>(n_rf);
  if (m_count <= kMaxMaterializedCount && entries <= kMaxMaterializedEntries) {
    matrices_.reserve(combinations_.size());
    for (const auto& u : combinations_) matrices_.push_back(build_gsm_matrix(u, n_m, n_k));
  }
}

linalg::CMatrixd GsmCodebook::matrix(std::size_t m) const {
  if (materialized()) return matrices_.at(m);
  return build_gsm_matrix(combinations_.at(m), n_m_, n_k_);
}

}  // namespace gsm_mimo
