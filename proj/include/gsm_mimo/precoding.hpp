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


#ifndef GSM_MIMO_PRECODING_HPP
#define GSM_MIMO_PRECODING_HPP

#include <span>

#include "gsm_mimo/channel.hpp"
#include "gsm_mimo/linalg.hpp"

namespace gsm_mimo {

struct Precoder {
  linalg::CMatrixd b_matrix;  // N_RF x K, column k is b_k
  double beta = 0.0;          // sqrt(W)
  double p_max = 0.0;         // W
};

// K x N_RF matrix H^H C_m: entry (k, j) is h_k^H times column j of C_m.
linalg::CMatrixd effective_channel(const linalg::CMatrixd& h_matrix,
                                   const linalg::CMatrixd& c_m);

inline linalg::CMatrixd effective_channel(const ChannelRealization& h,
                                          const linalg::CMatrixd& c_m) {
  return effective_channel(h.h_matrix, c_m);
}

// K x N_m matrix of per-group channel sums: entry (k, g) is
// (1/sqrt(n_k)) * sum of conj(h_k) over the antennas of group g. Selecting the
// columns of a combination u yields H^H C_m without forming C_m.
linalg::CMatrixd group_channel(const linalg::CMatrixd& h_matrix, int n_m, int n_k);

// Columns u (1-based) of a group channel.
linalg::CMatrixd select_groups(const linalg::CMatrixd& group_channel, std::span<const int> u);

// B = beta h_eff^H (h_eff h_eff^H)^-1 with beta = sqrt(p_max / tr((h_eff h_eff^H)^-1)).
// Throws RankDeficiencyError when the Gram matrix is singular.
Precoder zf_precoder(const linalg::CMatrixd& h_eff, double p_max);

}  // namespace gsm_mimo

#endif  // GSM_MIMO_PRECODING_HPP
