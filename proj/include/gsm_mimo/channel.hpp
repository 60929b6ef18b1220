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


#ifndef GSM_MIMO_CHANNEL_HPP
#define GSM_MIMO_CHANNEL_HPP

#include <vector>

#include "gsm_mimo/linalg.hpp"
#include "gsm_mimo/rng.hpp"

namespace gsm_mimo {

// Distance-dependent Rayleigh channel: h_k ~ CN(0, l(d_k) I), l(d) = d_bar d^-alpha.
struct ChannelModel {
  double d_bar = 0.0002951209226666387;  // 10^-3.53
  double alpha = 3.76;
  double d_min = 35.0;   // m
  double d_max = 250.0;  // m

  void validate() const;
  bool operator==(const ChannelModel&) const = default;
};

struct ChannelRealization {
  std::vector<double> distances;  // m, one per user
  linalg::CMatrixd h_matrix;      // N_T x K, column k is h_k
};

double path_loss(double distance, const ChannelModel& model);

// K distances, i.i.d. uniform on [d_min, d_max].
std::vector<double> draw_distances(int k, const ChannelModel& model, Rng& rng);

// Entries are drawn column by column, real part before imaginary part.
ChannelRealization draw_channel(int n_t, std::vector<double> distances,
                                const ChannelModel& model, Rng& rng);

}  // namespace gsm_mimo

#endif  // GSM_MIMO_CHANNEL_HPP
