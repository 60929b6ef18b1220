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


#include "gsm_mimo/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gsm_mimo {

void ChannelModel::validate() const {
  if (!(d_bar > 0.0)) throw InvalidArgument("channel: d_bar must be > 0");
  if (!(alpha > 0.0)) throw InvalidArgument("channel: alpha must be > 0");
  if (!(d_min > 0.0) || !(d_max >= d_min)) {
    throw InvalidArgument("channel: need 0 < d_min <= d_max (d_min=" + std::to_string(d_min) +
                          ", d_max=" + std::to_string(d_max) + ")");
  }
}

double path_loss(double distance, const ChannelModel& model) {
  if (!(distance > 0.0)) {
    throw InvalidArgument("path_loss: distance must be > 0, got " + std::to_string(distance));
  }
  return model.d_bar * std::pow(distance, -model.alpha);
}

std::vector<double> draw_distances(int k, const ChannelModel& model, Rng& rng) {
  if (k < 1) throw InvalidArgument("draw_distances: need at least one user");
  std::vector<double> d(static_cast<std::size_t>(k));
  for (auto& x : d) x = rng.uniform(model.d_min, model.d_max);
  return d;
}

ChannelRealization draw_channel(int n_t, std::vector<double> distances,
                                const ChannelModel& model, Rng& rng) {
  if (n_t < 1) throw InvalidArgument("draw_channel: n_t must be >= 1");
  if (distances.empty()) throw InvalidArgument("draw_channel: no users");
  const auto k = static_cast<Eigen::Index>(distances.size());
  linalg::CMatrixd h(n_t, k);
  for (Eigen::Index col = 0; col < k; ++col) {
    const double variance = path_loss(distances[static_cast<std::size_t>(col)], model);
    for (Eigen::Index row = 0; row < n_t; ++row) h(row, col) = rng.complex_normal(variance);
  }
  return {std::move(distances), std::move(h)};
}

}  // namespace gsm_mimo
