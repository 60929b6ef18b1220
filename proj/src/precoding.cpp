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


#include "gsm_mimo/precoding.hpp"

#include <cmath>
#include <string>

namespace gsm_mimo {

linalg::CMatrixd effective_channel(const linalg::CMatrixd& h_matrix,
                                   const linalg::CMatrixd& c_m) {
  if (h_matrix.rows() != c_m.rows()) {
    throw DimensionError("effective_channel: channel has " + std::to_string(h_matrix.rows()) +
                         " antennas, GSM matrix has " + std::to_string(c_m.rows()));
  }
  return linalg::matmul(linalg::hermitian(h_matrix), c_m);
}

linalg::CMatrixd group_channel(const linalg::CMatrixd& h_matrix, int n_m, int n_k) {
  if (n_m < 1 || n_k < 1 || h_matrix.rows() != static_cast<Eigen::Index>(n_m) * n_k) {
    throw DimensionError("group_channel: channel rows must equal n_m * n_k");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_k));
  const Eigen::Index k = h_matrix.cols();
  linalg::CMatrixd g(k, n_m);
  for (Eigen::Index user = 0; user < k; ++user) {
    for (int group = 0; group < n_m; ++group) {
      linalg::Complexd acc{0.0, 0.0};
      for (int a = 0; a < n_k; ++a) acc += std::conj(h_matrix(group * n_k + a, user));
      g(user, group) = acc * scale;
    }
  }
  return g;
}

linalg::CMatrixd select_groups(const linalg::CMatrixd& group_channel, std::span<const int> u) {
  linalg::CMatrixd out(group_channel.rows(), static_cast<Eigen::Index>(u.size()));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 1 || u[j] > group_channel.cols()) {
      throw DimensionError("select_groups: group index out of range");
    }
    out.col(static_cast<Eigen::Index>(j)) = group_channel.col(u[j] - 1);
  }
  return out;
}

Precoder zf_precoder(const linalg::CMatrixd& h_eff, double p_max) {
  if (h_eff.rows() > h_eff.cols()) {
    throw InvalidArgument("zf_precoder: K=" + std::to_string(h_eff.rows()) +
                          " users exceed N_RF=" + std::to_string(h_eff.cols()));
  }
  if (!(p_max > 0.0)) throw InvalidArgument("zf_precoder: p_max must be > 0");

  const linalg::CMatrixd h_eff_h = h_eff.adjoint();
  const linalg::CMatrixd gram = h_eff * h_eff_h;
  linalg::CMatrixd gram_inv;
  try {
    gram_inv = linalg::inverse(gram);
  } catch (const SingularMatrixError& e) {
    throw RankDeficiencyError(std::string("zf_precoder: singular Gram matrix (") + e.what() + ")");
  }
  const double tr = linalg::trace(gram_inv).real();
  if (!(tr > 0.0) || !std::isfinite(tr)) {
    throw RankDeficiencyError("zf_precoder: non-positive trace of inverse Gram matrix");
  }
  const double beta = std::sqrt(p_max / tr);
  return {beta * (h_eff_h * gram_inv), beta, p_max};
}

}  // namespace gsm_mimo
