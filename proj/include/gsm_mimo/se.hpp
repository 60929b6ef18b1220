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


#ifndef GSM_MIMO_SE_HPP
#define GSM_MIMO_SE_HPP

// Spectral efficiency of a single user.
//
// With GSM the received scalar y_k is a Gaussian mixture over the M equally
// likely antenna-group combinations, component m having variance
//   Sigma_m = sigma_N^2 + |h_k^H C_m b_k|^2.
// Its SE splits into the information carried by the modulated symbol given
// the combination (APM part) and the information carried by the combination
// index itself (spatial part). The spatial part has no closed form; the
// library evaluates the usual pairwise-overlap approximation and, separately,
// a Monte-Carlo estimate of the exact mixture integral as an oracle.

#include <cstddef>
#include <span>
#include <vector>

#include "gsm_mimo/gsm.hpp"
#include "gsm_mimo/linalg.hpp"
#include "gsm_mimo/rng.hpp"

namespace gsm_mimo {

struct CovarianceSet {
  std::vector<double> sigmas;  // W, one per combination
  double noise_var = 0.0;      // W

  // Throws InvalidArgument unless noise_var > 0, the set is non-empty and every
  // Sigma_m >= noise_var.
  void validate() const;
};

// sigma_N^2 + |h_k^H C_m b_k|^2
double covariance(const linalg::CVectord& h_k, const linalg::CMatrixd& c_m,
                  const linalg::CVectord& b_k, double noise_var);

// Same quantity when the effective gain h_k^H C_m b_k is already known.
inline double covariance_from_gain(linalg::Complexd gain, double noise_var) {
  return noise_var + std::norm(gain);
}

// (1/M) sum_m log2(Sigma_m / sigma_N^2)
double apm_mutual_info(const CovarianceSet& cov);

struct SpatialInfo {
  double value = 0.0;       // clamped to [0, log2 M]
  double unclamped = 0.0;   // raw approximation, kept for diagnostics
};

// log2(M/2) - (1/M) sum_n log2( sum_t Sigma_n / (Sigma_n + Sigma_t) )
SpatialInfo spatial_mutual_info_approx(const CovarianceSet& cov);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

inline constexpr std::size_t kDefaultOracleSamples = 200'000;

// Monte-Carlo estimate of I(y; m) for the zero-mean complex Gaussian mixture:
// `samples` draws per component, each contributing
// log2[ p(y|n) / ((1/M) sum_t p(y|t)) ].
McEstimate spatial_mutual_info_mc(const CovarianceSet& cov, std::size_t samples, Rng& rng);

struct UserSe {
  double se = 0.0;       // bit/s/Hz
  double apm = 0.0;
  double spatial = 0.0;
  double spatial_unclamped = 0.0;
};

UserSe gsm_user_se(const CovarianceSet& cov);

// h_k: N_T channel of user k. precoder_columns[m]: b_k of the ZF precoder
// built for combination m.
UserSe gsm_user_se(const linalg::CVectord& h_k, const GsmCodebook& codebook,
                   std::span<const linalg::CVectord> precoder_columns, double noise_var);

// log2(1 + |h_k^H b_k|^2 / (sum_{i != k} |h_k^H b_i|^2 + sigma_N^2)), where
// the b_i are the columns of `b_matrix` and `user` selects k.
double conventional_user_se(const linalg::CVectord& h_k, const linalg::CMatrixd& b_matrix,
                            Eigen::Index user, double noise_var);

// W * sum(per_user_se), in bit/s.
double total_rate(std::span<const double> per_user_se, double w);

struct SeResult {
  std::vector<double> per_user_se;
  std::vector<double> apm_component;
  std::vector<double> spatial_component;
  double total_rate = 0.0;
};

}  // namespace gsm_mimo

#endif  // GSM_MIMO_SE_HPP
