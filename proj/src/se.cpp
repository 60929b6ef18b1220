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


#include "gsm_mimo/se.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gsm_mimo/summation.hpp"

namespace gsm_mimo {

void CovarianceSet::validate() const {
  if (sigmas.empty()) throw InvalidArgument("CovarianceSet: no combinations");
  if (!(noise_var > 0.0)) throw InvalidArgument("CovarianceSet: noise_var must be > 0");
  for (double s : sigmas) {
    if (!(s >= noise_var) || !std::isfinite(s)) {
      throw InvalidArgument("CovarianceSet: Sigma_m=" + std::to_string(s) +
                            " below noise variance");
    }
  }
}

double covariance(const linalg::CVectord& h_k, const linalg::CMatrixd& c_m,
                  const linalg::CVectord& b_k, double noise_var) {
  if (h_k.size() != c_m.rows() || b_k.size() != c_m.cols()) {
    throw DimensionError("covariance: h_k, C_m and b_k are not conformable");
  }
  const linalg::Complexd gain = h_k.dot(c_m * b_k);  // h_k^H C_m b_k
  return covariance_from_gain(gain, noise_var);
}

double apm_mutual_info(const CovarianceSet& cov) {
  cov.validate();
  std::vector<double> terms(cov.sigmas.size());
  for (std::size_t m = 0; m < terms.size(); ++m) {
    terms[m] = std::log2(cov.sigmas[m] / cov.noise_var);
  }
  return pairwise_sum<double>(terms) / static_cast<double>(terms.size());
}

SpatialInfo spatial_mutual_info_approx(const CovarianceSet& cov) {
  cov.validate();
  const auto& s = cov.sigmas;
  const std::size_t m_count = s.size();
  std::vector<double> ratios(m_count);
  std::vector<double> outer(m_count);
  for (std::size_t n = 0; n < m_count; ++n) {
    const double sn = s[n];
    for (std::size_t t = 0; t < m_count; ++t) ratios[t] = sn / (sn + s[t]);
    outer[n] = std::log2(pairwise_sum<double>(ratios));
  }
  const double m = static_cast<double>(m_count);
  const double raw = std::log2(m / 2.0) - pairwise_sum<double>(outer) / m;
  return {std::clamp(raw, 0.0, std::log2(m)), raw};
}

McEstimate spatial_mutual_info_mc(const CovarianceSet& cov, std::size_t samples, Rng& rng) {
  cov.validate();
  if (samples < 1000) throw InvalidArgument("spatial_mutual_info_mc: need >= 1000 samples");
  const auto& s = cov.sigmas;
  const std::size_t m_count = s.size();
  const double log_m = std::log(static_cast<double>(m_count));

  std::vector<double> log_norm(m_count);  // -ln(pi * Sigma_t)
  for (std::size_t t = 0; t < m_count; ++t) log_norm[t] = -std::log(std::numbers::pi * s[t]);

  std::vector<double> log_p(m_count);
  std::vector<double> draws(samples);
  double mean_sum = 0.0;
  double var_sum = 0.0;
  for (std::size_t n = 0; n < m_count; ++n) {
    for (std::size_t i = 0; i < samples; ++i) {
      const double r = std::norm(rng.complex_normal(s[n]));
      double peak = -std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < m_count; ++t) {
        log_p[t] = log_norm[t] - r / s[t];
        peak = std::max(peak, log_p[t]);
      }
      double acc = 0.0;
      for (std::size_t t = 0; t < m_count; ++t) acc += std::exp(log_p[t] - peak);
      const double log_mix = peak + std::log(acc) - log_m;
      draws[i] = (log_p[n] - log_mix) / std::numbers::ln2;
    }
    const double mean = pairwise_sum<double>(draws) / static_cast<double>(samples);
    double ss = 0.0;
    for (double v : draws) ss += (v - mean) * (v - mean);
    mean_sum += mean;
    var_sum += ss / static_cast<double>(samples - 1);
  }
  const double m = static_cast<double>(m_count);
  return {mean_sum / m, std::sqrt(var_sum / static_cast<double>(samples)) / m};
}

UserSe gsm_user_se(const CovarianceSet& cov) {
  const double apm = apm_mutual_info(cov);
  const SpatialInfo spatial = spatial_mutual_info_approx(cov);
  return {apm + spatial.value, apm, spatial.value, spatial.unclamped};
}

UserSe gsm_user_se(const linalg::CVectord& h_k, const GsmCodebook& codebook,
                   std::span<const linalg::CVectord> precoder_columns, double noise_var) {
  if (precoder_columns.size() != codebook.size()) {
    throw DimensionError("gsm_user_se: need one precoder column per combination");
  }
  CovarianceSet cov{std::vector<double>(codebook.size()), noise_var};
  for (std::size_t m = 0; m < codebook.size(); ++m) {
    cov.sigmas[m] = covariance(h_k, codebook.matrix(m), precoder_columns[m], noise_var);
  }
  return gsm_user_se(cov);
}

double conventional_user_se(const linalg::CVectord& h_k, const linalg::CMatrixd& b_matrix,
                            Eigen::Index user, double noise_var) {
  if (h_k.size() != b_matrix.rows()) {
    throw DimensionError("conventional_user_se: channel and precoder rows differ");
  }
  if (user < 0 || user >= b_matrix.cols()) {
    throw DimensionError("conventional_user_se: user index out of range");
  }
  if (!(noise_var > 0.0)) throw InvalidArgument("conventional_user_se: noise_var must be > 0");
  double signal = 0.0;
  std::vector<double> interference;
  interference.reserve(static_cast<std::size_t>(b_matrix.cols()));
  for (Eigen::Index i = 0; i < b_matrix.cols(); ++i) {
    const double p = std::norm(h_k.dot(b_matrix.col(i)));
    if (i == user) {
      signal = p;
    } else {
      interference.push_back(p);
    }
  }
  return std::log2(1.0 + signal / (pairwise_sum<double>(interference) + noise_var));
}

double total_rate(std::span<const double> per_user_se, double w) {
  return w * pairwise_sum(per_user_se);
}

}  // namespace gsm_mimo
