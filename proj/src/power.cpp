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


#include "gsm_mimo/power.hpp"

#include <cmath>
#include <string>

#include "gsm_mimo/errors.hpp"

namespace gsm_mimo {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string("power: ") + name + " must be > 0, got " +
                          std::to_string(v));
  }
}

void require_count(int v, int min, const char* name) {
  if (v < min) {
    throw InvalidArgument(std::string("power: ") + name + " must be >= " + std::to_string(min));
  }
}

}  // namespace

void PowerParams::validate() const {
  require_positive(p_max, "p_max");
  require_positive(gamma, "gamma");
  if (gamma > 1.0) throw InvalidArgument("power: gamma must lie in (0, 1]");
  require_positive(p_rf, "p_rf");
  require_positive(p_each_switch, "p_each_switch");
  require_positive(w, "w");
  require_positive(u, "u");
  require_positive(tau, "tau");
  require_positive(p_cod, "p_cod");
  require_positive(l_bs, "l_bs");
  require_positive(p_fix, "p_fix");
}

TransmissionPower transmission_power(const PowerParams& params, int n_rf, bool with_switches) {
  require_count(n_rf, 1, "n_rf");
  const double chains = static_cast<double>(n_rf);
  return {params.p_max / params.gamma, chains * params.p_rf,
          with_switches ? chains * params.p_each_switch : 0.0};
}

double channel_estimation_power(const PowerParams& params, int n_t, int k) {
  require_count(n_t, 1, "n_t");
  require_count(k, 0, "k");
  const double users = static_cast<double>(k);
  return (params.w / params.u) * 2.0 * params.tau * static_cast<double>(n_t) * users * users /
         params.l_bs;
}

double coding_power(const PowerParams& params, double r_total) {
  if (!(r_total >= 0.0)) throw InvalidArgument("power: r_total must be >= 0");
  return params.p_cod * r_total;
}

double linear_processing_power(const PowerParams& params, int n_rf, int k) {
  require_count(n_rf, 1, "n_rf");
  require_count(k, 0, "k");
  const double chains = static_cast<double>(n_rf);
  const double users = static_cast<double>(k);
  const double precoder_flops =
      16.0 * users * users * chains + 12.0 * users * users * users + 8.0 * chains * users;
  const double per_symbol_flops = 8.0 * chains * users;
  return (params.w / params.u) * precoder_flops / params.l_bs +
         params.w * per_symbol_flops / params.l_bs;
}

PowerBreakdown total_power(const PowerParams& params, int n_t, int n_rf, int k, double r_total,
                           bool with_switches) {
  const TransmissionPower tx = transmission_power(params, n_rf, with_switches);
  PowerBreakdown out;
  out.p_pa = tx.p_pa;
  out.p_rf_chains = tx.p_rf_chains;
  out.p_switch = tx.p_switch;
  out.p_ce = channel_estimation_power(params, n_t, k);
  out.p_cd = coding_power(params, r_total);
  out.p_lp = linear_processing_power(params, n_rf, k);
  out.p_fix = params.p_fix;
  out.p_t = out.p_pa + out.p_rf_chains + out.p_switch;
  out.p_c = out.p_ce + out.p_cd + out.p_lp;
  out.p_total = out.p_t + out.p_c + out.p_fix;
  return out;
}

}  // namespace gsm_mimo
