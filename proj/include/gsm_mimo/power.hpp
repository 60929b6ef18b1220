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


#ifndef GSM_MIMO_POWER_HPP
#define GSM_MIMO_POWER_HPP

// Base-station power model: transmission (PA, RF chains, GSM switches),
// computation (channel estimation, coding, linear processing) and a fixed
// site term. All values in Watt.

namespace gsm_mimo {

struct PowerParams {
  double p_max = 1.0;            // W, radiated power budget
  double gamma = 0.39;           // PA efficiency
  double p_rf = 0.048;           // W per RF chain
  double p_each_switch = 0.005;  // W per switch
  double w = 20e6;               // Hz
  double u = 1800.0;             // symbols per coherence block
  double tau = 1.0;              // relative pilot length
  double p_cod = 1e-10;          // W per bit/s
  double l_bs = 12.8e9;          // flop/W
  double p_fix = 1.0;            // W

  void validate() const;
  bool operator==(const PowerParams&) const = default;
};

struct TransmissionPower {
  double p_pa = 0.0;
  double p_rf_chains = 0.0;
  double p_switch = 0.0;
};

struct PowerBreakdown {
  double p_pa = 0.0;
  double p_rf_chains = 0.0;
  double p_switch = 0.0;
  double p_ce = 0.0;
  double p_cd = 0.0;
  double p_lp = 0.0;
  double p_fix = 0.0;
  double p_t = 0.0;
  double p_c = 0.0;
  double p_total = 0.0;
};

TransmissionPower transmission_power(const PowerParams& params, int n_rf, bool with_switches);

// (W/U) 2 tau N_T K^2 / L_BS
double channel_estimation_power(const PowerParams& params, int n_t, int k);

// P_COD R_total
double coding_power(const PowerParams& params, double r_total);

// ZF matrix computation once per coherence block plus one N_RF x K
// matrix-vector product per symbol.
double linear_processing_power(const PowerParams& params, int n_rf, int k);

PowerBreakdown total_power(const PowerParams& params, int n_t, int n_rf, int k, double r_total,
                           bool with_switches);

}  // namespace gsm_mimo

#endif  // GSM_MIMO_POWER_HPP
