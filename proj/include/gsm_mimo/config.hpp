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


#ifndef GSM_MIMO_CONFIG_HPP
#define GSM_MIMO_CONFIG_HPP

// Plain-text configuration files.
//
//   # comment
//   key = value
//
// One parameter per line. Unknown keys are rejected. Missing keys keep their
// defaults. Recognized keys:
//
//   n_t n_m n_k n_rf k                      antenna/group/RF-chain/user counts
//   p_max gamma p_rf p_each_switch p_fix     transmission and fixed power (W)
//   p_rf_mw p_each_switch_mw                 the same two values in mW
//   w u tau p_cod l_bs                       bandwidth, coherence block, pilot
//                                            length, coding power, flop/W
//   d_bar d_bar_log10 alpha d_min d_max      path loss and user distance range
//   noise_var                                noise power (W)
//   trials seed mode                         Monte-Carlo control; mode is
//                                            gsm or baseline
//
// Run manifests are config files with extra metadata keys (artifact_version,
// timestamp, command, outputs); those are accepted and ignored so that a
// manifest can be fed back as --config.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gsm_mimo/sim.hpp"

namespace gsm_mimo {

SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);

// Every key, with doubles written round-trip exact.
std::string write_config(const SystemConfig& config);

std::vector<std::string> config_keys();

}  // namespace gsm_mimo

#endif  // GSM_MIMO_CONFIG_HPP
