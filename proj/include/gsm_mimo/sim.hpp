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


#ifndef GSM_MIMO_SIM_HPP
#define GSM_MIMO_SIM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsm_mimo/channel.hpp"
#include "gsm_mimo/gsm.hpp"
#include "gsm_mimo/power.hpp"

namespace gsm_mimo {

enum class Mode { kGsm, kBaseline };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Thermal noise power in W over bandwidth w_hz: -174 dBm/Hz plus the receiver
// noise figure.
double thermal_noise_var(double w_hz, double noise_figure_db = 9.0);

struct SystemConfig {
  int n_t = 128;
  int n_m = 64;
  int n_k = 2;
  int n_rf = 63;
  int k = 10;
  ChannelModel channel;
  PowerParams power;
  double noise_var = thermal_noise_var(20e6);
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  Mode mode = Mode::kGsm;

  // Throws ConfigError naming the violated constraint and the values involved.
  void validate() const;

  bool operator==(const SystemConfig&) const = default;
};

struct TrialResult {
  std::vector<double> per_user_se;  // bit/s/Hz
  std::vector<double> apm;          // GSM only
  std::vector<double> spatial;      // GSM only
  double se = 0.0;                  // sum over users, bit/s/Hz
  double r_total = 0.0;             // bit/s
  PowerBreakdown power;
  double ee = 0.0;                  // bit/J
  std::uint64_t rejected = 0;       // rank-deficient redraws before success
};

inline constexpr std::uint64_t kMaxConsecutiveRejections = 100;

// Runs trials of one configuration. Holds the GSM codebook so that it is
// built once per sweep point and shared read-only by all workers.
class TrialEngine {
 public:
  explicit TrialEngine(SystemConfig config);

  const SystemConfig& config() const { return config_; }
  const GsmCodebook* codebook() const { return codebook_ ? &*codebook_ : nullptr; }

  // Deterministic in (seed, point_index, mode, trial_index).
  TrialResult run(std::uint64_t trial_index, std::uint64_t point_index = 0) const;

 private:
  TrialResult run_gsm(std::uint64_t trial_index, std::uint64_t point_index,
                      std::uint64_t attempt) const;
  TrialResult run_baseline(std::uint64_t trial_index, std::uint64_t point_index,
                           std::uint64_t attempt) const;

  SystemConfig config_;
  std::optional<GsmCodebook> codebook_;
};

TrialResult run_trial(const SystemConfig& config, std::uint64_t trial_index,
                      std::uint64_t point_index = 0);

enum class SweepVariable { kUsers, kRfChains };

std::string_view to_string(SweepVariable variable);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // NaN with fewer than two trials
};

struct PointResult {
  int value = 0;
  Mode mode = Mode::kGsm;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t trials = 0;
  std::uint64_t rejected = 0;
  Estimate se;
  Estimate r_total;
  Estimate ee;                    // mean of per-trial R_total / P_total
  double ee_ratio_of_means = 0.0; // diagnostic
  PowerBreakdown power_mean;
  PowerBreakdown power_std_error;
};

struct EeReport {
  SweepVariable variable = SweepVariable::kUsers;
  std::vector<int> values;
  std::vector<Mode> modes;
  std::vector<PointResult> points;  // point-major, then mode in `modes` order

  const PointResult& at(std::size_t point, Mode mode) const;
};

struct SweepOptions {
  unsigned workers = 1;
  // Called after each finished trial with (done, total); serialized.
  std::function<void(std::size_t, std::size_t)> progress;
};

// Resolves the worker count: 0 means one per hardware thread.
unsigned resolve_workers(unsigned requested);

SystemConfig apply_sweep_value(SystemConfig config, SweepVariable variable, int value);

EeReport sweep(const SystemConfig& config_template, SweepVariable variable,
               std::span<const int> values, std::span<const Mode> modes,
               const SweepOptions& options = {});

}  // namespace gsm_mimo

#endif  // GSM_MIMO_SIM_HPP
