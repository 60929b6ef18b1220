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


#include "gsm_mimo/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

#include "gsm_mimo/precoding.hpp"
#include "gsm_mimo/rng.hpp"
#include "gsm_mimo/se.hpp"
#include "gsm_mimo/summation.hpp"

namespace gsm_mimo {

namespace {

std::uint64_t mode_stream(Mode mode) { return mode == Mode::kGsm ? 0 : 1; }

Estimate estimate(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double mean = pairwise_sum(x) / n;
  if (x.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  std::vector<double> sq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sq[i] = (x[i] - mean) * (x[i] - mean);
  const double var = pairwise_sum<double>(sq) / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

std::string cfg_error(const std::string& what, const std::string& detail) {
  return what + " violated: " + detail;
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::kGsm ? "gsm" : "baseline"; }

Mode parse_mode(std::string_view text) {
  if (text == "gsm") return Mode::kGsm;
  if (text == "baseline") return Mode::kBaseline;
  throw ConfigError("unknown mode '" + std::string(text) + "' (expected gsm or baseline)");
}

std::string_view to_string(SweepVariable variable) {
  return variable == SweepVariable::kUsers ? "users" : "rf_chains";
}

double thermal_noise_var(double w_hz, double noise_figure_db) {
  const double dbm = -174.0 + 10.0 * std::log10(w_hz) + noise_figure_db;
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void SystemConfig::validate() const {
  const auto s = [](auto v) { return std::to_string(v); };
  if (n_m < 1 || n_k < 1 || n_rf < 1 || k < 1) {
    throw ConfigError("counts must be >= 1: n_m = " + s(n_m) + ", n_k = " + s(n_k) +
                      ", n_rf = " + s(n_rf) + ", k = " + s(k));
  }
  if (static_cast<long long>(n_m) * n_k != n_t) {
    throw ConfigError(cfg_error("N_T = N_m * N_k", "n_t = " + s(n_t) + ", n_m * n_k = " +
                                                       s(static_cast<long long>(n_m) * n_k)));
  }
  if (n_m > 64) throw ConfigError("n_m = " + s(n_m) + " exceeds the supported maximum of 64");
  if (n_rf > n_m) {
    throw ConfigError(cfg_error("N_m >= N_RF", "N_m = " + s(n_m) + ", N_RF = " + s(n_rf)));
  }
  if (mode == Mode::kGsm && k > n_rf) {
    throw ConfigError(cfg_error("K <= N_RF", "K = " + s(k) + ", N_RF = " + s(n_rf)));
  }
  if (mode == Mode::kBaseline && k > n_t) {
    throw ConfigError(cfg_error("K <= N_T", "K = " + s(k) + ", N_T = " + s(n_t)));
  }
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (!(noise_var > 0.0) || !std::isfinite(noise_var)) {
    throw ConfigError("noise_var must be > 0, got " + s(noise_var));
  }
  try {
    channel.validate();
    power.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("range error: ") + e.what());
  }
}

TrialEngine::TrialEngine(SystemConfig config) : config_(std::move(config)) {
  config_.validate();
  if (config_.mode == Mode::kGsm) codebook_.emplace(config_.n_m, config_.n_k, config_.n_rf);
}

TrialResult TrialEngine::run(std::uint64_t trial_index, std::uint64_t point_index) const {
  for (std::uint64_t attempt = 0; attempt < kMaxConsecutiveRejections; ++attempt) {
    try {
      TrialResult r = config_.mode == Mode::kGsm ? run_gsm(trial_index, point_index, attempt)
                                                 : run_baseline(trial_index, point_index, attempt);
      r.rejected = attempt;
      return r;
    } catch (const RankDeficiencyError&) {
      // Redraw from the next substream.
    }
  }
  throw ConfigError("trial " + std::to_string(trial_index) + ": " +
                    std::to_string(kMaxConsecutiveRejections) +
                    " consecutive rank-deficient channel draws");
}

TrialResult TrialEngine::run_gsm(std::uint64_t trial_index, std::uint64_t point_index,
                                 std::uint64_t attempt) const {
  const SystemConfig& c = config_;
  StreamId id{point_index, mode_stream(c.mode), trial_index, attempt, StreamPurpose::kDistances};
  Rng dist_rng(c.seed, id);
  id.purpose = StreamPurpose::kChannel;
  Rng chan_rng(c.seed, id);

  const ChannelRealization ch =
      draw_channel(c.n_t, draw_distances(c.k, c.channel, dist_rng), c.channel, chan_rng);
  const linalg::CMatrixd groups = group_channel(ch.h_matrix, c.n_m, c.n_k);

  const GsmCodebook& book = *codebook_;
  const auto users = static_cast<std::size_t>(c.k);
  std::vector<CovarianceSet> cov(users, CovarianceSet{std::vector<double>(book.size()), c.noise_var});
  for (std::size_t m = 0; m < book.size(); ++m) {
    const linalg::CMatrixd h_eff = select_groups(groups, book.combination(m));
    const Precoder pre = zf_precoder(h_eff, c.power.p_max);
    for (std::size_t user = 0; user < users; ++user) {
      const auto u = static_cast<Eigen::Index>(user);
      // Row k of H^H C_m is h_k^H C_m.
      const linalg::Complexd gain = h_eff.row(u) * pre.b_matrix.col(u);
      cov[user].sigmas[m] = covariance_from_gain(gain, c.noise_var);
    }
  }

  TrialResult r;
  r.per_user_se.resize(users);
  r.apm.resize(users);
  r.spatial.resize(users);
  for (std::size_t user = 0; user < users; ++user) {
    const UserSe s = gsm_user_se(cov[user]);
    r.per_user_se[user] = s.se;
    r.apm[user] = s.apm;
    r.spatial[user] = s.spatial;
  }
  r.se = pairwise_sum<double>(r.per_user_se);
  r.r_total = total_rate(r.per_user_se, c.power.w);
  r.power = total_power(c.power, c.n_t, c.n_rf, c.k, r.r_total, true);
  r.ee = r.r_total / r.power.p_total;
  return r;
}

TrialResult TrialEngine::run_baseline(std::uint64_t trial_index, std::uint64_t point_index,
                                      std::uint64_t attempt) const {
  const SystemConfig& c = config_;
  StreamId id{point_index, mode_stream(c.mode), trial_index, attempt, StreamPurpose::kDistances};
  Rng dist_rng(c.seed, id);
  id.purpose = StreamPurpose::kChannel;
  Rng chan_rng(c.seed, id);

  const ChannelRealization ch =
      draw_channel(c.n_t, draw_distances(c.k, c.channel, dist_rng), c.channel, chan_rng);
  // Identity selection: all N_T antennas, one RF chain each.
  const Precoder pre = zf_precoder(linalg::hermitian(ch.h_matrix), c.power.p_max);

  const auto users = static_cast<std::size_t>(c.k);
  TrialResult r;
  r.per_user_se.resize(users);
  for (std::size_t user = 0; user < users; ++user) {
    const auto u = static_cast<Eigen::Index>(user);
    r.per_user_se[user] =
        conventional_user_se(ch.h_matrix.col(u), pre.b_matrix, u, c.noise_var);
  }
  r.se = pairwise_sum<double>(r.per_user_se);
  r.r_total = total_rate(r.per_user_se, c.power.w);
  r.power = total_power(c.power, c.n_t, c.n_t, c.k, r.r_total, false);
  r.ee = r.r_total / r.power.p_total;
  return r;
}

TrialResult run_trial(const SystemConfig& config, std::uint64_t trial_index,
                      std::uint64_t point_index) {
  return TrialEngine(config).run(trial_index, point_index);
}

const PointResult& EeReport::at(std::size_t point, Mode mode) const {
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] == mode) return points.at(point * modes.size() + i);
  }
  throw InvalidArgument("EeReport::at: mode not part of this sweep");
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

SystemConfig apply_sweep_value(SystemConfig config, SweepVariable variable, int value) {
  if (variable == SweepVariable::kUsers) {
    config.k = value;
  } else {
    config.n_rf = value;
  }
  return config;
}

namespace {

PointResult aggregate(int value, Mode mode, std::span<const TrialResult> trials) {
  PointResult p;
  p.value = value;
  p.mode = mode;
  p.trials = trials.size();
  const std::size_t n = trials.size();
  std::vector<double> buf(n);
  const auto field = [&](auto get) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = get(trials[i]);
    return estimate(buf);
  };
  p.se = field([](const TrialResult& t) { return t.se; });
  p.r_total = field([](const TrialResult& t) { return t.r_total; });
  p.ee = field([](const TrialResult& t) { return t.ee; });

  const auto power_field = [&](double PowerBreakdown::*member) {
    const Estimate e = field([member](const TrialResult& t) { return t.power.*member; });
    p.power_mean.*member = e.mean;
    p.power_std_error.*member = e.std_error;
  };
  for (auto member : {&PowerBreakdown::p_pa, &PowerBreakdown::p_rf_chains,
                      &PowerBreakdown::p_switch, &PowerBreakdown::p_ce, &PowerBreakdown::p_cd,
                      &PowerBreakdown::p_lp, &PowerBreakdown::p_fix, &PowerBreakdown::p_t,
                      &PowerBreakdown::p_c, &PowerBreakdown::p_total}) {
    power_field(member);
  }
  p.ee_ratio_of_means = p.r_total.mean / p.power_mean.p_total;
  for (const auto& t : trials) p.rejected += t.rejected;
  return p;
}

}  // namespace

EeReport sweep(const SystemConfig& config_template, SweepVariable variable,
               std::span<const int> values, std::span<const Mode> modes,
               const SweepOptions& options) {
  if (values.empty()) throw InvalidArgument("sweep: empty list of sweep values");
  if (modes.empty()) throw InvalidArgument("sweep: no modes selected");

  EeReport report;
  report.variable = variable;
  report.values.assign(values.begin(), values.end());
  report.modes.assign(modes.begin(), modes.end());

  struct Slot {
    std::optional<TrialEngine> engine;
    std::string skip_reason;
    std::vector<TrialResult> results;
  };
  std::vector<Slot> slots(values.size() * modes.size());
  struct Task {
    std::size_t slot;
    std::uint64_t point;
    std::uint64_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const std::size_t s = p * modes.size() + mi;
      SystemConfig cfg = apply_sweep_value(config_template, variable, values[p]);
      cfg.mode = modes[mi];
      try {
        slots[s].engine.emplace(cfg);
      } catch (const ConfigError& e) {
        slots[s].skip_reason = e.what();
        continue;
      }
      slots[s].results.resize(cfg.trials);
      for (std::uint64_t t = 0; t < cfg.trials; ++t) tasks.push_back({s, p, t});
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mutex;
  std::size_t done = 0;
  const auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        slots[task.slot].results[task.trial] = slots[task.slot].engine->run(task.trial, task.point);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
      if (options.progress) {
        std::lock_guard lock(mutex);
        options.progress(++done, tasks.size());
      }
    }
  };

  const unsigned n_workers =
      std::min<std::size_t>(resolve_workers(options.workers), std::max<std::size_t>(1, tasks.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  report.points.reserve(slots.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const Slot& slot = slots[p * modes.size() + mi];
      if (!slot.engine) {
        PointResult skipped;
        skipped.value = values[p];
        skipped.mode = modes[mi];
        skipped.skipped = true;
        skipped.skip_reason = slot.skip_reason;
        report.points.push_back(std::move(skipped));
      } else {
        report.points.push_back(aggregate(values[p], modes[mi], slot.results));
      }
    }
  }
  return report;
}

}  // namespace gsm_mimo
