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


#include <doctest.h>

#include <cmath>
#include <cstring>

#include "gsm_mimo/errors.hpp"
#include "gsm_mimo/sim.hpp"
#include "golden_record.hpp"
#include "test_util.hpp"

using namespace gsm_mimo;
using test::rel_close;

namespace {

SystemConfig small_config() {
  SystemConfig c;
  c.n_m = 4;
  c.n_k = 2;
  c.n_t = 8;
  c.n_rf = 3;
  c.k = 2;
  c.trials = 40;
  c.seed = 99;
  return c;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("thermal noise default") {
  CHECK(rel_close(thermal_noise_var(20e6), 6.324555320336759e-13, 1e-12));
  CHECK(rel_close(thermal_noise_var(1.0, 0.0), std::pow(10.0, -20.4), 1e-12));
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(SystemConfig{}.validate());
  SystemConfig c;
  c.n_rf = 65;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("N_m >= N_RF"), ConfigError);
  c = SystemConfig{};
  c.n_t = 127;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("127"), ConfigError);
  c = SystemConfig{};
  c.k = 64;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("K <= N_RF"), ConfigError);
  c = SystemConfig{};
  c.power.gamma = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SystemConfig{};
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  // Baseline mode ignores the grouping constraints on N_RF.
  c = SystemConfig{};
  c.mode = Mode::kBaseline;
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("mode names") {
  CHECK(parse_mode("gsm") == Mode::kGsm);
  CHECK(parse_mode("baseline") == Mode::kBaseline);
  CHECK(to_string(Mode::kBaseline) == "baseline");
  CHECK_THROWS_AS(parse_mode("both"), ConfigError);
}

TEST_CASE("single-antenna trial matches the closed form") {
  SystemConfig c;
  c.n_t = c.n_m = c.n_k = c.n_rf = c.k = 1;
  c.seed = 5;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const TrialResult r = run_trial(c, trial);
    StreamId id{0, 0, trial, 0, StreamPurpose::kDistances};
    Rng dist_rng(c.seed, id);
    id.purpose = StreamPurpose::kChannel;
    Rng chan_rng(c.seed, id);
    const ChannelRealization ch = draw_channel(1, draw_distances(1, c.channel, dist_rng), c.channel, chan_rng);
    const double snr = c.power.p_max * std::norm(ch.h_matrix(0, 0)) / c.noise_var;
    CHECK(rel_close(r.se, std::log2(1.0 + snr), 1e-12));
    CHECK(r.spatial.at(0) == 0.0);
    CHECK(rel_close(r.r_total, c.power.w * r.se, 1e-15));
    const PowerBreakdown p = total_power(c.power, 1, 1, 1, r.r_total, true);
    CHECK(rel_close(r.power.p_total, p.p_total, 1e-15));
    CHECK(rel_close(r.ee, r.r_total / r.power.p_total, 1e-15));
  }
}

TEST_CASE("golden single-trial records") {
  for (const auto& g : golden::kRecords) {
    CAPTURE(g.n_k);
    const TrialResult r = run_trial(golden::config(g.n_k, g.mode), 0);
    REQUIRE(r.per_user_se.size() == 2);
    for (std::size_t u = 0; u < 2; ++u) {
      CHECK(rel_close(r.per_user_se[u], g.per_user_se[u], golden::kRelTol));
      if (g.mode == Mode::kGsm) {
        CHECK(rel_close(r.apm[u], g.apm[u], golden::kRelTol));
        CHECK(rel_close(r.spatial[u], g.spatial[u], golden::kRelTol));
      }
    }
    CHECK(rel_close(r.r_total, g.r_total, golden::kRelTol));
    CHECK(rel_close(r.power.p_total, g.p_total, golden::kRelTol));
    CHECK(rel_close(r.power.p_c, g.p_c, golden::kRelTol));
    CHECK(rel_close(r.ee, g.ee, golden::kRelTol));
  }
}

TEST_CASE("trials are deterministic and independent of evaluation order") {
  const SystemConfig c = small_config();
  const TrialEngine engine(c);
  const TrialResult late = engine.run(7, 2);
  for (std::uint64_t t = 0; t < 7; ++t) (void)engine.run(t, 2);
  const TrialResult again = engine.run(7, 2);
  CHECK(same_bits(late.se, again.se));
  CHECK(same_bits(late.ee, again.ee));
  CHECK_FALSE(same_bits(engine.run(7, 3).se, late.se));
  CHECK_FALSE(same_bits(engine.run(8, 2).se, late.se));
}

TEST_CASE("sweep aggregation") {
  const SystemConfig c = small_config();
  const std::vector<Mode> modes{Mode::kGsm, Mode::kBaseline};

  SUBCASE("single trial equals run_trial") {
    SystemConfig one = c;
    one.trials = 1;
    const std::vector<int> values{2};
    const EeReport rep = sweep(one, SweepVariable::kUsers, values, modes);
    for (Mode mode : modes) {
      SystemConfig mc = one;
      mc.mode = mode;
      const TrialResult r = run_trial(mc, 0, 0);
      const PointResult& p = rep.at(0, mode);
      CHECK(same_bits(p.se.mean, r.se));
      CHECK(same_bits(p.ee.mean, r.ee));
      CHECK(same_bits(p.power_mean.p_total, r.power.p_total));
      CHECK(std::isnan(p.se.std_error));
    }
  }

  SUBCASE("means over trials") {
    const std::vector<int> values{2};
    const EeReport rep = sweep(c, SweepVariable::kUsers, values, modes);
    SystemConfig mc = c;
    double ee = 0.0, r = 0.0, p = 0.0;
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      const TrialResult tr = run_trial(mc, t, 0);
      ee += tr.ee;
      r += tr.r_total;
      p += tr.power.p_total;
    }
    const double n = static_cast<double>(c.trials);
    const PointResult& g = rep.at(0, Mode::kGsm);
    CHECK(g.trials == c.trials);
    CHECK(rel_close(g.ee.mean, ee / n, 1e-13));
    CHECK(rel_close(g.ee_ratio_of_means, (r / n) / (p / n), 1e-13));
    CHECK(g.ee.std_error > 0.0);
  }

  SUBCASE("infeasible points are skipped with a reason") {
    const std::vector<int> values{2, 4};
    const EeReport rep = sweep(c, SweepVariable::kUsers, values, modes);
    REQUIRE(rep.points.size() == 4);
    CHECK_FALSE(rep.at(0, Mode::kGsm).skipped);
    CHECK(rep.at(1, Mode::kGsm).skipped);
    CHECK(rep.at(1, Mode::kGsm).skip_reason.find("K <= N_RF") != std::string::npos);
    CHECK(rep.at(1, Mode::kGsm).trials == 0);
    CHECK_FALSE(rep.at(1, Mode::kBaseline).skipped);
  }

  SUBCASE("worker count does not change results") {
    const std::vector<int> values{1, 2, 3};
    const EeReport a = sweep(c, SweepVariable::kUsers, values, modes, {1, {}});
    const EeReport b = sweep(c, SweepVariable::kUsers, values, modes, {3, {}});
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(same_bits(a.points[i].se.mean, b.points[i].se.mean));
      CHECK(same_bits(a.points[i].se.std_error, b.points[i].se.std_error));
      CHECK(same_bits(a.points[i].ee.mean, b.points[i].ee.mean));
      CHECK(same_bits(a.points[i].power_mean.p_total, b.points[i].power_mean.p_total));
    }
  }

  SUBCASE("progress reaches the total") {
    std::size_t last = 0, total = 0;
    const std::vector<int> values{1, 2};
    SweepOptions opt{2, [&](std::size_t done, std::size_t all) {
                       CHECK(done > last);
                       last = done;
                       total = all;
                     }};
    (void)sweep(c, SweepVariable::kUsers, values, modes, opt);
    CHECK(last == total);
    CHECK(total == 2 * 2 * c.trials);
  }

  SUBCASE("standard error shrinks as 1/sqrt(trials)") {
    SystemConfig few = c, many = c;
    few.trials = 100;
    many.trials = 400;
    const std::vector<int> values{2};
    const std::vector<Mode> gsm{Mode::kGsm};
    const double a = sweep(few, SweepVariable::kUsers, values, gsm).points[0].se.std_error;
    const double b = sweep(many, SweepVariable::kUsers, values, gsm).points[0].se.std_error;
    CHECK(a / b == doctest::Approx(2.0).epsilon(0.25));
  }

  CHECK_THROWS_AS(sweep(c, SweepVariable::kUsers, std::vector<int>{}, modes), InvalidArgument);
  CHECK_THROWS_AS(sweep(c, SweepVariable::kUsers, std::vector<int>{2}, std::vector<Mode>{}), InvalidArgument);
}

TEST_CASE("apply_sweep_value") {
  const SystemConfig c;
  CHECK(apply_sweep_value(c, SweepVariable::kUsers, 14).k == 14);
  CHECK(apply_sweep_value(c, SweepVariable::kRfChains, 20).n_rf == 20);
  CHECK(resolve_workers(3) == 3);
  CHECK(resolve_workers(0) >= 1);
}
