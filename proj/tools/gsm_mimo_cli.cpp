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


// gsm-mimo: command-line front end.
//
//   gsm-mimo fig2|fig3|fig4|fig5|fig6 [--config F] [--out DIR] [--seed S]
//            [--trials N] [--mode gsm|baseline|both] [--plot]
//   gsm-mimo power-breakdown [--config F] [--users K] [--r-total R] [--baseline]
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical error.
// GSM_MIMO_THREADS sets the worker count (0 or unset = one per hardware thread).

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gsm_mimo/config.hpp"
#include "gsm_mimo/report.hpp"
#include "gsm_mimo/sim.hpp"

namespace fs = std::filesystem;
using namespace gsm_mimo;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

SystemConfig resolve_config(const CommonOptions& opts) {
  SystemConfig cfg = opts.config_path.empty() ? SystemConfig{} : load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.trials) cfg.trials = *opts.trials;
  cfg.validate();
  return cfg;
}

unsigned env_workers() {
  const char* env = std::getenv("GSM_MIMO_THREADS");
  if (env == nullptr || *env == '\0') return resolve_workers(0);
  try {
    return resolve_workers(static_cast<unsigned>(std::stoul(env)));
  } catch (const std::exception&) {
    throw ConfigError(std::string("GSM_MIMO_THREADS must be a non-negative integer, got '") + env +
                      "'");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<Mode> parse_modes(const std::string& text) {
  if (text == "both") return {Mode::kGsm, Mode::kBaseline};
  return {parse_mode(text)};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

int run_figure(Figure figure, const CommonOptions& common, const std::string& out_dir,
               const std::string& mode_text, bool plot, const std::string& command_line) {
  const FigureSpec& spec = figure_spec(figure);
  const SystemConfig cfg = figure_config(figure, resolve_config(common));
  const std::vector<Mode> modes = parse_modes(mode_text);
  const std::vector<int> values = figure_values(figure, cfg);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw IoError("output directory '" + out_dir + "' is not writable");
  }

  SweepOptions opts;
  opts.workers = env_workers();
  std::size_t last_pct = 101;
  opts.progress = [&](std::size_t done, std::size_t total) {
    const std::size_t pct = done * 100 / total;
    if (pct != last_pct) {
      last_pct = pct;
      std::fprintf(stderr, "\r%s: %zu/%zu trials (%zu%%)", std::string(spec.name).c_str(), done,
                   total, pct);
      if (done == total) std::fputc('\n', stderr);
    }
  };
  const EeReport report = sweep(cfg, spec.variable, values, modes, opts);

  const std::string stem(spec.name);
  RunManifest manifest{cfg, command_line, GSM_MIMO_VERSION, utc_timestamp(), {stem + ".csv"}};
  {
    std::ostringstream csv;
    write_csv(csv, report, figure);
    write_file(fs::path(out_dir) / (stem + ".csv"), csv.str());
  }
  if (plot) {
    std::ostringstream svg;
    write_svg(svg, report, figure);
    write_file(fs::path(out_dir) / (stem + ".svg"), svg.str());
    manifest.outputs.push_back(stem + ".svg");
  }
  write_file(fs::path(out_dir) / (stem + "_manifest.txt"), write_manifest(manifest));
  std::cout << "wrote " << (fs::path(out_dir) / (stem + ".csv")).string() << '\n';
  return 0;
}

int run_power_breakdown(const CommonOptions& common, std::optional<int> users,
                        std::optional<double> r_total, bool baseline) {
  SystemConfig cfg = resolve_config(common);
  if (users) cfg.k = *users;
  if (baseline) cfg.mode = Mode::kBaseline;
  cfg.validate();

  double rate = 0.0;
  if (r_total) {
    if (*r_total < 0.0) throw ConfigError("--r-total must be >= 0");
    rate = *r_total;
  } else {
    SweepOptions opts;
    opts.workers = env_workers();
    const int k = cfg.k;
    const Mode mode = cfg.mode;
    rate = sweep(cfg, SweepVariable::kUsers, std::span(&k, 1), std::span(&mode, 1), opts)
               .points.front()
               .r_total.mean;
  }
  const bool gsm = cfg.mode == Mode::kGsm;
  const int n_rf = gsm ? cfg.n_rf : cfg.n_t;
  const PowerBreakdown p = total_power(cfg.power, cfg.n_t, n_rf, cfg.k, rate, gsm);

  std::cout << fmt::format("mode        {}\n", to_string(cfg.mode));
  std::cout << fmt::format("N_T={} N_RF={} K={} R_total={:.6g} bit/s\n", cfg.n_t, n_rf, cfg.k,
                           rate);
  const auto row = [](std::string_view name, double w) {
    std::cout << fmt::format("{:<12}{:#.6g} W\n", name, w);
  };
  row("P_PA", p.p_pa);
  row("P_RF_chains", p.p_rf_chains);
  row("P_switch", p.p_switch);
  row("P_T", p.p_t);
  row("P_CE", p.p_ce);
  row("P_CD", p.p_cd);
  row("P_LP", p.p_lp);
  row("P_C", p.p_c);
  row("P_FIX", p.p_fix);
  row("P_total", p.p_total);
  std::cout << fmt::format("{:<12}{:.1f} %\n", "P_C share", 100.0 * p.p_c / p.p_total);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-efficiency simulator for GSM-aided massive MIMO downlinks"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string out_dir = "out";
  std::string mode_text = "both";
  bool plot = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "key = value configuration file");
    sub->add_option("--seed", common.seed, "64-bit base seed");
    sub->add_option("--trials", common.trials, "Monte-Carlo trials per sweep point")
        ->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<Figure, CLI::App*>> figure_cmds;
  for (Figure f : all_figures()) {
    const FigureSpec& spec = figure_spec(f);
    CLI::App* sub = app.add_subcommand(std::string(spec.name), std::string(spec.title));
    add_common(sub);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--mode", mode_text, "gsm, baseline or both")
        ->check(CLI::IsMember({"gsm", "baseline", "both"}));
    sub->add_flag("--plot", plot, "also write an SVG chart");
    figure_cmds.emplace_back(f, sub);
  }

  std::optional<int> users;
  std::optional<double> r_total;
  bool baseline = false;
  CLI::App* pb = app.add_subcommand("power-breakdown", "Print the itemized power model");
  add_common(pb);
  pb->add_option("--users,-k", users, "number of users K");
  pb->add_option("--r-total", r_total, "sum rate in bit/s (default: simulated mean)");
  pb->add_flag("--baseline", baseline, "conventional massive MIMO without GSM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::string command_line;
  for (int i = 1; i < argc; ++i) command_line += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    for (const auto& [figure, sub] : figure_cmds) {
      if (sub->parsed()) return run_figure(figure, common, out_dir, mode_text, plot, command_line);
    }
    if (pb->parsed()) return run_power_breakdown(common, users, r_total, baseline);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
