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


#include "gsm_mimo/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace gsm_mimo {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("expected a finite number, got '" + std::string(v) + "'");
  }
  return out;
}

template <typename Int>
Int to_int(std::string_view v) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

using Setter = std::function<void(SystemConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"n_t", [](SystemConfig& c, std::string_view v) { c.n_t = to_int<int>(v); }},
      {"n_m", [](SystemConfig& c, std::string_view v) { c.n_m = to_int<int>(v); }},
      {"n_k", [](SystemConfig& c, std::string_view v) { c.n_k = to_int<int>(v); }},
      {"n_rf", [](SystemConfig& c, std::string_view v) { c.n_rf = to_int<int>(v); }},
      {"k", [](SystemConfig& c, std::string_view v) { c.k = to_int<int>(v); }},
      {"p_max", [](SystemConfig& c, std::string_view v) { c.power.p_max = to_double(v); }},
      {"gamma", [](SystemConfig& c, std::string_view v) { c.power.gamma = to_double(v); }},
      {"p_rf", [](SystemConfig& c, std::string_view v) { c.power.p_rf = to_double(v); }},
      {"p_rf_mw", [](SystemConfig& c, std::string_view v) { c.power.p_rf = to_double(v) * 1e-3; }},
      {"p_each_switch",
       [](SystemConfig& c, std::string_view v) { c.power.p_each_switch = to_double(v); }},
      {"p_each_switch_mw",
       [](SystemConfig& c, std::string_view v) { c.power.p_each_switch = to_double(v) * 1e-3; }},
      {"w", [](SystemConfig& c, std::string_view v) { c.power.w = to_double(v); }},
      {"u", [](SystemConfig& c, std::string_view v) { c.power.u = to_double(v); }},
      {"tau", [](SystemConfig& c, std::string_view v) { c.power.tau = to_double(v); }},
      {"p_cod", [](SystemConfig& c, std::string_view v) { c.power.p_cod = to_double(v); }},
      {"l_bs", [](SystemConfig& c, std::string_view v) { c.power.l_bs = to_double(v); }},
      {"p_fix", [](SystemConfig& c, std::string_view v) { c.power.p_fix = to_double(v); }},
      {"d_bar", [](SystemConfig& c, std::string_view v) { c.channel.d_bar = to_double(v); }},
      {"d_bar_log10",
       [](SystemConfig& c, std::string_view v) { c.channel.d_bar = std::pow(10.0, to_double(v)); }},
      {"alpha", [](SystemConfig& c, std::string_view v) { c.channel.alpha = to_double(v); }},
      {"d_min", [](SystemConfig& c, std::string_view v) { c.channel.d_min = to_double(v); }},
      {"d_max", [](SystemConfig& c, std::string_view v) { c.channel.d_max = to_double(v); }},
      {"noise_var", [](SystemConfig& c, std::string_view v) { c.noise_var = to_double(v); }},
      {"trials", [](SystemConfig& c, std::string_view v) { c.trials = to_int<std::uint64_t>(v); }},
      {"seed", [](SystemConfig& c, std::string_view v) { c.seed = to_int<std::uint64_t>(v); }},
      {"mode", [](SystemConfig& c, std::string_view v) { c.mode = parse_mode(v); }},
  };
  return table;
}

bool is_manifest_key(std::string_view key) {
  return key == "artifact_version" || key == "timestamp" || key == "command" || key == "outputs";
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

SystemConfig parse_config(std::string_view text) {
  SystemConfig config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where + "expected 'key = value'");
    if (is_manifest_key(key)) continue;

    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + std::string(key) + "'");
    try {
      it->second(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + std::string(key) + ": " + e.what());
    }
  }
  config.validate();
  return config;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string write_config(const SystemConfig& c) {
  std::string out;
  const auto num = [&](std::string_view key, double v) {
    out += fmt::format("{} = {}\n", key, v);  // shortest round-trip form
  };
  const auto cnt = [&](std::string_view key, auto v) { out += fmt::format("{} = {}\n", key, v); };
  cnt("n_t", c.n_t);
  cnt("n_m", c.n_m);
  cnt("n_k", c.n_k);
  cnt("n_rf", c.n_rf);
  cnt("k", c.k);
  num("p_max", c.power.p_max);
  num("gamma", c.power.gamma);
  num("p_rf", c.power.p_rf);
  num("p_each_switch", c.power.p_each_switch);
  num("w", c.power.w);
  num("u", c.power.u);
  num("tau", c.power.tau);
  num("p_cod", c.power.p_cod);
  num("l_bs", c.power.l_bs);
  num("p_fix", c.power.p_fix);
  num("d_bar", c.channel.d_bar);
  num("alpha", c.channel.alpha);
  num("d_min", c.channel.d_min);
  num("d_max", c.channel.d_max);
  num("noise_var", c.noise_var);
  cnt("trials", c.trials);
  cnt("seed", c.seed);
  cnt("mode", to_string(c.mode));
  return out;
}

}  // namespace gsm_mimo
