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


#ifndef GSM_MIMO_REPORT_HPP
#define GSM_MIMO_REPORT_HPP

// Figure experiments and their outputs: CSV tables, run manifests and static
// SVG line charts.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gsm_mimo/sim.hpp"

namespace gsm_mimo {

enum class Figure { kFig2, kFig3, kFig4, kFig5, kFig6 };

struct FigureSpec {
  Figure figure;
  std::string_view name;     // subcommand, e.g. "fig2"
  std::string_view metric;   // CSV metric column value
  std::string_view title;
  std::string_view y_label;
  SweepVariable variable;
};

const FigureSpec& figure_spec(Figure figure);
Figure parse_figure(std::string_view name);
const std::vector<Figure>& all_figures();

// fig6 pins N_m = 16, N_k = 8, K = 10 on top of the loaded configuration.
SystemConfig figure_config(Figure figure, SystemConfig base);

// Users sweep: K = 2, 4, ..., 20. RF-chain sweep: N_RF = K .. N_m.
std::vector<int> figure_values(Figure figure, const SystemConfig& config);

Estimate figure_metric(const PointResult& point, Figure figure);

// Fixed CSV header shared by every figure.
extern const std::string_view kCsvHeader;

// RFC 4180 quoting: fields containing a comma, quote or line break are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);

// One row per (point, mode), numbers with 9 significant digits.
void write_csv(std::ostream& out, const EeReport& report, Figure figure);

void write_svg(std::ostream& out, const EeReport& report, Figure figure);

struct RunManifest {
  SystemConfig config;
  std::string command;
  std::string artifact_version;
  std::string timestamp;
  std::vector<std::string> outputs;
};

// Config snapshot plus metadata, in the config-file format.
std::string write_manifest(const RunManifest& manifest);

}  // namespace gsm_mimo

#endif  // GSM_MIMO_REPORT_HPP
