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


#include "gsm_mimo/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "gsm_mimo/config.hpp"

namespace gsm_mimo {

namespace {

const std::vector<FigureSpec>& specs() {
  static const std::vector<FigureSpec> table = {
      {Figure::kFig2, "fig2", "p_total", "Total BS power vs. number of users", "P_total (W)",
       SweepVariable::kUsers},
      {Figure::kFig3, "fig3", "p_c", "Computation power vs. number of users", "P_C (W)",
       SweepVariable::kUsers},
      {Figure::kFig4, "fig4", "se", "Spectral efficiency vs. number of users", "SE (bit/s/Hz)",
       SweepVariable::kUsers},
      {Figure::kFig5, "fig5", "ee", "Energy efficiency vs. number of users", "EE (bit/J)",
       SweepVariable::kUsers},
      {Figure::kFig6, "fig6", "ee", "Energy efficiency vs. number of RF chains", "EE (bit/J)",
       SweepVariable::kRfChains},
  };
  return table;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.9g}", v);
}

}  // namespace

const FigureSpec& figure_spec(Figure figure) {
  return specs().at(static_cast<std::size_t>(figure));
}

Figure parse_figure(std::string_view name) {
  for (const auto& s : specs()) {
    if (s.name == name) return s.figure;
  }
  throw InvalidArgument("unknown figure '" + std::string(name) + "'");
}

const std::vector<Figure>& all_figures() {
  static const std::vector<Figure> figs = {Figure::kFig2, Figure::kFig3, Figure::kFig4,
                                           Figure::kFig5, Figure::kFig6};
  return figs;
}

SystemConfig figure_config(Figure figure, SystemConfig base) {
  if (figure == Figure::kFig6) {
    base.n_m = 16;
    base.n_k = 8;
    base.n_t = 128;
    base.k = 10;
    base.n_rf = 16;
  }
  return base;
}

std::vector<int> figure_values(Figure figure, const SystemConfig& config) {
  std::vector<int> v;
  if (figure_spec(figure).variable == SweepVariable::kUsers) {
    for (int k = 2; k <= 20; k += 2) v.push_back(k);
  } else {
    for (int n_rf = config.k; n_rf <= config.n_m; ++n_rf) v.push_back(n_rf);
  }
  return v;
}

Estimate figure_metric(const PointResult& point, Figure figure) {
  switch (figure) {
    case Figure::kFig2:
      return {point.power_mean.p_total, point.power_std_error.p_total};
    case Figure::kFig3:
      return {point.power_mean.p_c, point.power_std_error.p_c};
    case Figure::kFig4:
      return point.se;
    case Figure::kFig5:
    case Figure::kFig6:
      return point.ee;
  }
  return {};
}

const std::string_view kCsvHeader =
    "sweep_variable,sweep_value,mode,metric,mean,std_error,trials,rejected,"
    "p_pa,p_rf_chains,p_switch,p_ce,p_cd,p_lp,p_fix,p_t,p_c,p_total,"
    "se,r_total,ee,ee_ratio_of_means,status";

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const EeReport& report, Figure figure) {
  const FigureSpec& spec = figure_spec(figure);
  out << kCsvHeader << '\n';
  for (const PointResult& p : report.points) {
    out << to_string(report.variable) << ',' << p.value << ',' << to_string(p.mode) << ','
        << spec.metric << ',';
    if (p.skipped) {
      out << std::string(18, ',') << csv_escape("skipped: " + p.skip_reason) << '\n';
      continue;
    }
    const Estimate m = figure_metric(p, figure);
    const PowerBreakdown& pw = p.power_mean;
    out << num(m.mean) << ',' << num(m.std_error) << ',' << p.trials << ',' << p.rejected;
    for (double v : {pw.p_pa, pw.p_rf_chains, pw.p_switch, pw.p_ce, pw.p_cd, pw.p_lp, pw.p_fix,
                     pw.p_t, pw.p_c, pw.p_total, p.se.mean, p.r_total.mean, p.ee.mean,
                     p.ee_ratio_of_means}) {
      out << ',' << num(v);
    }
    out << ",ok\n";
  }
}

void write_svg(std::ostream& out, const EeReport& report, Figure figure) {
  const FigureSpec& spec = figure_spec(figure);
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 80, kRight = 150, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& p : report.points) {
    if (p.skipped) continue;
    const double y = figure_metric(p, figure).mean;
    x_lo = std::min(x_lo, double(p.value));
    x_hi = std::max(x_hi, double(p.value));
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (!std::isfinite(x_lo)) x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  if (x_hi == x_lo) x_hi = x_lo + 1;
  y_lo = std::min(0.0, y_lo);
  if (y_hi <= y_lo) y_hi = y_lo + 1;
  y_hi *= 1.05;
  const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  out << fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
  out << fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                     kLeft + plot_w / 2, spec.title);
  out << fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      kLeft, kTop, plot_w, plot_h);
  for (int i = 0; i <= 5; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / 5.0;
    out << fmt::format("<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", kLeft - 6,
                       py(y) + 4, y);
  }
  for (int v : report.values) {
    out << fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", px(v),
                       kTop + plot_h + 18, v);
  }
  out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                     kLeft + plot_w / 2, kHeight - 15,
                     report.variable == SweepVariable::kUsers ? "Number of users K"
                                                              : "Number of RF chains N_RF");
  out << fmt::format(
      "<text x=\"18\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">{}</text>\n",
      kTop + plot_h / 2, kTop + plot_h / 2, spec.y_label);

  static constexpr std::string_view kColors[] = {"#1f77b4", "#d62728"};
  for (std::size_t mi = 0; mi < report.modes.size(); ++mi) {
    const std::string_view color = kColors[mi % 2];
    std::string points;
    for (std::size_t p = 0; p < report.values.size(); ++p) {
      const PointResult& r = report.at(p, report.modes[mi]);
      if (r.skipped) continue;
      const double y = figure_metric(r, figure).mean;
      points += fmt::format("{:.1f},{:.1f} ", px(r.value), py(y));
      out << fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"3\" fill=\"{}\"/>\n", px(r.value),
                         py(y), color);
    }
    out << fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                       points, color);
    const double ly = kTop + 20 + 20.0 * static_cast<double>(mi);
    out << fmt::format(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
        kLeft + plot_w + 12, ly, kLeft + plot_w + 36, ly, color);
    out << fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kLeft + plot_w + 42, ly + 4,
                       report.modes[mi] == Mode::kGsm ? "with GSM" : "without GSM");
  }
  out << "</svg>\n";
}

std::string write_manifest(const RunManifest& manifest) {
  std::string out = "# gsm-mimo run manifest; usable as --config to rerun\n";
  out += "artifact_version = " + manifest.artifact_version + "\n";
  out += "timestamp = " + manifest.timestamp + "\n";
  out += "command = " + manifest.command + "\n";
  std::string files;
  for (const auto& f : manifest.outputs) files += (files.empty() ? "" : " ") + f;
  out += "outputs = " + files + "\n";
  out += write_config(manifest.config);
  return out;
}

}  // namespace gsm_mimo
