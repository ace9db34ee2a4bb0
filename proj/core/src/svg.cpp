// Copyright 2026 The dpbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpbandit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

namespace dpbandit {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 730.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 460.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* series_color(Model m) {
  switch (m) {
    case Model::kCentral:
      return "#1f77b4";
    case Model::kLocal:
      return "#d62728";
    case Model::kShuffled:
      return "#2ca02c";
    case Model::kNonPrivate:
      return "#555555";
  }
  return "#000000";
}

struct LogAxis {
  double lo = 0.0;  // log10 of the low end
  double hi = 1.0;
  double begin_px = 0.0;
  double end_px = 1.0;

  double map(double value, double floor_value) const {
    const double l = std::log10(std::max(value, floor_value));
    const double f = (l - lo) / (hi - lo);
    return begin_px + f * (end_px - begin_px);
  }
};

}  // namespace

std::string render_plot(const std::vector<SummaryRow>& summary) {
  if (summary.empty()) throw Error("plot needs at least one summary row");

  std::map<Model, std::vector<SummaryRow>> series;
  std::vector<SummaryRow> baseline;
  for (const SummaryRow& row : summary) {
    if (row.model == Model::kNonPrivate || std::isnan(row.epsilon)) {
      baseline.push_back(row);
    } else {
      series[row.model].push_back(row);
    }
  }
  for (auto& [model, rows] : series) {
    std::sort(rows.begin(), rows.end(),
              [](const SummaryRow& a, const SummaryRow& b) {
                return a.epsilon < b.epsilon;
              });
  }

  double eps_lo = std::numeric_limits<double>::infinity();
  double eps_hi = -std::numeric_limits<double>::infinity();
  double reg_hi = 0.0;
  for (const SummaryRow& row : summary) {
    if (!std::isnan(row.epsilon)) {
      eps_lo = std::min(eps_lo, row.epsilon);
      eps_hi = std::max(eps_hi, row.epsilon);
    }
    reg_hi = std::max(reg_hi, row.mean_regret + row.std_regret);
  }
  if (!std::isfinite(eps_lo)) {
    eps_lo = 0.1;
    eps_hi = 10.0;
  }
  if (reg_hi <= 0.0) reg_hi = 1.0;
  const double reg_floor = std::max(reg_hi * 1e-4, 1e-9);
  double reg_lo = reg_hi;
  for (const SummaryRow& row : summary) {
    reg_lo = std::min(reg_lo, std::max(row.mean_regret - row.std_regret, reg_floor));
  }

  LogAxis x{std::log10(eps_lo) - 0.15, std::log10(eps_hi) + 0.15, kLeft, kRight};
  if (x.hi - x.lo < 0.5) {  // single epsilon: pad to a readable window
    const double mid = 0.5 * (x.lo + x.hi);
    x.lo = mid - 0.5;
    x.hi = mid + 0.5;
  }
  LogAxis y{std::log10(reg_lo) - 0.1, std::log10(reg_hi) + 0.1, kBottom, kTop};
  if (y.hi - y.lo < 0.5) {
    const double mid = 0.5 * (y.lo + y.hi);
    y.lo = mid - 0.5;
    y.hi = mid + 0.5;
  }

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
       "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
       " " + num(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" +
       num(kHeight) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(0.5 * (kLeft + kRight)) +
       "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">regret vs privacy budget</text>\n";

  // frame
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
       num(kRight) + "\" y2=\"" + num(kBottom) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
       num(kLeft) + "\" y2=\"" + num(kBottom) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // decade ticks
  for (int p = static_cast<int>(std::ceil(x.lo)); p <= static_cast<int>(std::floor(x.hi)); ++p) {
    const double px = x.begin_px + (p - x.lo) / (x.hi - x.lo) * (x.end_px - x.begin_px);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
         num(px) + "\" y2=\"" + num(kBottom + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 20) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e" +
         std::to_string(p) + "</text>\n";
  }
  for (int p = static_cast<int>(std::ceil(y.lo)); p <= static_cast<int>(std::floor(y.hi)); ++p) {
    const double py = y.begin_px + (p - y.lo) / (y.hi - y.lo) * (y.end_px - y.begin_px);
    s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(py + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
         std::to_string(p) + "</text>\n";
  }
  s += "<text x=\"" + num(0.5 * (kLeft + kRight)) + "\" y=\"" +
       num(kHeight - 12) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       "privacy budget (epsilon)</text>\n";
  s += "<text x=\"20\" y=\"" + num(0.5 * (kTop + kBottom)) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
       "transform=\"rotate(-90 20 " + num(0.5 * (kTop + kBottom)) +
       ")\">mean final regret</text>\n";

  // non-private reference line
  if (!baseline.empty()) {
    const double py = y.map(baseline.front().mean_regret, reg_floor);
    s += "<line class=\"reference\" x1=\"" + num(kLeft) + "\" y1=\"" + num(py) +
         "\" x2=\"" + num(kRight) + "\" y2=\"" + num(py) + "\" stroke=\"" +
         series_color(Model::kNonPrivate) +
         "\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    s += "<circle cx=\"" + num(kLeft + 6) + "\" cy=\"" + num(py) +
         "\" r=\"3.5\" fill=\"" + series_color(Model::kNonPrivate) + "\"/>\n";
    s += "<text x=\"" + num(kLeft + 14) + "\" y=\"" + num(py - 6) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
         series_color(Model::kNonPrivate) + "\">nonprivate</text>\n";
  }

  for (const auto& [model, rows] : series) {
    const char* color = series_color(model);
    std::string points;
    for (const SummaryRow& row : rows) {
      const double px = x.map(row.epsilon, 1e-300);
      const double py = y.map(row.mean_regret, reg_floor);
      points += num(px) + "," + num(py) + " ";
      // +-1 std whisker
      const double y_hi = y.map(row.mean_regret + row.std_regret, reg_floor);
      const double y_lo = y.map(std::max(row.mean_regret - row.std_regret, reg_floor), reg_floor);
      s += "<line x1=\"" + num(px) + "\" y1=\"" + num(y_lo) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(y_hi) + "\" stroke=\"" + color +
           "\" stroke-width=\"1\"/>\n";
      s += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(y_hi) + "\" x2=\"" +
           num(px + 3) + "\" y2=\"" + num(y_hi) + "\" stroke=\"" + color +
           "\" stroke-width=\"1\"/>\n";
      s += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(y_lo) + "\" x2=\"" +
           num(px + 3) + "\" y2=\"" + num(y_lo) + "\" stroke=\"" + color +
           "\" stroke-width=\"1\"/>\n";
    }
    if (rows.size() > 1) {
      s += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
           color + "\" stroke-width=\"1.5\"/>\n";
    }
    for (const SummaryRow& row : rows) {
      const double px = x.map(row.epsilon, 1e-300);
      const double py = y.map(row.mean_regret, reg_floor);
      s += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) +
           "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    }
  }

  // legend
  double ly = kTop + 10.0;
  for (const auto& [model, rows] : series) {
    (void)rows;
    s += "<rect x=\"" + num(kRight - 120) + "\" y=\"" + num(ly - 9) +
         "\" width=\"10\" height=\"10\" fill=\"" + series_color(model) +
         "\"/>\n";
    s += "<text x=\"" + num(kRight - 105) + "\" y=\"" + num(ly) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" +
         std::string(model_name(model)) + "</text>\n";
    ly += 18.0;
  }

  s += "</svg>\n";
  return s;
}

void emit_plot(const std::vector<SummaryRow>& summary, const std::string& path) {
  const std::string content = render_plot(summary);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError(path, "write failed");
}

}  // namespace dpbandit
