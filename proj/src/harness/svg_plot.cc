// Copyright 2026 The sdcircle Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcircle/harness/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "sdcircle/harness/report_io.h"

namespace sdcircle::harness {
namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 190.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const { return log ? std::log10(v) : v; }
  double unit(double v) const { return (map(v) - lo) / (hi - lo); }
};

Axis fit_axis(const std::vector<PlotSeries>& series, bool use_x, bool log) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : series) {
    for (double v : use_x ? s.x : s.y) {
      if (!std::isfinite(v) || (log && v <= 0.0)) continue;
      const double m = log ? std::log10(v) : v;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  if (!std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi - lo < 1e-300) {
    const double pad = std::max(std::abs(lo) * 0.1, 1e-12);
    lo -= pad;
    hi += pad;
  }
  if (log) {
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi == lo) hi = lo + 1.0;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return Axis{lo, hi, log};
}

// Tick positions in mapped coordinates.
std::vector<double> ticks(const Axis& axis) {
  std::vector<double> out;
  if (axis.log) {
    for (double d = axis.lo; d <= axis.hi + 1e-9; d += 1.0) out.push_back(d);
    return out;
  }
  const double raw = (axis.hi - axis.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  for (double v = std::ceil(axis.lo / step) * step; v <= axis.hi; v += step) {
    out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return out;
}

std::string tick_label(const Axis& axis, double mapped) {
  if (axis.log) return "1e" + fmt("%.0f", mapped);
  return fmt("%.4g", mapped);
}

// Min/max envelope per pixel column, in x order.
std::vector<std::pair<double, double>> envelope(const PlotSeries& s,
                                                const Axis& ax, const Axis& ay,
                                                double pixels) {
  std::vector<std::pair<double, double>> pts;
  const std::size_t n = std::min(s.x.size(), s.y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double x = s.x[i];
    const double y = s.y[i];
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    if ((ax.log && x <= 0.0) || (ay.log && y <= 0.0)) continue;
    pts.emplace_back(ax.unit(x), ay.unit(y));
  }
  if (pts.size() <= 2 * static_cast<std::size_t>(pixels)) return pts;

  std::vector<std::pair<double, double>> out;
  std::size_t i = 0;
  while (i < pts.size()) {
    const long column = std::lround(pts[i].first * pixels);
    std::size_t lo_i = i;
    std::size_t hi_i = i;
    std::size_t j = i;
    while (j < pts.size() && std::lround(pts[j].first * pixels) == column) {
      if (pts[j].second < pts[lo_i].second) lo_i = j;
      if (pts[j].second > pts[hi_i].second) hi_i = j;
      ++j;
    }
    out.push_back(pts[std::min(lo_i, hi_i)]);
    if (lo_i != hi_i) out.push_back(pts[std::max(lo_i, hi_i)]);
    i = j;
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgPlot::add_series(PlotSeries series) {
  series_.push_back(std::move(series));
}

std::string SvgPlot::render() const {
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const Axis ax = fit_axis(series_, true, log_x_);
  const Axis ay = fit_axis(series_, false, log_y_);
  auto px = [&](double unit) { return kLeft + unit * pw; };
  auto py = [&](double unit) { return kTop + (1.0 - unit) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt("%.0f", kWidth) + "\" height=\"" + fmt("%.0f", kHeight) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title_) + "</text>\n";

  for (double t : ticks(ax)) {
    const double x = px((t - ax.lo) / (ax.hi - ax.lo));
    out += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" + fmt("%.2f", kTop) +
           "\" x2=\"" + fmt("%.2f", x) + "\" y2=\"" + fmt("%.2f", kTop + ph) +
           "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" +
           fmt("%.2f", kTop + ph + 18) + "\" text-anchor=\"middle\">" +
           tick_label(ax, t) + "</text>\n";
  }
  for (double t : ticks(ay)) {
    const double y = py((t - ay.lo) / (ay.hi - ay.lo));
    out += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", y) +
           "\" x2=\"" + fmt("%.2f", kLeft + pw) + "\" y2=\"" + fmt("%.2f", y) +
           "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kLeft - 6) + "\" y=\"" +
           fmt("%.2f", y + 4) + "\" text-anchor=\"end\">" +
           tick_label(ay, t) + "</text>\n";
  }
  out += "<rect x=\"" + fmt("%.2f", kLeft) + "\" y=\"" + fmt("%.2f", kTop) +
         "\" width=\"" + fmt("%.2f", pw) + "\" height=\"" + fmt("%.2f", ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"" +
         fmt("%.1f", kHeight - 15) + "\" text-anchor=\"middle\">" +
         escape(x_label_) + "</text>\n";
  out += "<text transform=\"translate(20," + fmt("%.1f", kTop + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(y_label_) +
         "</text>\n";

  for (std::size_t i = 0; i < series_.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    const auto pts = envelope(series_[i], ax, ay, pw);
    out += "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\"";
    out += color;
    out += "\" points=\"";
    for (const auto& [ux, uy] : pts) {
      out += fmt("%.2f", px(ux)) + "," + fmt("%.2f", py(uy)) + " ";
    }
    out += "\"/>\n";
    if (markers_) {
      for (const auto& [ux, uy] : pts) {
        out += "<circle cx=\"" + fmt("%.2f", px(ux)) + "\" cy=\"" +
               fmt("%.2f", py(uy)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
      }
    }
    const double ly = kTop + 14.0 + 18.0 * i;
    const double lx = kLeft + pw + 12.0;
    out += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly) +
           "\" x2=\"" + fmt("%.1f", lx + 22) + "\" y2=\"" + fmt("%.1f", ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.1f", lx + 28) + "\" y=\"" +
           fmt("%.1f", ly + 4) + "\">" + escape(series_[i].name) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void SvgPlot::write(const std::filesystem::path& path) const {
  write_text_file(path, render());
}

}  // namespace sdcircle::harness
