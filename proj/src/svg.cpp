// Copyright 2026 The coherentsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherentsim/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace coherentsim {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 612.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 380.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b"};

std::string num(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value,
                    std::chars_format::general, 7);
  if (ec != std::errc{}) throw std::runtime_error("svg number format failed");
  return std::string(buffer, ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  double tick = 0.25;

  double frac(double v) const { return (v - lo) / (hi - lo); }
};

// Tick spacing snapped to 1/2/5 times a power of ten, about five intervals.
Axis make_axis(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = std::max(0.5, std::abs(lo) * 0.5);
    lo -= pad;
    hi += pad;
  }
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double unit = raw / mag;
  double snapped = 10.0;
  if (unit <= 1.0) snapped = 1.0;
  else if (unit <= 2.0) snapped = 2.0;
  else if (unit <= 5.0) snapped = 5.0;
  const double tick = snapped * mag;
  Axis axis;
  axis.lo = std::floor(lo / tick) * tick;
  axis.hi = std::ceil(hi / tick) * tick;
  axis.tick = tick;
  return axis;
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) +
         "\" font-family=\"monospace\" font-size=\"12\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text_at(double x, double y, const std::string& anchor,
                    const std::string& content) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" +
         anchor + "\">" + escape(content) + "</text>\n";
}

std::string line_at(double x1, double y1, double x2, double y2,
                    const char* stroke) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\"/>\n";
}

std::string frame(const std::string& title, const std::string& x_label,
                  const std::string& y_label, const Axis& x_axis,
                  const Axis& y_axis, bool draw_x_ticks) {
  std::string out;
  out += text_at(kWidth / 2, 24, "middle", title);
  out += text_at(kWidth / 2, kHeight - 12, "middle", x_label);
  out += "<g transform=\"rotate(-90 18 " + num((kTop + kBottom) / 2) + ")\">" +
         text_at(18, (kTop + kBottom) / 2, "middle", y_label) + "</g>\n";
  out += line_at(kLeft, kBottom, kRight, kBottom, "black");
  out += line_at(kLeft, kTop, kLeft, kBottom, "black");
  const int x_ticks =
      static_cast<int>(std::round((x_axis.hi - x_axis.lo) / x_axis.tick));
  const int y_ticks =
      static_cast<int>(std::round((y_axis.hi - y_axis.lo) / y_axis.tick));
  if (draw_x_ticks) {
    for (int t = 0; t <= x_ticks; ++t) {
      const double v = x_axis.lo + t * x_axis.tick;
      const double x = kLeft + x_axis.frac(v) * (kRight - kLeft);
      out += line_at(x, kBottom, x, kBottom + 5, "black");
      out += text_at(x, kBottom + 20, "middle", num(v));
    }
  }
  for (int t = 0; t <= y_ticks; ++t) {
    const double v = y_axis.lo + t * y_axis.tick;
    const double y = kBottom - y_axis.frac(v) * (kBottom - kTop);
    out += line_at(kLeft - 5, y, kLeft, y, "black");
    out += text_at(kLeft - 8, y + 4, "end", num(v));
  }
  return out;
}

}  // namespace

std::string line_chart_svg(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<ChartSeries>& series) {
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  bool first = true;
  for (const ChartSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_lo = x_hi = x;
        y_lo = y_hi = y;
        first = false;
      }
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  const Axis x_axis = make_axis(x_lo, x_hi);
  const Axis y_axis = make_axis(y_lo, y_hi);

  std::string out = svg_open();
  out += frame(title, x_label, y_label, x_axis, y_axis, true);

  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % std::size(kPalette)];
    std::string points;
    for (const auto& [x, y] : series[si].points) {
      const double px = kLeft + x_axis.frac(x) * (kRight - kLeft);
      const double py = kBottom - y_axis.frac(y) * (kBottom - kTop);
      points += num(px) + "," + num(py) + " ";
      out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    if (!series[si].label.empty()) {
      const double ly = kTop + 16.0 * static_cast<double>(si);
      out += line_at(kRight - 110, ly - 4, kRight - 90, ly - 4, color);
      out += text_at(kRight - 84, ly, "start", series[si].label);
    }
  }
  out += "</svg>\n";
  return out;
}

std::string bar_chart_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<double>& values,
                          const std::vector<double>& reference) {
  if (!reference.empty() && reference.size() != values.size()) {
    throw std::invalid_argument(
        "bar_chart_svg: reference length must match values");
  }
  double y_hi = 0.0;
  for (double v : values) y_hi = std::max(y_hi, v);
  for (double v : reference) y_hi = std::max(y_hi, v);
  const Axis y_axis = make_axis(0.0, y_hi > 0.0 ? y_hi : 1.0);
  const Axis x_axis;  // unused for bars

  std::string out = svg_open();
  out += frame(title, x_label, y_label, x_axis, y_axis, false);

  const auto n = static_cast<double>(values.size());
  const double slot = (kRight - kLeft) / std::max(n, 1.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x0 = kLeft + slot * (static_cast<double>(i) + 0.15);
    const double w = slot * 0.7;
    const double y = kBottom - y_axis.frac(values[i]) * (kBottom - kTop);
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" +
           num(w) + "\" height=\"" + num(kBottom - y) +
           "\" fill=\"#1f77b4\"/>\n";
    const double center = kLeft + slot * (static_cast<double>(i) + 0.5);
    out += line_at(center, kBottom, center, kBottom + 5, "black");
    out += text_at(center, kBottom + 20, "middle", std::to_string(i));
    if (!reference.empty()) {
      const double ry =
          kBottom - y_axis.frac(reference[i]) * (kBottom - kTop);
      out += line_at(x0 - slot * 0.05, ry, x0 + w + slot * 0.05, ry,
                     "#d62728");
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace coherentsim
