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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace coherentsim {

/// Minimal static chart writer. Output contains no timestamps or other
/// run-dependent content, so identical data yields byte-identical SVG.
struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

std::string line_chart_svg(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<ChartSeries>& series);

/// Bars indexed 0..n-1 with an optional per-bar reference level drawn as a
/// horizontal marker (pass an empty vector to omit the markers).
std::string bar_chart_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<double>& values,
                          const std::vector<double>& reference);

}  // namespace coherentsim
