// Copyright 2026 The supercat Authors
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

#ifndef SUPERCAT_SVG_HPP
#define SUPERCAT_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "supercat/path.hpp"

namespace supercat {

struct SvgStyle {
  double unit = 40.0;
  double margin = 24.0;
  double wave_amplitude = 6.0;
  int wave_samples = 24;
};

/// Standalone SVG drawing of a path on a unit grid. Every step is one element
/// carrying class "step" plus its kind (up, down, straight, wavy); wavy steps
/// are drawn as one period of a sine wave. When markers are given, points X
/// and R are circled and labelled.
template <PathStep Step>
std::string render_svg(const LatticePath<Step>& path,
                       const std::optional<PathMarkers>& marks = std::nullopt,
                       const SvgStyle& style = {}) {
  const int top = std::max(path.height(), 1);
  const int bottom = std::min(path.min_level(), 0);
  const auto cols = static_cast<double>(std::max<std::size_t>(path.size(), 1));
  const double width = cols * style.unit + 2 * style.margin;
  const double height = (top - bottom) * style.unit + 2 * style.margin;
  auto px = [&](double x) { return style.margin + x * style.unit; };
  auto py = [&](double y) { return style.margin + (top - y) * style.unit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<style>.grid{stroke:#ccc;stroke-width:1}.axis{stroke:#888;stroke-width:1.5}"
        ".step{stroke:#000;stroke-width:2.5;fill:none;stroke-linecap:round}"
        ".wavy{stroke:#1f5fbf}.marker{fill:#c0392b}.label{font:14px sans-serif}</style>\n";

  os << "<g class=\"grid-lines\">\n";
  for (std::size_t x = 0; x <= static_cast<std::size_t>(cols); ++x) {
    os << "<line class=\"grid\" x1=\"" << px(x) << "\" y1=\"" << py(top) << "\" x2=\"" << px(x)
       << "\" y2=\"" << py(bottom) << "\"/>\n";
  }
  for (int y = bottom; y <= top; ++y) {
    os << "<line class=\"" << (y == 0 ? "axis" : "grid") << "\" x1=\"" << px(0) << "\" y1=\""
       << py(y) << "\" x2=\"" << px(cols) << "\" y2=\"" << py(y) << "\"/>\n";
  }
  os << "</g>\n<g class=\"path\">\n";

  const auto levels = path.levels();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Step s = path.steps()[i];
    const double x0 = px(i), x1 = px(i + 1);
    const double y0 = py(levels[i]), y1 = py(levels[i + 1]);
    if constexpr (std::is_same_v<Step, MotzkinStep>) {
      if (s == MotzkinStep::Wavy) {
        os << "<polyline class=\"step wavy\" points=\"";
        for (int k = 0; k <= style.wave_samples; ++k) {
          const double t = static_cast<double>(k) / style.wave_samples;
          const double yy = y0 - style.wave_amplitude * std::sin(2 * std::numbers::pi * t);
          os << (k ? " " : "") << x0 + t * (x1 - x0) << ',' << yy;
        }
        os << "\"/>\n";
        continue;
      }
    }
    const char* kind = s == Step::Up ? "up" : s == Step::Down ? "down" : "straight";
    os << "<line class=\"step " << kind << "\" x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\""
       << x1 << "\" y2=\"" << y1 << "\"/>\n";
  }
  os << "</g>\n";

  if (marks) {
    auto label = [&](std::size_t x, const char* name, double dy) {
      os << "<circle class=\"marker\" data-name=\"" << name << "\" data-x=\"" << x << "\" cx=\""
         << px(x) << "\" cy=\"" << py(levels[x]) << "\" r=\"4\"/>\n"
         << "<text class=\"label\" x=\"" << px(x) + 5 << "\" y=\"" << py(levels[x]) + dy
         << "\">" << name << "</text>\n";
    };
    os << "<g class=\"markers\">\n";
    label(marks->x_point, "X", 16);
    label(marks->rightmost_max, "R", -8);
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace supercat

#endif  // SUPERCAT_SVG_HPP
