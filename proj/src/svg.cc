// Copyright 2026 The movecover Authors
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

#include "movecover/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace movecover {

namespace {

std::string Num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void Add(Point p, double pad = 0.0) {
    min_x = std::min(min_x, p.x - pad);
    max_x = std::max(max_x, p.x + pad);
    min_y = std::min(min_y, p.y - pad);
    max_y = std::max(max_y, p.y + pad);
  }
};

}  // namespace

std::string RenderSvg(const Instance& inst, const Solution& sol) {
  Bounds b;
  for (Point t : inst.targets) b.Add(t);
  for (const Station& s : inst.stations) b.Add(s.position);
  for (const SensorPlacement& s : sol.sensors) b.Add(s.center, inst.radius);
  if (!std::isfinite(b.min_x)) b.Add({0.0, 0.0}, 1.0);

  const double width = std::max(b.max_x - b.min_x, 1e-9);
  const double height = std::max(b.max_y - b.min_y, 1e-9);
  const double span = std::max(width, height);
  const double vx = b.min_x - 0.1 * width;
  const double vy = -b.max_y - 0.1 * height;  // SVG y grows downward
  const double vw = 1.2 * width;
  const double vh = 1.2 * height;
  const double dot = 0.006 * span;
  const double box = 0.02 * span;
  const double stroke = 0.002 * span;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << Num(vx) << ' '
     << Num(vy) << ' ' << Num(vw) << ' ' << Num(vh) << "\" width=\"800\" height=\""
     << Num(800.0 * vh / vw) << "\">\n";

  os << "<g stroke=\"#888888\" stroke-width=\"" << Num(stroke) << "\">\n";
  for (const SensorPlacement& s : sol.sensors) {
    if (s.station < 0 || s.station >= static_cast<int>(inst.stations.size())) continue;
    const Point from = inst.stations[s.station].position;
    os << "<line class=\"move\" x1=\"" << Num(from.x) << "\" y1=\"" << Num(-from.y) << "\" x2=\""
       << Num(s.center.x) << "\" y2=\"" << Num(-s.center.y) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << Num(stroke) << "\">\n";
  for (const SensorPlacement& s : sol.sensors) {
    if (inst.shape == CoverageShape::kSquare) {
      os << "<rect class=\"sensor\" x=\"" << Num(s.center.x - inst.radius) << "\" y=\""
         << Num(-s.center.y - inst.radius) << "\" width=\"" << Num(2 * inst.radius)
         << "\" height=\"" << Num(2 * inst.radius) << "\"/>\n";
    } else {
      os << "<circle class=\"sensor\" cx=\"" << Num(s.center.x) << "\" cy=\"" << Num(-s.center.y)
         << "\" r=\"" << Num(inst.radius) << "\"/>\n";
    }
  }
  os << "</g>\n";

  os << "<g fill=\"#d62728\">\n";
  for (Point t : inst.targets) {
    os << "<circle class=\"target\" cx=\"" << Num(t.x) << "\" cy=\"" << Num(-t.y) << "\" r=\""
       << Num(dot) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g fill=\"#2ca02c\" font-size=\"" << Num(2.0 * box) << "\">\n";
  for (const Station& s : inst.stations) {
    os << "<rect class=\"station\" x=\"" << Num(s.position.x - box / 2) << "\" y=\""
       << Num(-s.position.y - box / 2) << "\" width=\"" << Num(box) << "\" height=\"" << Num(box)
       << "\"/>\n";
    os << "<text class=\"station-cost\" x=\"" << Num(s.position.x + box) << "\" y=\""
       << Num(-s.position.y - box) << "\">" << Num(s.opening_cost) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace movecover
