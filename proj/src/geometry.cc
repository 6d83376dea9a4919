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

#include "movecover/geometry.h"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace movecover {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

constexpr std::array<HexIndex, 6> kNeighborOffsets = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1},
}};

}  // namespace

std::vector<Point> CirclePairIntersections(Point a, Point b, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("circle radius must be positive");
  const double d = Distance(a, b);
  if (d > 2.0 * r + kGeomTol) return {};
  const Point mid = 0.5 * (a + b);
  if (std::abs(d - 2.0 * r) <= kGeomTol) return {mid};
  if (d == 0.0) return {};  // concentric: no isolated intersection points
  const double h = std::sqrt(std::max(0.0, r * r - 0.25 * d * d));
  // Unit normal to a->b.
  const Point n{-(b.y - a.y) / d, (b.x - a.x) / d};
  Point p1 = mid + h * n;
  Point p2 = mid - h * n;
  if (p2.y > p1.y || (p2.y == p1.y && p2.x < p1.x)) std::swap(p1, p2);
  return {p1, p2};
}

HexGrid::HexGrid(double side, Point origin) : side_(side), origin_(origin) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("hex grid side must be positive and finite");
  }
  if (!IsFinite(origin)) throw std::invalid_argument("hex grid origin must be finite");
}

Point HexGrid::Center(HexIndex h) const {
  return {origin_.x + kSqrt3 * side_ * (static_cast<double>(h.q) + 0.5 * static_cast<double>(h.w)),
          origin_.y + 1.5 * side_ * static_cast<double>(h.w)};
}

std::array<Point, 6> HexGrid::Corners(HexIndex h) const {
  const Point c = Center(h);
  std::array<Point, 6> out;
  for (int k = 0; k < 6; ++k) {
    const double angle = (30.0 + 60.0 * k) * std::numbers::pi / 180.0;
    out[k] = {c.x + side_ * std::cos(angle), c.y + side_ * std::sin(angle)};
  }
  return out;
}

HexIndex HexGrid::IndexOf(Point p) const {
  const double wf = (p.y - origin_.y) / (1.5 * side_);
  const double qf = (p.x - origin_.x) / (kSqrt3 * side_) - 0.5 * wf;
  const double sf = -qf - wf;

  // Cube rounding.
  double rq = std::round(qf), rw = std::round(wf), rs = std::round(sf);
  const double dq = std::abs(rq - qf), dw = std::abs(rw - wf), ds = std::abs(rs - sf);
  if (dq > dw && dq > ds) {
    rq = -rw - rs;
  } else if (dw > ds) {
    rw = -rq - rs;
  }
  const HexIndex rounded{static_cast<long long>(rq), static_cast<long long>(rw)};

  // The rounded cell is correct up to floating error; settle boundary points
  // by checking the neighborhood with the tie rule.
  HexIndex best = rounded;
  double best_d = Distance(p, Center(rounded));
  for (const HexIndex& off : kNeighborOffsets) {
    const HexIndex cand{rounded.q + off.q, rounded.w + off.w};
    const double d = Distance(p, Center(cand));
    if (d < best_d - kGeomTol * side_) {
      best = cand;
      best_d = d;
    } else if (d <= best_d + kGeomTol * side_ && cand < best) {
      best = cand;
      best_d = std::min(d, best_d);
    }
  }
  return best;
}

Point HexCenterOf(Point p, const HexGrid& grid) { return grid.Center(grid.IndexOf(p)); }

std::vector<Point> CoveringGridCircles(const Disk& disk, const HexGrid& grid) {
  if (std::abs(disk.radius - grid.side()) > kGeomTol * std::max(1.0, grid.side())) {
    throw std::invalid_argument("grid circle cover requires disk radius == grid side");
  }
  const double r = disk.radius;
  const HexIndex home = grid.IndexOf(disk.center);

  // Every cell with a corner within r of the center has its own center within
  // 2r; axial distance 3 around the home cell is a safe superset.
  std::vector<HexIndex> cells;
  for (long long dq = -3; dq <= 3; ++dq) {
    for (long long dw = -3; dw <= 3; ++dw) {
      if (std::abs(dq + dw) > 3) continue;
      cells.push_back({home.q + dq, home.w + dw});
    }
  }
  std::sort(cells.begin(), cells.end());

  for (const HexIndex& h : cells) {
    const auto corners = grid.Corners(h);
    for (int k = 0; k < 3; ++k) {
      if (Distance(corners[k], disk.center) <= r + kGeomTol &&
          Distance(corners[k + 3], disk.center) <= r + kGeomTol) {
        return {grid.Center(h)};
      }
    }
  }

  std::vector<Point> out;
  for (const HexIndex& h : cells) {
    const auto corners = grid.Corners(h);
    const bool touched = std::any_of(corners.begin(), corners.end(), [&](Point c) {
      return Distance(c, disk.center) < r - kGeomTol;
    });
    if (touched) out.push_back(grid.Center(h));
  }
  return out;
}

}  // namespace movecover
