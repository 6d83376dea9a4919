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

#ifndef MOVECOVER_GEOMETRY_H_
#define MOVECOVER_GEOMETRY_H_

#include <array>
#include <cmath>
#include <vector>

namespace movecover {

// Tolerance for every point-on-circle / point-in-cell test. Boundary counts
// as covered.
inline constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// L-infinity distance, used by the square coverage shape.
inline double ChebyshevDistance(Point a, Point b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline bool IsFinite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Disk {
  Point center;
  double radius = 1.0;
};

// Returns the intersection points of the two radius-r circles centered at a
// and b. Empty when the circles are disjoint (or concentric), the single
// midpoint when they are tangent within kGeomTol, otherwise two points
// ordered by descending y (then ascending x).
std::vector<Point> CirclePairIntersections(Point a, Point b, double r);

// Axial index of a hexagon in a pointy-top lattice.
struct HexIndex {
  long long q = 0;
  long long w = 0;

  friend bool operator==(const HexIndex&, const HexIndex&) = default;
  friend auto operator<=>(const HexIndex& a, const HexIndex& b) {
    if (a.w != b.w) return a.w <=> b.w;
    return a.q <=> b.q;
  }
};

// Pointy-top hexagonal lattice whose cells have circumradius `side`.
// Center of cell (q, w) is origin + (sqrt(3)*side*(q + w/2), 1.5*side*w);
// corners sit at angles 30 + 60k degrees from the center.
class HexGrid {
 public:
  explicit HexGrid(double side, Point origin = {});

  double side() const { return side_; }
  Point origin() const { return origin_; }

  Point Center(HexIndex h) const;
  std::array<Point, 6> Corners(HexIndex h) const;

  // Index of the cell (Voronoi region) containing p. Points on a cell
  // boundary go to the smallest (w, q).
  HexIndex IndexOf(Point p) const;

 private:
  double side_;
  Point origin_;
};

Point HexCenterOf(Point p, const HexGrid& grid);

// Lattice centers whose circumscribed circles (radius grid.side()) jointly
// cover `disk`. If the disk contains two opposite corners of a cell, that
// cell alone suffices; otherwise every cell with a corner strictly inside
// the disk is returned. At most 5 centers, sorted by (w, q).
// Throws std::invalid_argument unless disk.radius == grid.side().
std::vector<Point> CoveringGridCircles(const Disk& disk, const HexGrid& grid);

}  // namespace movecover

#endif  // MOVECOVER_GEOMETRY_H_
