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

#include <cmath>
#include <random>

#include "disk_sampling.h"
#include "doctest.h"
#include "movecover/geometry.h"
#include "movecover/instance.h"
#include "movecover/line_solver.h"
#include "test_helpers.h"

using namespace movecover;
using namespace movecover::testing;

TEST_CASE("reflect flips negative station y and keeps the rest") {
  Instance inst;
  inst.targets = {{0, 0}, {3, 0}};
  inst.stations = {{{1, -2}, 3.0}, {{4, 0}, 1.0}};
  const Instance out = ReflectInstance(inst);
  CHECK(out.stations[0] == Station{{1, 2}, 3.0});
  CHECK(out.stations[1] == Station{{4, 0}, 1.0});
  CHECK(out.targets == inst.targets);
  CHECK(ReflectInstance(out) == out);
}

TEST_CASE("reflect rejects off-line targets") {
  Instance inst;
  inst.targets = {{0, 0.5}};
  inst.stations = {{{0, 1}, 0.0}};
  CHECK_THROWS(ReflectInstance(inst));
}

TEST_CASE("reflect preserves the exact line optimum on the centered-station example") {
  Instance below = CenteredStation();
  below.stations[0].position.y = -7;
  const Instance above = ReflectInstance(below);
  CHECK(above.stations[0].position == Point{5, 7});
  CHECK(SolveLineExact(below).total_cost == doctest::Approx(SolveLineExact(above).total_cost));
}

TEST_CASE("circle pair intersections") {
  SUBCASE("tangent") {
    const auto pts = CirclePairIntersections({0, 0}, {2, 0}, 1.0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(1.0));
    CHECK(pts[0].y == doctest::Approx(0.0));
  }
  SUBCASE("two points at chord height") {
    const auto pts = CirclePairIntersections({0, 0}, {1.5, 0}, 1.0);
    REQUIRE(pts.size() == 2);
    const double h = std::sqrt(1.0 - 0.75 * 0.75);
    CHECK(pts[0].x == doctest::Approx(0.75));
    CHECK(pts[1].x == doctest::Approx(0.75));
    CHECK(std::abs(pts[0].y) == doctest::Approx(h));
    CHECK(pts[0].y == doctest::Approx(-pts[1].y));
    CHECK(h == doctest::Approx(std::sqrt(0.4375)));
  }
  SUBCASE("disjoint") { CHECK(CirclePairIntersections({0, 0}, {3, 0}, 1.0).empty()); }
  SUBCASE("bad radius") { CHECK_THROWS(CirclePairIntersections({0, 0}, {1, 0}, 0.0)); }
}

TEST_CASE("intersection points lie on both circles") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-10, 10);
  std::uniform_real_distribution<double> rad(0.1, 5);
  int nonempty = 0;
  for (int it = 0; it < 10000; ++it) {
    const Point a{c(rng), c(rng)};
    const double r = rad(rng);
    // Half the draws put b close enough to intersect.
    Point b{c(rng), c(rng)};
    if (it % 2 == 0) {
      const double ang = c(rng);
      const double d = 2.0 * r * std::abs(c(rng)) / 10.0;
      b = {a.x + d * std::cos(ang), a.y + d * std::sin(ang)};
    }
    const auto pts = CirclePairIntersections(a, b, r);
    if (!pts.empty()) ++nonempty;
    for (const Point& p : pts) {
      REQUIRE(std::abs(Distance(p, a) - r) <= 1e-9);
      REQUIRE(std::abs(Distance(p, b) - r) <= 1e-9);
    }
  }
  CHECK(nonempty > 4000);
}

TEST_CASE("hex center lookup examples") {
  const HexGrid grid(1.0);
  CHECK(HexCenterOf({0.2, 0.1}, grid) == Point{0, 0});
  const Point c = HexCenterOf({0.9, 0.8}, grid);
  CHECK(c.x == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(c.y == doctest::Approx(1.5));
  for (long long q = -3; q <= 3; ++q) {
    for (long long w = -3; w <= 3; ++w) {
      const Point center = grid.Center({q, w});
      CHECK(HexCenterOf(center, grid) == center);
    }
  }
}

TEST_CASE("hex lattice geometry") {
  const HexGrid grid(2.0, {0.5, -1.0});
  const Point c = grid.Center({1, 2});
  CHECK(c.x == doctest::Approx(0.5 + std::sqrt(3.0) * 2.0 * 2.0));
  CHECK(c.y == doctest::Approx(-1.0 + 6.0));
  for (const Point& k : grid.Corners({1, 2})) CHECK(Distance(k, c) == doctest::Approx(2.0));
  // Pointy-top: a corner straight above the center.
  const auto corners = grid.Corners({0, 0});
  bool top = false;
  for (const Point& k : corners) top |= std::abs(k.x - 0.5) < 1e-12 && std::abs(k.y - 1.0) < 1e-12;
  CHECK(top);
}

TEST_CASE("hex center is the nearest lattice center") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(-30, 30);
  std::uniform_real_distribution<double> side_dist(0.2, 4);
  for (int it = 0; it < 10000; ++it) {
    const HexGrid grid(side_dist(rng), {c(rng) / 10.0, c(rng) / 10.0});
    const Point p{c(rng), c(rng)};
    const Point got = HexCenterOf(p, grid);
    // Brute force over every center within 3 sides, located from axial
    // coordinates independent of the rounding under test.
    const double s = grid.side();
    const double wf = (p.y - grid.origin().y) / (1.5 * s);
    const double qf = (p.x - grid.origin().x) / (std::sqrt(3.0) * s) - wf / 2.0;
    double best = 1e300;
    for (long long w = static_cast<long long>(std::floor(wf)) - 4; w <= std::floor(wf) + 4; ++w) {
      for (long long q = static_cast<long long>(std::floor(qf)) - 5; q <= std::floor(qf) + 5; ++q) {
        const Point ctr = grid.Center({q, w});
        if (Distance(ctr, p) <= 3 * s) best = std::min(best, Distance(ctr, p));
      }
    }
    REQUIRE(Distance(got, p) <= best + 1e-9);
    REQUIRE(Distance(got, p) <= s + 1e-9);
  }
}

TEST_CASE("hex ties go to the smallest (w,q)") {
  const HexGrid grid(1.0);
  // Midpoint of centers (0,0) and (1,0) lies on their shared edge.
  const Point mid = 0.5 * (grid.Center({0, 0}) + grid.Center({1, 0}));
  CHECK(grid.IndexOf(mid) == HexIndex{0, 0});
  // Midpoint of (0,0) and (0,1): (0,0) has the smaller w.
  const Point mid2 = 0.5 * (grid.Center({0, 0}) + grid.Center({0, 1}));
  CHECK(grid.IndexOf(mid2) == HexIndex{0, 0});
  // The bottom corner of (0,0) is shared with (0,-1) and (1,-1).
  const Point corner = grid.Corners({0, 0})[4];
  CHECK(corner.y == doctest::Approx(-1.0));
  CHECK(grid.IndexOf(corner) == HexIndex{0, -1});
}

TEST_CASE("covering grid circles examples") {
  const HexGrid grid(1.0);
  SUBCASE("disk at a lattice center") {
    const Point c = grid.Center({2, -1});
    const auto got = CoveringGridCircles({c, 1.0}, grid);
    REQUIRE(got.size() == 1);
    CHECK(Distance(got[0], c) < 1e-12);
  }
  SUBCASE("disk at a hexagon corner") {
    const Point corner = grid.Corners({0, 0})[0];
    const Disk d{corner, 1.0};
    const auto got = CoveringGridCircles(d, grid);
    // Exhaustive scan of the incident hexagons: only the shared corner is
    // strictly inside, and it belongs to exactly three cells.
    int incident = 0;
    for (long long q = -3; q <= 3; ++q) {
      for (long long w = -3; w <= 3; ++w) {
        for (const Point& k : grid.Corners({q, w})) {
          if (Distance(k, corner) < 1e-9) {
            ++incident;
            break;
          }
        }
      }
    }
    CHECK(incident == 3);
    CHECK(got.size() == 3);
    CHECK(got.size() <= 5);
    CHECK(SamplesCovered(SampleDisk(d), got, 1.0));
  }
  SUBCASE("radius mismatch") { CHECK_THROWS(CoveringGridCircles({{0, 0}, 2.0}, grid)); }
}

TEST_CASE("covering grid circles on random disks") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> c(-20, 20);
  std::uniform_real_distribution<double> side_dist(0.3, 3);
  for (int it = 0; it < 10000; ++it) {
    const double s = side_dist(rng);
    const HexGrid grid(s, {c(rng) / 7.0, c(rng) / 7.0});
    const Disk d{{c(rng), c(rng)}, s};
    const auto got = CoveringGridCircles(d, grid);
    REQUIRE(!got.empty());
    REQUIRE(got.size() <= 5);
    REQUIRE(SamplesCovered(SampleDisk(d), got, s));
  }
}
