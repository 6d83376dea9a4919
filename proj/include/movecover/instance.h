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

// Problem data model: targets, base stations with opening costs, and the
// solutions the solvers return. JSON is the interchange format.

#ifndef MOVECOVER_INSTANCE_H_
#define MOVECOVER_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "movecover/geometry.h"

namespace movecover {

// Targets of a line instance must satisfy |y| <= kLineTol.
inline constexpr double kLineTol = 1e-12;

enum class CoverageShape { kDisk, kSquare };

std::string_view ShapeName(CoverageShape shape);

struct Station {
  Point position;
  double opening_cost = 0.0;

  friend bool operator==(const Station&, const Station&) = default;
};

struct Instance {
  double radius = 1.0;
  CoverageShape shape = CoverageShape::kDisk;
  std::vector<Point> targets;
  std::vector<Station> stations;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Shape-metric distance: Euclidean for disks, L-infinity for squares.
double CoverageDistance(CoverageShape shape, Point sensor, Point target);

struct SensorPlacement {
  int station = 0;
  Point center;

  friend bool operator==(const SensorPlacement&, const SensorPlacement&) = default;
};

struct Solution {
  std::vector<int> opened;  // sorted ascending, station indices of the input
  std::vector<SensorPlacement> sensors;
  double opening_cost = 0.0;
  double moving_cost = 0.0;
  double total_cost = 0.0;
};

// Fills opening_cost, moving_cost and total_cost from scratch.
void RecomputeCosts(const Instance& inst, Solution& sol);

struct ValidationReport {
  bool feasible = false;
  std::vector<int> uncovered_targets;
  int covered_count = 0;
  double recomputed_total = 0.0;
  // Human-readable reasons for infeasibility other than coverage.
  std::vector<std::string> problems;
};

// Coverage uses the instance's shape metric with tolerance kGeomTol. The
// solution is feasible iff at least `required_coverage` (default: all)
// targets are covered, every station index is valid, and every sensor comes
// from an opened station.
ValidationReport ValidateSolution(const Instance& inst, const Solution& sol,
                                  std::optional<int> required_coverage = std::nullopt);

// Malformed or out-of-contract input. The message starts with the JSON path
// of the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

Solution ParseSolution(std::string_view text);
std::string SerializeSolution(const Solution& sol);

// Structural checks shared by the parser and the solvers: positive finite
// radius, finite coordinates, nonnegative finite costs.
void CheckInstance(const Instance& inst);

bool IsLineInstance(const Instance& inst);

// Mirrors every station into the closed upper half-plane. Targets must lie
// on y = 0; throws std::invalid_argument otherwise. Optimal cost is
// unchanged.
Instance ReflectInstance(const Instance& inst);

enum class InstanceKind { kLine, kPlanar };

struct GeneratorParams {
  InstanceKind kind = InstanceKind::kLine;
  int n = 5;
  int m = 2;
  double radius = 1.0;
  double extent = 20.0;
  std::pair<double, double> cost_range{0.0, 5.0};
  std::optional<double> min_station_target_dist;
  CoverageShape shape = CoverageShape::kDisk;
};

// Thrown by Generate when rejection sampling cannot satisfy the parameters.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic for a fixed seed. Line instances have targets on y = 0 sorted
// by x and stations in [0,extent] x [-extent,extent]; planar instances place
// everything in [0,extent]^2.
Instance Generate(const GeneratorParams& params, std::uint64_t seed);

}  // namespace movecover

#endif  // MOVECOVER_INSTANCE_H_
