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

// Grid-rounding approximation for targets anywhere in the plane.
//
// Targets are snapped to the center of the grid cell containing them (hexagons
// of side r for disk coverage, squares of side 2r for square coverage). Each
// occupied cell becomes one client of a facility-location instance whose
// facilities are the base stations; every client is then served by one
// sensor sitting exactly on the cell center.
//
// With an exact facility-location backend the cost is within 6x of optimal
// whenever every station is more than 10r from every target; a rho-approximate
// backend multiplies that by rho.

#ifndef MOVECOVER_PLANAR_H_
#define MOVECOVER_PLANAR_H_

#include <optional>
#include <string_view>
#include <vector>

#include "movecover/geometry.h"
#include "movecover/instance.h"
#include "movecover/ufl.h"

namespace movecover {

struct TokenMap {
  CoverageShape shape = CoverageShape::kDisk;
  double radius = 1.0;
  Point origin;
  std::vector<Point> tokens;                // distinct occupied cell centers
  std::vector<std::vector<int>> members;    // token -> target indices
  std::vector<int> token_of;                // target -> token
};

// Tokens appear in order of their first member target.
TokenMap Tokenize(const Instance& inst, Point grid_origin = {});

// Facilities are the stations, clients the tokens, connection costs the
// Euclidean station-token distances.
UflInstance BuildUfl(const Instance& inst, const TokenMap& tokens);

enum class UflBackend { kExact, kGreedy };

std::string_view BackendName(UflBackend backend);

struct PlanarOptions {
  UflBackend backend = UflBackend::kExact;
  Point grid_origin;
  int exact_facility_limit = kDefaultUflExactLimit;
};

struct PlanarResult {
  Solution solution;
  int token_count = 0;
  // Worst-case ratio the analysis promises for this shape and backend when
  // the distance assumption holds: 6*rho for disks, 5*rho for squares.
  double guarantee_factor = 0.0;
  // Minimum station-target separation the guarantee needs (10r for disks,
  // 8r for squares), and whether the input satisfies it strictly.
  double required_separation = 0.0;
  double min_station_target_distance = 0.0;
  bool distance_assumption_holds = false;
};

// Never refuses an input; when the distance assumption fails the guarantee
// is reported as void through `distance_assumption_holds`.
PlanarResult SolvePlanarApprox(const Instance& inst, const PlanarOptions& options = {});

// Lower bound on the optimum for instances whose targets are pairwise more
// than 2r apart: then no sensor covers two targets, and each target's sensor
// travels at least (distance to its station) - r. Solved exactly as facility
// location over the raw targets. Returns nullopt when targets are not
// separated (or for square coverage, where the bound is not derived).
std::optional<double> SeparatedLowerBound(const Instance& inst,
                                          int max_facilities = kDefaultUflExactLimit);

}  // namespace movecover

#endif  // MOVECOVER_PLANAR_H_
