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

#include "movecover/planar.h"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace movecover {

std::string_view BackendName(UflBackend backend) {
  return backend == UflBackend::kGreedy ? "greedy" : "exact";
}

TokenMap Tokenize(const Instance& inst, Point grid_origin) {
  CheckInstance(inst);
  TokenMap tm;
  tm.shape = inst.shape;
  tm.radius = inst.radius;
  tm.origin = grid_origin;
  tm.token_of.resize(inst.targets.size());

  const HexGrid hex(inst.radius, grid_origin);
  const double cell = 2.0 * inst.radius;
  std::map<std::pair<long long, long long>, int> seen;
  for (size_t t = 0; t < inst.targets.size(); ++t) {
    const Point p = inst.targets[t];
    std::pair<long long, long long> key;
    Point center;
    if (inst.shape == CoverageShape::kDisk) {
      const HexIndex h = hex.IndexOf(p);
      key = {h.q, h.w};
      center = hex.Center(h);
    } else {
      const auto ix = static_cast<long long>(std::floor((p.x - grid_origin.x) / cell));
      const auto iy = static_cast<long long>(std::floor((p.y - grid_origin.y) / cell));
      key = {ix, iy};
      center = {grid_origin.x + (static_cast<double>(ix) + 0.5) * cell,
                grid_origin.y + (static_cast<double>(iy) + 0.5) * cell};
    }
    auto [it, inserted] = seen.emplace(key, static_cast<int>(tm.tokens.size()));
    if (inserted) {
      tm.tokens.push_back(center);
      tm.members.emplace_back();
    }
    tm.members[it->second].push_back(static_cast<int>(t));
    tm.token_of[t] = it->second;
  }
  return tm;
}

UflInstance BuildUfl(const Instance& inst, const TokenMap& tokens) {
  std::vector<double> opening;
  opening.reserve(inst.stations.size());
  for (const Station& s : inst.stations) opening.push_back(s.opening_cost);
  UflInstance ufl(std::move(opening), static_cast<int>(tokens.tokens.size()));
  for (size_t f = 0; f < inst.stations.size(); ++f) {
    for (size_t c = 0; c < tokens.tokens.size(); ++c) {
      ufl.set_connection(static_cast<int>(f), static_cast<int>(c),
                         Distance(inst.stations[f].position, tokens.tokens[c]));
    }
  }
  return ufl;
}

PlanarResult SolvePlanarApprox(const Instance& inst, const PlanarOptions& options) {
  CheckInstance(inst);
  if (inst.targets.empty()) throw std::invalid_argument("instance has no targets");
  if (inst.stations.empty()) throw std::invalid_argument("instance has no stations");

  const TokenMap tm = Tokenize(inst, options.grid_origin);
  const UflInstance ufl = BuildUfl(inst, tm);
  const UflSolution assignment = options.backend == UflBackend::kExact
                                     ? UflExact(ufl, options.exact_facility_limit)
                                     : UflGreedy(ufl);

  PlanarResult result;
  result.token_count = static_cast<int>(tm.tokens.size());
  result.solution.opened = assignment.opened;
  for (size_t c = 0; c < tm.tokens.size(); ++c) {
    result.solution.sensors.push_back({assignment.assignment[c], tm.tokens[c]});
  }
  RecomputeCosts(inst, result.solution);

  const double rho = options.backend == UflBackend::kExact ? 1.0 : kGreedyUflFactor;
  const bool square = inst.shape == CoverageShape::kSquare;
  result.guarantee_factor = (square ? 5.0 : 6.0) * rho;
  result.required_separation = (square ? 8.0 : 10.0) * inst.radius;
  result.min_station_target_distance = std::numeric_limits<double>::infinity();
  for (const Station& s : inst.stations) {
    for (Point t : inst.targets) {
      result.min_station_target_distance =
          std::min(result.min_station_target_distance, Distance(s.position, t));
    }
  }
  result.distance_assumption_holds =
      result.min_station_target_distance > result.required_separation;
  return result;
}

std::optional<double> SeparatedLowerBound(const Instance& inst, int max_facilities) {
  CheckInstance(inst);
  if (inst.shape != CoverageShape::kDisk) return std::nullopt;
  const int n = static_cast<int>(inst.targets.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (Distance(inst.targets[a], inst.targets[b]) <= 2.0 * inst.radius) return std::nullopt;
    }
  }
  std::vector<double> opening;
  for (const Station& s : inst.stations) opening.push_back(s.opening_cost);
  UflInstance ufl(std::move(opening), n);
  for (size_t f = 0; f < inst.stations.size(); ++f) {
    for (int c = 0; c < n; ++c) {
      ufl.set_connection(static_cast<int>(f), c,
                         std::max(0.0, Distance(inst.stations[f].position, inst.targets[c]) -
                                           inst.radius));
    }
  }
  return UflExact(ufl, max_facilities).total;
}

}  // namespace movecover
