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

#include "movecover/instance.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "json.hpp"

namespace movecover {

using json = nlohmann::json;

std::string_view ShapeName(CoverageShape shape) {
  return shape == CoverageShape::kSquare ? "square" : "disk";
}

double CoverageDistance(CoverageShape shape, Point sensor, Point target) {
  return shape == CoverageShape::kSquare ? ChebyshevDistance(sensor, target)
                                         : Distance(sensor, target);
}

void RecomputeCosts(const Instance& inst, Solution& sol) {
  sol.opening_cost = 0.0;
  for (int k : sol.opened) sol.opening_cost += inst.stations.at(k).opening_cost;
  sol.moving_cost = 0.0;
  for (const SensorPlacement& s : sol.sensors) {
    sol.moving_cost += Distance(inst.stations.at(s.station).position, s.center);
  }
  sol.total_cost = sol.opening_cost + sol.moving_cost;
}

ValidationReport ValidateSolution(const Instance& inst, const Solution& sol,
                                  std::optional<int> required_coverage) {
  ValidationReport report;
  const int m = static_cast<int>(inst.stations.size());
  std::set<int> opened;
  for (int k : sol.opened) {
    if (k < 0 || k >= m) {
      report.problems.push_back("opened station " + std::to_string(k) + " out of range");
      continue;
    }
    if (!opened.insert(k).second) {
      report.problems.push_back("station " + std::to_string(k) + " opened twice");
      continue;
    }
    report.recomputed_total += inst.stations[k].opening_cost;
  }
  std::vector<Point> centers;
  for (size_t s = 0; s < sol.sensors.size(); ++s) {
    const SensorPlacement& p = sol.sensors[s];
    if (p.station < 0 || p.station >= m) {
      report.problems.push_back("sensor " + std::to_string(s) + " emitted by unknown station");
      continue;
    }
    if (!opened.contains(p.station)) {
      report.problems.push_back("sensor " + std::to_string(s) + " emitted by closed station " +
                                std::to_string(p.station));
    }
    if (!IsFinite(p.center)) {
      report.problems.push_back("sensor " + std::to_string(s) + " has non-finite center");
      continue;
    }
    report.recomputed_total += Distance(inst.stations[p.station].position, p.center);
    centers.push_back(p.center);
  }

  for (size_t t = 0; t < inst.targets.size(); ++t) {
    const bool covered = std::any_of(centers.begin(), centers.end(), [&](Point c) {
      return CoverageDistance(inst.shape, c, inst.targets[t]) <= inst.radius + kGeomTol;
    });
    if (covered) {
      ++report.covered_count;
    } else {
      report.uncovered_targets.push_back(static_cast<int>(t));
    }
  }
  const int need = required_coverage.value_or(static_cast<int>(inst.targets.size()));
  report.feasible = report.problems.empty() && report.covered_count >= need;
  return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

const json& Field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key + ": missing field");
  return *it;
}

double Number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path + ": expected number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(path + ": non-finite number");
  return d;
}

int Integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected integer");
  return v.get<int>();
}

const json& Array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected array");
  return v;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("$: malformed JSON: ") + e.what());
  }
}

}  // namespace

void CheckInstance(const Instance& inst) {
  if (!std::isfinite(inst.radius) || !(inst.radius > 0.0)) {
    throw ParseError("$.radius: must be positive and finite");
  }
  for (size_t i = 0; i < inst.targets.size(); ++i) {
    if (!IsFinite(inst.targets[i])) {
      throw ParseError("$.targets[" + std::to_string(i) + "]: non-finite coordinate");
    }
  }
  for (size_t k = 0; k < inst.stations.size(); ++k) {
    const Station& s = inst.stations[k];
    const std::string path = "$.stations[" + std::to_string(k) + "]";
    if (!IsFinite(s.position)) throw ParseError(path + ": non-finite coordinate");
    if (!std::isfinite(s.opening_cost)) throw ParseError(path + ".cost: non-finite number");
    if (s.opening_cost < 0.0) throw ParseError(path + ".cost: must be nonnegative");
  }
}

Instance ParseInstance(std::string_view text) {
  const json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("$: expected object");
  Instance inst;
  inst.radius = Number(Field(doc, "radius", "$"), "$.radius");
  if (!(inst.radius > 0.0)) throw ParseError("$.radius: must be positive");
  if (auto it = doc.find("coverage"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("$.coverage: expected string");
    const auto name = it->get<std::string>();
    if (name == "disk") {
      inst.shape = CoverageShape::kDisk;
    } else if (name == "square") {
      inst.shape = CoverageShape::kSquare;
    } else {
      throw ParseError("$.coverage: expected \"disk\" or \"square\"");
    }
  }
  const json& targets = Array(Field(doc, "targets", "$"), "$.targets");
  for (size_t i = 0; i < targets.size(); ++i) {
    const std::string path = "$.targets[" + std::to_string(i) + "]";
    inst.targets.push_back({Number(Field(targets[i], "x", path), path + ".x"),
                            Number(Field(targets[i], "y", path), path + ".y")});
  }
  const json& stations = Array(Field(doc, "stations", "$"), "$.stations");
  for (size_t k = 0; k < stations.size(); ++k) {
    const std::string path = "$.stations[" + std::to_string(k) + "]";
    Station s;
    s.position = {Number(Field(stations[k], "x", path), path + ".x"),
                  Number(Field(stations[k], "y", path), path + ".y")};
    s.opening_cost = Number(Field(stations[k], "cost", path), path + ".cost");
    if (s.opening_cost < 0.0) throw ParseError(path + ".cost: must be nonnegative");
    inst.stations.push_back(s);
  }
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  json doc;
  doc["radius"] = inst.radius;
  doc["coverage"] = std::string(ShapeName(inst.shape));
  doc["targets"] = json::array();
  for (Point t : inst.targets) doc["targets"].push_back({{"x", t.x}, {"y", t.y}});
  doc["stations"] = json::array();
  for (const Station& s : inst.stations) {
    doc["stations"].push_back({{"x", s.position.x}, {"y", s.position.y}, {"cost", s.opening_cost}});
  }
  return doc.dump(2);
}

Solution ParseSolution(std::string_view text) {
  const json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("$: expected object");
  Solution sol;
  const json& opened = Array(Field(doc, "opened", "$"), "$.opened");
  for (size_t i = 0; i < opened.size(); ++i) {
    sol.opened.push_back(Integer(opened[i], "$.opened[" + std::to_string(i) + "]"));
  }
  const json& sensors = Array(Field(doc, "sensors", "$"), "$.sensors");
  for (size_t i = 0; i < sensors.size(); ++i) {
    const std::string path = "$.sensors[" + std::to_string(i) + "]";
    SensorPlacement s;
    s.station = Integer(Field(sensors[i], "station", path), path + ".station");
    s.center = {Number(Field(sensors[i], "x", path), path + ".x"),
                Number(Field(sensors[i], "y", path), path + ".y")};
    sol.sensors.push_back(s);
  }
  if (auto it = doc.find("cost"); it != doc.end()) {
    sol.opening_cost = Number(Field(*it, "opening", "$.cost"), "$.cost.opening");
    sol.moving_cost = Number(Field(*it, "moving", "$.cost"), "$.cost.moving");
    sol.total_cost = Number(Field(*it, "total", "$.cost"), "$.cost.total");
  }
  return sol;
}

std::string SerializeSolution(const Solution& sol) {
  json doc;
  doc["opened"] = sol.opened;
  doc["sensors"] = json::array();
  for (const SensorPlacement& s : sol.sensors) {
    doc["sensors"].push_back({{"station", s.station}, {"x", s.center.x}, {"y", s.center.y}});
  }
  doc["cost"] = {{"opening", sol.opening_cost}, {"moving", sol.moving_cost}, {"total", sol.total_cost}};
  return doc.dump(2);
}

// ---------------------------------------------------------------------------

bool IsLineInstance(const Instance& inst) {
  return std::all_of(inst.targets.begin(), inst.targets.end(),
                     [](Point t) { return std::abs(t.y) <= kLineTol; });
}

Instance ReflectInstance(const Instance& inst) {
  if (!IsLineInstance(inst)) {
    throw std::invalid_argument("reflection requires every target on the line y = 0");
  }
  Instance out = inst;
  for (Station& s : out.stations) s.position.y = std::abs(s.position.y);
  return out;
}

Instance Generate(const GeneratorParams& params, std::uint64_t seed) {
  if (params.n < 1 || params.m < 1) throw std::invalid_argument("n and m must be at least 1");
  if (!(params.radius > 0.0) || !(params.extent > 0.0)) {
    throw std::invalid_argument("radius and extent must be positive");
  }
  const auto [cost_lo, cost_hi] = params.cost_range;
  if (!(cost_lo >= 0.0) || !(cost_hi >= cost_lo)) {
    throw std::invalid_argument("cost range must satisfy 0 <= lo <= hi");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, params.extent);
  std::uniform_real_distribution<double> signed_coord(-params.extent, params.extent);
  std::uniform_real_distribution<double> cost(cost_lo, cost_hi);

  Instance inst;
  inst.radius = params.radius;
  inst.shape = params.shape;
  for (int i = 0; i < params.n; ++i) {
    if (params.kind == InstanceKind::kLine) {
      inst.targets.push_back({coord(rng), 0.0});
    } else {
      const double x = coord(rng);
      inst.targets.push_back({x, coord(rng)});
    }
  }
  if (params.kind == InstanceKind::kLine) {
    std::sort(inst.targets.begin(), inst.targets.end(),
              [](Point a, Point b) { return a.x < b.x; });
  }

  int rejections = 0;
  for (int k = 0; k < params.m; ++k) {
    while (true) {
      Station s;
      s.position.x = coord(rng);
      s.position.y = params.kind == InstanceKind::kLine ? signed_coord(rng) : coord(rng);
      s.opening_cost = cost(rng);
      const bool ok =
          !params.min_station_target_dist ||
          std::all_of(inst.targets.begin(), inst.targets.end(), [&](Point t) {
            return Distance(t, s.position) > *params.min_station_target_dist;
          });
      if (ok) {
        inst.stations.push_back(s);
        break;
      }
      if (++rejections >= 10000) {
        throw GeneratorError("no station placement satisfies the minimum station-target distance "
                             "after 10000 rejections");
      }
    }
  }
  return inst;
}

}  // namespace movecover
