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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "movecover/geometry.h"
#include "movecover/instance.h"
#include "movecover/line_solver.h"
#include "movecover/oracle.h"
#include "movecover/planar.h"
#include "movecover/svg.h"
#include "movecover/ufl.h"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace movecover;

namespace {

Point ToPoint(std::pair<double, double> p) { return {p.first, p.second}; }

UflInstance ToUfl(std::vector<double> opening, const std::vector<std::vector<double>>& conn) {
  return UflInstance(std::move(opening), conn);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sensor deployment minimizing opening plus moving cost";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<OracleGuardError>(m, "OracleGuardError", PyExc_RuntimeError);
  py::register_exception<GeneratorError>(m, "GeneratorError", PyExc_RuntimeError);

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Point{x, y}; }), "x"_a, "y"_a)
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::enum_<CoverageShape>(m, "CoverageShape")
      .value("DISK", CoverageShape::kDisk)
      .value("SQUARE", CoverageShape::kSquare);

  py::class_<Station>(m, "Station")
      .def(py::init<>())
      .def(py::init([](double x, double y, double cost) { return Station{{x, y}, cost}; }),
           "x"_a, "y"_a, "cost"_a)
      .def_readwrite("position", &Station::position)
      .def_readwrite("opening_cost", &Station::opening_cost);

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def_readwrite("radius", &Instance::radius)
      .def_readwrite("shape", &Instance::shape)
      .def_readwrite("targets", &Instance::targets)
      .def_readwrite("stations", &Instance::stations)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  py::class_<SensorPlacement>(m, "SensorPlacement")
      .def_readwrite("station", &SensorPlacement::station)
      .def_readwrite("center", &SensorPlacement::center);

  py::class_<Solution>(m, "Solution")
      .def(py::init<>())
      .def_readwrite("opened", &Solution::opened)
      .def_readwrite("sensors", &Solution::sensors)
      .def_readwrite("opening_cost", &Solution::opening_cost)
      .def_readwrite("moving_cost", &Solution::moving_cost)
      .def_readwrite("total_cost", &Solution::total_cost);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("feasible", &ValidationReport::feasible)
      .def_readonly("uncovered_targets", &ValidationReport::uncovered_targets)
      .def_readonly("covered_count", &ValidationReport::covered_count)
      .def_readonly("recomputed_total", &ValidationReport::recomputed_total)
      .def_readonly("problems", &ValidationReport::problems);

  py::class_<PlanarResult>(m, "PlanarResult")
      .def_readonly("solution", &PlanarResult::solution)
      .def_readonly("token_count", &PlanarResult::token_count)
      .def_readonly("guarantee_factor", &PlanarResult::guarantee_factor)
      .def_readonly("required_separation", &PlanarResult::required_separation)
      .def_readonly("min_station_target_distance", &PlanarResult::min_station_target_distance)
      .def_readonly("distance_assumption_holds", &PlanarResult::distance_assumption_holds);

  py::class_<UflSolution>(m, "UflSolution")
      .def_readonly("opened", &UflSolution::opened)
      .def_readonly("assignment", &UflSolution::assignment)
      .def_readonly("total", &UflSolution::total);

  m.def("parse_instance", [](const std::string& s) { return ParseInstance(s); }, "text"_a);
  m.def("serialize_instance", &SerializeInstance, "instance"_a);
  m.def("parse_solution", [](const std::string& s) { return ParseSolution(s); }, "text"_a);
  m.def("serialize_solution", &SerializeSolution, "solution"_a);
  m.def("reflect_instance", &ReflectInstance, "instance"_a);

  m.def(
      "generate",
      [](const std::string& kind, int n, int m_, double radius, double extent,
         std::pair<double, double> cost_range, std::optional<double> min_station_target_dist,
         const std::string& shape, std::uint64_t seed) {
        GeneratorParams p;
        p.kind = kind == "planar" ? InstanceKind::kPlanar : InstanceKind::kLine;
        p.n = n;
        p.m = m_;
        p.radius = radius;
        p.extent = extent;
        p.cost_range = cost_range;
        p.min_station_target_dist = min_station_target_dist;
        p.shape = shape == "square" ? CoverageShape::kSquare : CoverageShape::kDisk;
        return Generate(p, seed);
      },
      "kind"_a = "line", "n"_a = 5, "m"_a = 2, "radius"_a = 1.0, "extent"_a = 20.0,
      "cost_range"_a = std::pair<double, double>{0.0, 5.0}, "min_station_target_dist"_a = py::none(),
      "shape"_a = "disk", "seed"_a = 0);

  m.def("validate_solution", &ValidateSolution, "instance"_a, "solution"_a,
        "required_coverage"_a = py::none());

  m.def("solve_line_exact", &SolveLineExact, "instance"_a);
  m.def("solve_line_partial", &SolveLinePartial, "instance"_a, "required"_a);
  m.def("solve_line_general", &SolveLineGeneral, "instance"_a);
  m.def(
      "solve_planar_approx",
      [](const Instance& inst, const std::string& backend, std::pair<double, double> origin) {
        PlanarOptions opt;
        opt.backend = backend == "greedy" ? UflBackend::kGreedy : UflBackend::kExact;
        opt.grid_origin = ToPoint(origin);
        return SolvePlanarApprox(inst, opt);
      },
      "instance"_a, "backend"_a = "exact", "grid_origin"_a = std::pair<double, double>{0.0, 0.0});
  m.def("separated_lower_bound", [](const Instance& inst) { return SeparatedLowerBound(inst); },
        "instance"_a);

  m.def("oracle_line", [](const Instance& inst) { return OracleLine(inst); }, "instance"_a);
  m.def("oracle_partial", [](const Instance& inst, int k) { return OraclePartial(inst, k); },
        "instance"_a, "required"_a);
  m.def("oracle_general", [](const Instance& inst) { return OracleGeneral(inst); }, "instance"_a);

  m.def("render_svg", &RenderSvg, "instance"_a, "solution"_a);

  m.def("circle_pair_intersections", &CirclePairIntersections, "a"_a, "b"_a, "r"_a);
  m.def(
      "hex_center_of",
      [](Point p, double side, std::pair<double, double> origin) {
        return HexCenterOf(p, HexGrid(side, ToPoint(origin)));
      },
      "p"_a, "side"_a, "origin"_a = std::pair<double, double>{0.0, 0.0});
  m.def(
      "covering_grid_circles",
      [](Point center, double radius, std::pair<double, double> origin) {
        return CoveringGridCircles(Disk{center, radius}, HexGrid(radius, ToPoint(origin)));
      },
      "center"_a, "radius"_a, "origin"_a = std::pair<double, double>{0.0, 0.0});

  m.def(
      "ufl_exact",
      [](std::vector<double> opening, const std::vector<std::vector<double>>& conn) {
        return UflExact(ToUfl(std::move(opening), conn));
      },
      "opening_costs"_a, "connection"_a);
  m.def(
      "ufl_greedy",
      [](std::vector<double> opening, const std::vector<std::vector<double>>& conn) {
        return UflGreedy(ToUfl(std::move(opening), conn));
      },
      "opening_costs"_a, "connection"_a);
}
