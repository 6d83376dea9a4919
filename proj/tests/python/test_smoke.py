# Copyright 2026 The movecover Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import movecover as mc

CENTERED = '{"radius":1,"targets":[{"x":0,"y":0},{"x":10,"y":0}],"stations":[{"x":5,"y":0,"cost":2}]}'
RAISED = ('{"radius":1,"targets":[{"x":0,"y":0},{"x":10,"y":0}],'
      '"stations":[{"x":0,"y":2,"cost":1},{"x":10,"y":2,"cost":1}]}')
CLUSTER = ('{"radius":1,"targets":[{"x":0.2,"y":0.1},{"x":0.3,"y":-0.2}],'
      '"stations":[{"x":30,"y":0,"cost":5},{"x":50,"y":0,"cost":1}]}')


def test_line_solvers_on_examples():
    e1 = mc.parse_instance(CENTERED)
    e2 = mc.parse_instance(RAISED)
    assert mc.solve_line_exact(e1).total_cost == pytest.approx(10.0)
    assert mc.solve_line_exact(e2).total_cost == pytest.approx(6.0)
    assert mc.solve_line_partial(e1, 1).total_cost == pytest.approx(6.0)
    assert mc.solve_line_general(e2).total_cost == pytest.approx(4.0)
    assert mc.oracle_line(e1).total_cost == pytest.approx(10.0)
    assert mc.oracle_partial(e1, 1).total_cost == pytest.approx(6.0)
    assert mc.oracle_general(e2).total_cost == pytest.approx(4.0)


def test_solution_fields_and_validation():
    e1 = mc.parse_instance(CENTERED)
    sol = mc.solve_line_exact(e1)
    assert sol.opened == [0]
    assert [(s.station, s.center.x) for s in sol.sensors] == [(0, 1.0), (0, 9.0)]
    report = mc.validate_solution(e1, sol)
    assert report.feasible
    assert report.recomputed_total == pytest.approx(10.0)
    sol.sensors = sol.sensors[:1]
    report = mc.validate_solution(e1, sol)
    assert not report.feasible
    assert report.uncovered_targets == [1]
    assert mc.validate_solution(e1, sol, 1).feasible


def test_planar_approx():
    e3 = mc.parse_instance(CLUSTER)
    res = mc.solve_planar_approx(e3)
    assert res.solution.total_cost == pytest.approx(35.0)
    assert res.token_count == 1
    assert res.distance_assumption_holds
    assert res.guarantee_factor == pytest.approx(6.0)
    greedy = mc.solve_planar_approx(e3, backend="greedy")
    assert greedy.solution.total_cost >= res.solution.total_cost - 1e-9


def test_json_round_trip_and_generator():
    inst = mc.generate(kind="line", n=5, m=2, radius=1.0, seed=7)
    assert inst == mc.generate(kind="line", n=5, m=2, radius=1.0, seed=7)
    assert mc.parse_instance(mc.serialize_instance(inst)) == inst
    xs = [t.x for t in inst.targets]
    assert xs == sorted(xs)
    sol = mc.solve_line_exact(inst)
    back = mc.parse_solution(mc.serialize_solution(sol))
    assert back.total_cost == pytest.approx(sol.total_cost)


def test_errors_map_to_python_exceptions():
    with pytest.raises(mc.ParseError, match="radius"):
        mc.parse_instance('{"radius":-1,"targets":[],"stations":[]}')
    with pytest.raises(ValueError):
        mc.solve_line_partial(mc.parse_instance(CENTERED), 3)
    big = mc.generate(kind="line", n=12, m=2, seed=1)
    with pytest.raises(mc.OracleGuardError):
        mc.oracle_line(big)


def test_geometry_and_ufl():
    pts = mc.circle_pair_intersections(mc.Point(0, 0), mc.Point(1.5, 0), 1.0)
    assert len(pts) == 2
    assert abs(pts[0].y) == pytest.approx(math.sqrt(0.4375))
    c = mc.hex_center_of(mc.Point(0.9, 0.8), 1.0)
    assert (c.x, c.y) == pytest.approx((math.sqrt(3) / 2, 1.5))
    assert len(mc.covering_grid_circles(mc.Point(0.3, 0.4), 1.0)) <= 5
    exact = mc.ufl_exact([10.0, 1.0], [[1.0, 1.0], [2.0, 2.0]])
    greedy = mc.ufl_greedy([10.0, 1.0], [[1.0, 1.0], [2.0, 2.0]])
    assert exact.total == pytest.approx(5.0)
    assert greedy.total == pytest.approx(5.0)
    assert exact.opened == [1]


def test_reflect_and_render():
    inst = mc.parse_instance(CENTERED)
    inst.stations = [mc.Station(5, -7, 2)]
    refl = mc.reflect_instance(inst)
    assert refl.stations[0].position.y == 7
    assert mc.solve_line_exact(refl).total_cost == pytest.approx(mc.solve_line_exact(inst).total_cost)
    svg = mc.render_svg(mc.parse_instance(CENTERED), mc.solve_line_exact(mc.parse_instance(CENTERED)))
    assert svg.count('<circle class="sensor"') == 2
