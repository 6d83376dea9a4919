"""Sensor deployment minimizing station opening cost plus sensor moving distance."""

from ._core import (
    CoverageShape,
    GeneratorError,
    InfeasibleError,
    Instance,
    OracleGuardError,
    ParseError,
    PlanarResult,
    Point,
    SensorPlacement,
    Solution,
    Station,
    UflSolution,
    ValidationReport,
    circle_pair_intersections,
    covering_grid_circles,
    generate,
    hex_center_of,
    oracle_general,
    oracle_line,
    oracle_partial,
    parse_instance,
    parse_solution,
    reflect_instance,
    render_svg,
    separated_lower_bound,
    serialize_instance,
    serialize_solution,
    solve_line_exact,
    solve_line_general,
    solve_line_partial,
    solve_planar_approx,
    ufl_exact,
    ufl_greedy,
    validate_solution,
)

__version__ = "0.1.0"
