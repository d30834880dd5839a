"""Closed-form tropical optimization and minimax Chebyshev location."""

import json

from ._core import (
    DimensionError,
    DomainError,
    GridGuardError,
    ParseError,
    PreconditionError,
    Semifield,
    __version__,
    brute_force_min,
    build_pq,
    chebyshev_distance,
    objective,
    render_svg,
    solve_box_constrained,
    solve_general,
    solve_linear_constrained,
    solve_location,
    solve_unconstrained,
)
from ._core import solve_problem_json as _solve_problem_json


def solve_problem(problem, epsilon=None):
    """Solve a problem given as a dict (problem-file schema); returns the report dict."""
    text = problem if isinstance(problem, str) else json.dumps(problem)
    return json.loads(_solve_problem_json(text, epsilon))


__all__ = [
    "DimensionError",
    "DomainError",
    "GridGuardError",
    "ParseError",
    "PreconditionError",
    "Semifield",
    "brute_force_min",
    "build_pq",
    "chebyshev_distance",
    "objective",
    "render_svg",
    "solve_box_constrained",
    "solve_general",
    "solve_linear_constrained",
    "solve_location",
    "solve_problem",
    "solve_unconstrained",
]
