import json
import math
import pathlib

import pytest

import tropopt

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"

P = [3, 14]
Q = [-12, -4]
G = [2, -8]
H = [6, 8]
B = [[0, -4], [-8, -6]]
POINTS = [[-7, 12], [2, 10], [-10, 3], [-4, 4], [-4, -3]]
WEIGHTS = [2, 1, 2, 1, 1]


def test_unconstrained():
    sol = tropopt.solve_unconstrained(P, Q)
    assert sol["theta"] == 9
    assert sol["x_lo"] == [-6, 5]
    assert sol["x_hi"] == [-3, 5]


def test_general_and_location_agree():
    sol = tropopt.solve_general(P, Q, G, H, B)
    loc = tropopt.solve_location(POINTS, WEIGHTS, B, G, H)
    assert sol["theta"] == loc["theta"] == 14
    assert sol["x_lo"] == loc["x_lo"] == [2, 0]
    assert sol["x_hi"] == loc["x_hi"] == [2, 6]


def test_brute_force_matches_closed_form():
    sol = tropopt.solve_box_constrained(P, Q, G, H)
    minimum, argmins = tropopt.brute_force_min(P, Q, G, H, lower=G, upper=H, step=0.5)
    assert minimum == sol["theta"]
    assert all(tropopt.objective(P, Q, x) == minimum for x in argmins)


def test_min_plus_mirrors_max_plus():
    neg = lambda v: [-a for a in v]
    sol = tropopt.solve_unconstrained(neg(P), neg(Q), semifield="min-plus")
    assert sol["theta"] == -9


def test_infeasible_cycle_reported():
    report = tropopt.solve_problem((DATA / "infeasible_cycle.json").read_text())
    assert report["status"] == "infeasible"
    assert report["reason"] == "TrExceedsOne"


def test_problem_dict_round_trip():
    doc = json.loads((DATA / "general.json").read_text())
    report = tropopt.solve_problem(doc)
    assert report["status"] == "optimal"
    assert report["theta"] == 14


def test_chebyshev_and_corners():
    assert tropopt.chebyshev_distance([0, 0], [3, -5]) == 5
    p, q = tropopt.build_pq(POINTS, WEIGHTS)
    assert p == [3, 14]
    assert q == [-12, -4]


def test_svg_render():
    svg = tropopt.render_svg((DATA / "general.json").read_text())
    assert "<svg" in svg
    assert 'points="2,-6 6,-2 6,8 4,8 2,6"' in svg


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        tropopt.solve_unconstrained([1.0], [math.nan])
    with pytest.raises(ValueError):
        tropopt.solve_problem('{"problem": "box"}')
    with pytest.raises(ValueError):
        tropopt.render_svg((DATA / "dimension4.json").read_text())
