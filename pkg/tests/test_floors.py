from fractions import Fraction

import pytest

from tropfloor.chains import boundary, chain_along, is_cycle, validate_chain
from tropfloor.floors import (FloorPlanError, FloorSurface, PlaneCurve, basis_cycles, boundary_curve_count,
                              curve_breaking_points, curve_intersections, floor_decomposition, floor_plan,
                              is_floor_decomposed, make_floor_plan, open_piece_homology, parse_floor_plan,
                              surface_from_floor_plan)
from tropfloor.homology import chain_complex, homology_from_complex
from tropfloor.troppoly import (TropicalPolynomial, dual_subdivision, honeycomb_height, is_primitive,
                                polynomial_from_heights)

from _surfaces import floor_pair, plan, surface


def _line(c0=0, c1=0, c2=0):
    return TropicalPolynomial(2, 1, {(0, 0): Fraction(c0), (1, 0): Fraction(c1), (0, 1): Fraction(c2)})


# a primitive quadric whose subdivision has an edge from level 0 to level 2
SKEW = {(0, 0, 0): -6, (0, 0, 1): 0, (0, 0, 2): -8, (0, 1, 0): -2, (0, 1, 1): -15, (0, 2, 0): -26,
        (1, 0, 0): -12, (1, 0, 1): -13, (1, 1, 0): -6, (2, 0, 0): -27}


def test_floor_decomposition_detection():
    assert is_floor_decomposed(polynomial_from_heights(3, 2, honeycomb_height))
    f = polynomial_from_heights(3, 2, lambda a: SKEW[a])
    assert is_primitive(dual_subdivision(f))[0]
    assert not is_floor_decomposed(f)
    with pytest.raises(FloorPlanError):
        floor_plan(f)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_synthesized_surface_is_floor_decomposed(d):
    X = surface(d)
    assert is_floor_decomposed(X.poly)
    assert len(floor_decomposition(X).floors) == d


def test_floor_plan_roundtrip():
    P = plan(3)
    Q = parse_floor_plan(P.to_json())
    assert [c.poly for c in Q.curves] == [c.poly for c in P.curves]
    assert floor_plan(surface(3).poly).intersections == P.intersections


def test_two_lines_meet_once():
    C, D = PlaneCurve(_line()), PlaneCurve(_line(0, Fraction(1, 3), Fraction(-1, 2)))
    pts = curve_intersections(C, D)
    assert len(pts) == 1


def test_overlapping_lines_are_rejected():
    with pytest.raises(FloorPlanError):
        curve_intersections(PlaneCurve(_line()), PlaneCurve(_line(0, 1, 0)))


def test_plan_rejects_wrong_degrees():
    with pytest.raises(FloorPlanError):
        make_floor_plan([polynomial_from_heights(2, 2, honeycomb_height)])


def test_supplied_heights_are_checked():
    with pytest.raises(FloorPlanError):
        surface_from_floor_plan(plan(2), [0, 0])


@pytest.mark.parametrize("d", [2, 3, 4])
def test_consecutive_curves_meet_in_d_times_d_minus_one_points(d):
    P = plan(d)
    assert [len(P.intersections[i]) for i in range(1, d)] == [i * (i + 1) for i in range(1, d)]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_breaking_points_match_genus(d):
    C = plan(d).curves[d - 1]
    g = (d - 1) * (d - 2) // 2
    B = curve_breaking_points(C)
    assert C.genus() == g and len(B.points) == len(B.loops) == g
    for loop in B.loops:
        assert loop[0] == loop[-1]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_floor_pair_homology(d):
    Y = floor_pair(d)
    C = chain_complex(Y, 1)
    assert homology_from_complex(C, 1).rank == d * (d - 1) + 1
    assert homology_from_complex(C, 2).rank == 0
    assert boundary_curve_count(Y) == 5


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_basis_cycles_are_closed_and_well_framed(d):
    X = surface(d)
    B = basis_cycles(X)
    b2 = (d - 1) * (d - 2) * (d - 3) // 6
    assert {k: len(v) for k, v in B.items()} == {"A": (d ** 3 - 4 * d + 3) // 3, "gamma": b2,
                                                 "beta": b2, "v": 1}
    for chains in B.values():
        for c in chains:
            assert is_cycle(c, X), c.label
            assert validate_chain(c, X) == [], c.label


def test_open_segment_is_not_a_cycle():
    X = surface(2)
    FS = FloorSurface(X)
    x = FS.intersections(1)[0]
    c = chain_along(X, [FS.lift(1, x), FS.lift(0, x)], (0, 0, 1))
    assert not is_cycle(c, X)


def test_top_ray_framing_dies_at_infinity():
    X = surface(2)
    FS = FloorSurface(X)
    y = FS.lift(0, FS.curves[1].vertices[0])
    ray = chain_along(X, [y], (-1, 0, 0), ray=(-1, 0, 0))
    keys = [k for k in boundary(ray, X) if k[0]]
    assert keys == []


@pytest.mark.parametrize("d", [2, 3, 4])
def test_open_piece_homology(d):
    X = surface(d)
    H = open_piece_homology(X)
    assert H["upper"][0] == 0 and H["lower"][0] == 0
    for i, (h10, h11) in H["walls"].items():
        assert h11 == plan(d).curves[i - 1].genus()
