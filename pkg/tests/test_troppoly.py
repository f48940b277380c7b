from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropfloor.hull import DegenerateConfiguration, upper_hull
from tropfloor.troppoly import (PolynomialError, TropicalPolynomial, dual_subdivision, honeycomb_height,
                                is_primitive, normalized_volume, parse_polynomial, polynomial_from_heights,
                                restrict_to_level, simplex_points)


def _shoelace2(pts):
    """Twice the area of a 2D point set's convex hull, via gift wrapping."""
    pts = sorted(set(pts))
    if len(pts) < 3:
        return 0

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    hull = []
    for seq in (pts, pts[::-1]):
        part = []
        for p in seq:
            while len(part) >= 2 and cross(part[-2], part[-1], p) <= 0:
                part.pop()
            part.append(p)
        hull += part[:-1]
    return abs(sum(hull[i][0] * hull[i - 1][1] - hull[i - 1][0] * hull[i][1] for i in range(len(hull))))


def test_parse_rejects_bad_documents():
    with pytest.raises(PolynomialError, match="outside simplex"):
        parse_polynomial({"dim": 2, "degree": 2, "terms": [{"e": [3, 0], "c": "1"}]})
    with pytest.raises(PolynomialError, match="duplicate"):
        parse_polynomial({"dim": 2, "degree": 1, "terms": [{"e": [1, 0], "c": "1"}, {"e": [1, 0], "c": "2"}]})
    with pytest.raises(PolynomialError, match="empty"):
        parse_polynomial({"dim": 2, "degree": 1, "terms": []})
    with pytest.raises(PolynomialError):
        parse_polynomial({"dim": 2, "degree": 1, "terms": [{"e": [1, 0], "c": "1/0"}]})


def test_roundtrip_keeps_exact_rationals():
    f = TropicalPolynomial(2, 1, {(0, 0): Fraction(1, 3), (1, 0): Fraction(-2, 7), (0, 1): Fraction(0)})
    assert parse_polynomial(f.to_json()) == f


def test_evaluate_reports_ties():
    f = polynomial_from_heights(2, 1, lambda a: 0)
    assert f.evaluate((0, 0)) == (0, frozenset(simplex_points(2, 1)))
    assert f.evaluate((1, -1))[1] == {(1, 0)}


def test_single_term_is_degenerate():
    with pytest.raises(DegenerateConfiguration):
        dual_subdivision(TropicalPolynomial(2, 2, {(1, 1): Fraction(0)}))


@pytest.mark.parametrize("n,d,tops", [(2, 3, 9), (2, 4, 16), (3, 2, 8), (3, 3, 27)])
def test_honeycomb_is_unimodular(n, d, tops):
    S = dual_subdivision(polynomial_from_heights(n, d, honeycomb_height))
    assert is_primitive(S) == (True, None)
    assert len(S.top) == tops


def test_flat_lift_is_not_primitive():
    ok, bad = is_primitive(dual_subdivision(polynomial_from_heights(2, 2, lambda a: 0)))
    assert not ok and len(bad) == 6


def test_restrict_to_level():
    f = polynomial_from_heights(3, 2, honeycomb_height)
    g = restrict_to_level(f, 2)
    assert g.dim == 2 and g.degree == 2 and len(g.terms) == 6
    with pytest.raises(PolynomialError):
        restrict_to_level(f, 0)


heights = st.integers(-20, 20)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_lifted_cells_tile_the_plane_simplex(d, data):
    pts = simplex_points(2, d)
    hs = data.draw(st.lists(heights, min_size=len(pts), max_size=len(pts)))
    cells = upper_hull(pts, hs)
    assert sum(_shoelace2([pts[i] for i in c.points]) for c in cells) == d * d


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.data())
def test_lifted_cells_tile_the_space_simplex(d, data):
    pts = simplex_points(3, d)
    hs = data.draw(st.lists(heights, min_size=len(pts), max_size=len(pts)))
    cells = upper_hull(pts, hs)
    assert sum(normalized_volume([pts[i] for i in c.points]) for c in cells) == d ** 3


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=10, unique=True))
def test_normalized_volume_matches_shoelace(pts):
    if _shoelace2(pts) == 0:
        return
    assert normalized_volume(pts) == _shoelace2(pts)
