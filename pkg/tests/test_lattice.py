from itertools import combinations
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from tropfloor.lattice import (det, hermite_basis, lattice_index, matmul, primitive, rank,
                               smith_normal_form, solve_int, sparse_elementary_divisors, wedge)


def _int_det(m):
    return int(det(m)) if m else 1


def determinantal_divisors(m):
    """Invariant factors as ratios of gcds of k x k minors."""
    nr, nc = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, _int_det([[m[i][j] for j in cs] for i in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


matrices = st.integers(1, 8).flatmap(lambda r: st.integers(1, 8).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_matches_minor_gcd_oracle(m):
    res = smith_normal_form(m)
    assert list(res.diagonal) == determinantal_divisors(m)
    assert abs(_int_det(res.U)) == 1 and abs(_int_det(res.V)) == 1
    D = matmul(matmul(res.U, m), res.V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (res.diagonal[i] if i == j and i < res.rank else 0)
    for a, b in zip(res.diagonal, res.diagonal[1:]):
        assert b % a == 0


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_sparse_divisors_agree_with_dense(m):
    rows = [{j: x for j, x in enumerate(r) if x} for r in m]
    assert sorted(d for d in sparse_elementary_divisors(rows) if d) == determinantal_divisors(m)


def test_snf_small_cases():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[2, 4], [4, 8]]).diagonal == (2,)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=5).filter(any))
def test_primitive_divides_out_content(v):
    p = primitive(v)
    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1
    k = next(x // y for x, y in zip(v, p) if y)
    assert k > 0 and [k * x for x in p] == v


def test_hermite_basis_spans_saturated_rows():
    B = hermite_basis([[2, 0, 0], [0, 2, 0], [1, 1, 0]], 3)
    assert rank(B) == 2
    assert solve_int([list(c) for c in B], [1, 1, 0]) is not None
    assert lattice_index([[1, 0], [0, 1]], [[2, 0], [0, 3]]) == 6


def test_wedge_is_alternating():
    assert wedge([[1, 0, 0], [0, 1, 0]], 3) == [-x for x in wedge([[0, 1, 0], [1, 0, 0]], 3)]
    assert not any(wedge([[1, 2, 3], [2, 4, 6]], 3))
