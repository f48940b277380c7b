from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tropfloor.chains import FramedCell, is_cycle
from tropfloor.floors import FloorSurface, exceptional_cycles, generic_center, lifted_line
from tropfloor.intersect import (STAR, IntersectionForm, Weighted1Cycle, assemble_form, bent_fibre,
                                 check_balanced, cyc, edge, exact_signature, form_Xd_dminus1,
                                 intersection_points, local_multiplicity, signature, transversal_intersection,
                                 verify_theorem)
from tropfloor.lattice import det, matmul, transpose
from tropfloor.polyhedral import compactify, hypersurface, projective_space
from tropfloor.troppoly import polynomial_from_heights

from _surfaces import floor_pair, plan, surface

ORIGIN = (0, 0, 0)


def test_balancing_examples():
    line = Weighted1Cycle([edge((0, 0), direction=(-1, 0)), edge((0, 0), direction=(0, -1)),
                           edge((0, 0), direction=(1, 1))])
    assert check_balanced(line) == (True, None)
    assert check_balanced(Weighted1Cycle([edge((0, 0), direction=(1, 0)), edge((0, 0), direction=(-1, 0))]))[0]
    ok, v = check_balanced(Weighted1Cycle([edge((0, 0), direction=(1, 0))]))
    assert not ok and v == (0, 0)


def test_cycle_map_rejects_unbalanced_input():
    with pytest.raises(ValueError):
        cyc(Weighted1Cycle([edge((0, 0, 0), direction=(0, 0, 1))]), surface(1))


@pytest.mark.parametrize("d", [2, 3])
def test_fibres_are_parallel_cycles_either_way_round(d):
    Y = floor_pair(d)
    ex = exceptional_cycles(Y)
    assert len(ex.E) == d * (d - 1)
    for e in ex.E + [ex.L]:
        assert is_cycle(e, Y) and is_cycle(-e, Y)
        for c in e.cells:
            u, f = c.vector, c.framing
            assert all(u[i] * f[j] == u[j] * f[i] for i in range(3) for j in range(3))
            assert sum(a * b for a, b in zip(u, f)) > 0


def _plane():
    return compactify(hypersurface(polynomial_from_heights(3, 1, lambda a: 0)), projective_space(3))


PLANE = _plane()
FACET = next(c for c in PLANE.cells if c.dim == 2 and not c.sedentarity)
CENTER = tuple(Fraction(sum(x)) for x in zip(*[[a + b for a, b in zip(FACET.geometry.vertices[0], r)]
                                                 for r in FACET.geometry.rays]))
coeff = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


def _in_facet(c):
    T = FACET.tangent
    return tuple(c[0] * a + c[1] * b for a, b in zip(*T))


def _through(direction, framing, weight=1):
    eps = Fraction(1, 1000)
    a = tuple(x - eps * u for x, u in zip(CENTER, direction))
    b = tuple(x + eps * u for x, u in zip(CENTER, direction))
    return FramedCell(a, b, None, FACET.id, framing, weight)


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


@settings(max_examples=100, deadline=None)
@given(coeff, coeff, coeff, coeff, st.integers(1, 3), st.integers(1, 3))
def test_local_multiplicity_is_symmetric(a, b, fa, fb, wa, wb):
    assume(_det2(a, b) != 0)
    A = _through(_in_facet(a), _in_facet(fa), wa)
    B = _through(_in_facet(b), _in_facet(fb), wb)
    m = local_multiplicity(PLANE, CENTER, A, B)
    assert m == local_multiplicity(PLANE, CENTER, B, A)
    # basis independent: in facet coordinates this is sign det(a, b) * det(fa, fb)
    s = (_det2(a, b) > 0) - (_det2(a, b) < 0)
    assert m == wa * wb * s * _det2(fa, fb)


@settings(max_examples=100, deadline=None)
@given(coeff, coeff, st.integers(1, 3), st.integers(1, 3))
def test_parallel_crossings_are_positive(a, b, wa, wb):
    assume(_det2(a, b) != 0)
    A = _through(_in_facet(a), _in_facet(a), wa)
    B = _through(_in_facet(b), _in_facet(b), wb)
    assert local_multiplicity(PLANE, CENTER, A, B) > 0


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_generic_lifted_lines_meet_positively_once(d, seed):
    Y = floor_pair(d)
    FS = FloorSurface(Y)
    k = d - 1
    c1 = generic_center(FS, k, seed)
    c2 = generic_center(FS, k, seed + 100, avoid=c1)
    L1, L2 = cyc(lifted_line(FS, k, c1), Y), cyc(lifted_line(FS, k, c2), Y)
    pts = intersection_points(L1, L2, Y)
    assert all(m > 0 for _, m in pts)
    assert sum(m for _, m in pts) == 1
    assert transversal_intersection(L2, L1, Y) == 1


@pytest.mark.parametrize("d", [2, 3])
def test_bent_fibre_self_intersection(d):
    Y = floor_pair(d)
    FS = FloorSurface(Y)
    ex = exceptional_cycles(Y)
    splits = [((1, 0), (1, 0)), ((0, 1), (0, 1)), ((1, 0), (0, 1)), ((0, 1), (1, 0))]
    for e, x in zip(ex.E, ex.points):
        for w in splits:
            model = bent_fibre(Y, FS, x, w)
            assert is_cycle(model.chain, Y)
            pts = intersection_points(e, model.chain, Y)
            assert [m for _, m in pts] == [-1]


def test_floor_pair_form_d2():
    Q = form_Xd_dminus1(floor_pair(2))
    assert Q.entries == [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    assert signature(Q)["signature"] == [1, 2, 0]


@pytest.mark.parametrize("d", [3, 4])
def test_floor_pair_form_signature(d):
    Q = form_Xd_dminus1(floor_pair(d))
    assert Q.known()
    assert signature(Q)["signature"] == [1, d * (d - 1), 0]


def test_difference_chain_block_is_negative_definite():
    Q = form_Xd_dminus1(floor_pair(3))
    from tropfloor.intersect import floor_block
    blk = floor_block(Q)
    n = len(blk)
    assert n == 5
    assert all(blk[i][i] == -2 for i in range(n))
    assert all(blk[i][i + 1] == 1 for i in range(n - 1))
    assert exact_signature(blk) == (0, n, 0)


def test_exact_signature_small():
    assert exact_signature([[1, 0, 0], [0, -1, 0], [0, 0, -1]]) == (1, 2, 0)
    assert exact_signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert exact_signature([[0, 0], [0, 0]]) == (0, 0, 2)


def _unimodular(ops, n):
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, j, k in ops:
        i, j = i % n, j % n
        if i == j:
            U[i] = [-x for x in U[i]]
        else:
            U[i] = [x + k * y for x, y in zip(U[i], U[j])]
    return U


sym = st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                                   min_size=n, max_size=n))


@settings(max_examples=80, deadline=None)
@given(sym, st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(-2, 2)), max_size=12))
def test_signature_invariant_under_unimodular_congruence(m, ops):
    n = len(m)
    M = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
    U = _unimodular(ops, n)
    assert abs(det(U)) == 1
    N = matmul(matmul(transpose(U), M), U)
    assert exact_signature(N) == exact_signature(M)


def test_unknown_entry_outside_pairing_is_rejected():
    Q = IntersectionForm(["a", "b"], ["A1", "C"], [[-2, STAR], [STAR, 0]])
    with pytest.raises(ValueError):
        signature(Q)


def test_assembled_form_d4():
    fa = assemble_form(plan(4))
    Q = fa.form
    B = [i for i, t in enumerate(Q.tags) if t == "B"]
    C = [i for i, t in enumerate(Q.tags) if t == "C"]
    assert len(B) == len(C) == 1
    i, j = B[0], C[0]
    assert Q.entries[i][j] == 1 and Q.entries[j][j] == 0 and Q.entries[i][i] is STAR
    res = signature(Q)
    assert res["signature"] == [2, 18, 0]
    assert res["asserted"] == ["v contributes +1 to the signature"]


def test_assembled_form_d2_has_one_floor_cycle():
    Q = assemble_form(plan(2)).form
    assert Q.tags == ["A2", "v"]
    assert Q.entries[0][0] == -2 and Q.entries[1][1] is STAR
    assert signature(Q)["signature"] == [1, 1, 0]


def test_structural_zeros_survive_transversal_checks():
    from tropfloor.floors import basis_cycles
    X = surface(3)
    cycles = {c.label: c for v in basis_cycles(X).values() for c in v}
    Q = assemble_form(plan(3), cycles, X).form
    assert Q.checks["conflicts"] == []


@pytest.mark.parametrize("d", [1, 2, 3])
def test_verify_theorem_small_degrees(d):
    rep = verify_theorem(d)
    assert rep["pass"], [c for c in rep["checks"] if not c["pass"]]


def test_verify_theorem_degree_guard():
    with pytest.raises(ValueError):
        verify_theorem(6)
