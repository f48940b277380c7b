import pytest

from tropfloor.cosheaf import framing_group, inclusion_map
from tropfloor.homology import chain_complex, euler_characteristic, hodge_table, tropical_homology
from tropfloor.lattice import matmul
from tropfloor.polyhedral import compactify, hypersurface, projective_space
from tropfloor.troppoly import polynomial_from_heights

from _surfaces import floor_pair, honeycomb_surface, plane_curve, surface


def _plane():
    return compactify(hypersurface(polynomial_from_heights(3, 1, lambda a: 0)), projective_space(3))


def _functoriality_failures(X, ps):
    bad = 0
    closures = {c.id: X.closure(c.id) for c in X.cells}
    for p in ps:
        maps = {}

        def inc(a, b):
            if (a, b) not in maps:
                maps[(a, b)] = inclusion_map(X, X.cells[a], X.cells[b], p)
            return maps[(a, b)]

        for t in X.cells:
            for s in closures[t.id]:
                for r in closures[s]:
                    A, B, C = inc(t.id, s), inc(s, r), inc(t.id, r)
                    if not A or not A[0] or not B or not B[0]:
                        continue
                    if matmul(B, A) != C:
                        bad += 1
    return bad


@pytest.mark.parametrize("build", [_plane, lambda: honeycomb_surface(2)[1], lambda: surface(2),
                                   lambda: floor_pair(2), lambda: plane_curve(3)[1]])
def test_inclusions_compose(build):
    X = build()
    assert _functoriality_failures(X, range(1, X.n + 1)) == 0


@pytest.mark.parametrize("build", [lambda: surface(3), lambda: floor_pair(3), lambda: honeycomb_surface(3)[1]])
def test_inclusions_compose_degree_three(build):
    X = build()
    assert _functoriality_failures(X, range(0, 4)) == 0


def test_framing_ranks_on_plane():
    X = _plane()
    vertex = next(c for c in X.cells if c.dim == 0 and not c.sedentarity)
    assert [framing_group(X, vertex, p).rank for p in range(4)] == [1, 3, 3, 0]
    facet = next(c for c in X.cells if c.dim == 2 and not c.sedentarity)
    assert [framing_group(X, facet, p).rank for p in range(4)] == [1, 2, 1, 0]


def _dense(cols, nrows):
    M = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            M[i][j] = v
    return M


@pytest.mark.parametrize("build", [_plane, lambda: surface(2), lambda: surface(3), lambda: floor_pair(3),
                                   lambda: plane_curve(4)[1]])
def test_boundary_squares_to_zero(build):
    X = build()
    for p in range(X.n + 1):
        C = chain_complex(X, p)
        for q in range(2, X.n + 1):
            if not C.generators.get(q) or not C.generators.get(q - 2):
                continue
            Dq = _dense(C.boundary[q], len(C.generators[q - 1]))
            Dq1 = _dense(C.boundary[q - 1], len(C.generators[q - 2]))
            assert not any(any(r) for r in matmul(Dq1, Dq))


def test_plane_hodge_table():
    H = hodge_table(_plane())
    assert [[H.rank(p, q) for q in range(3)] for p in range(3)] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert H.torsion_free


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_plane_curve_homology(d):
    X = plane_curve(d)[1]
    g = (d - 1) * (d - 2) // 2
    H = hodge_table(X)
    assert (H.rank(0, 0), H.rank(0, 1), H.rank(1, 0), H.rank(1, 1)) == (1, g, g, 1)


@pytest.mark.parametrize("d,h11", [(1, 1), (2, 2), (3, 7)])
def test_surface_h11(d, h11):
    r = tropical_homology(surface(d), 1, 1)
    assert r.rank == h11 and r.torsion == ()


def test_euler_characteristic_of_quadric():
    X = surface(2)
    C = chain_complex(X, 0)
    assert euler_characteristic(C) == sum((-1) ** q * tropical_homology(X, 0, q).rank for q in range(3))
