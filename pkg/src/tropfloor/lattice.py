"""Exact integer linear algebra: Smith form, lattice bases, kernels, wedges.

Matrices are plain lists of rows of Python ints (or Fractions where noted).
Nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

Matrix = list[list[int]]

INFINITE = "infinite"


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)])
    return out


def transpose(m: Sequence[Sequence], cols: int | None = None) -> list[list]:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*m)]


def columns_to_matrix(cols: Sequence[Sequence[int]], dim: int) -> Matrix:
    """Stack vectors as the columns of a ``dim x len(cols)`` matrix."""
    return [[c[i] for c in cols] for i in range(dim)]


@dataclass(frozen=True)
class SNFResult:
    rank: int
    diagonal: tuple[int, ...]
    U: Matrix
    V: Matrix


def _snf_core(m: Matrix, track: bool):
    a = [list(r) for r in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    U = identity(nr) if track else None
    V = identity(nc) if track else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        ra, rs = a[dst], a[src]
        for j in range(nc):
            if rs[j]:
                ra[j] += k * rs[j]
        if track:
            ua, us = U[dst], U[src]
            for j in range(nr):
                if us[j]:
                    ua[j] += k * us[j]

    def add_col(dst, src, k):
        for row in a:
            if row[src]:
                row[dst] += k * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] += k * row[src]

    diag = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remaining entry of row/col t onto the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                U[t] = [-x for x in U[t]]
        diag.append(a[t][t])
        t += 1
    return diag, U, V


def smith_normal_form(m: Matrix) -> SNFResult:
    """Smith normal form with unimodular transforms, ``U @ m @ V == D``.

    >>> smith_normal_form([[2, 0], [0, 3]]).diagonal
    (1, 6)
    """
    diag, U, V = _snf_core(m, track=True)
    return SNFResult(len(diag), tuple(diag), U, V)


def elementary_divisors(m: Matrix) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix."""
    if not m or not m[0]:
        return []
    return _snf_core(m, track=False)[0]


def sparse_elementary_divisors(rows: list[dict[int, int]]) -> list[int]:
    """Invariant factors of a sparse matrix given as ``{col: value}`` rows.

    Unit pivots are eliminated greedily (fewest column entries first); what
    survives is handed to the dense Smith routine.
    """
    rows = [dict(r) for r in rows if r]
    colmap: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            colmap.setdefault(c, set()).add(i)
    alive = set(range(len(rows)))
    units = 0
    progress = True
    while progress:
        progress = False
        order = sorted(alive, key=lambda i: len(rows[i]))
        for i in order:
            if i not in alive:
                continue
            r = rows[i]
            if not r:
                alive.discard(i)
                continue
            cands = [c for c, v in r.items() if v in (1, -1)]
            if not cands:
                continue
            c = min(cands, key=lambda c: len(colmap[c]))
            pv = r[c]
            for k in list(colmap[c]):
                if k == i:
                    continue
                rk = rows[k]
                f = rk[c] * pv
                for cc, vv in r.items():
                    nv = rk.get(cc, 0) - f * vv
                    if nv:
                        if cc not in rk:
                            colmap[cc].add(k)
                        rk[cc] = nv
                    elif cc in rk:
                        del rk[cc]
                        colmap[cc].discard(k)
            for cc in r:
                colmap[cc].discard(i)
            del colmap[c]
            rows[i] = {}
            alive.discard(i)
            units += 1
            progress = True
    rest = [rows[i] for i in sorted(alive) if rows[i]]
    cols = sorted({c for r in rest for c in r})
    idx = {c: j for j, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for dr, r in zip(dense, rest):
        for c, v in r.items():
            dr[idx[c]] = v
    tail = elementary_divisors(dense) if rest else []
    return [1] * units + sorted(tail, key=lambda x: (x != 1, x))


def rank(m: Sequence[Sequence]) -> int:
    """Rank over the rationals (fraction-free Gaussian elimination)."""
    a = [[Fraction(x) for x in r] for r in m]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r


def det(m: Sequence[Sequence]):
    n = len(m)
    a = [[Fraction(x) for x in r] for r in m]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(d) if d.denominator == 1 else d


def solve(cols: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coordinates ``c`` with ``sum c_j cols[j] == v``; ``None`` if ``v`` is outside the span.

    ``cols`` must be linearly independent.
    """
    k = len(cols)
    n = len(v)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("solve: columns are linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    return [aug[i][k] for i in range(k)]


def solve_int(cols: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    c = solve(cols, v)
    if c is None or any(x.denominator != 1 for x in c):
        raise ValueError(f"vector {list(v)} is not in the lattice spanned by the basis")
    return [int(x) for x in c]


def hermite_basis(gens: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """A lattice basis (row echelon, Hermite style) of the Z-span of ``gens``."""
    rows = [list(g) for g in gens if any(g)]
    basis = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in rows if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        rows = rest
        col += 1
    return basis


def integer_kernel(m: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x in Z^n : m x = 0}`` (automatically saturated)."""
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    if not m or all(not any(r) for r in m):
        return identity(n)
    snf = smith_normal_form(m)
    V = snf.V
    return [[V[i][j] for i in range(n)] for j in range(snf.rank, n)]


def saturate(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """Basis of ``Z^dim`` intersected with the rational span of ``vectors``."""
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    perp = integer_kernel(vecs, dim)
    if not perp:
        return identity(dim)
    return integer_kernel(perp, dim)


def primitive(v: Sequence) -> list[int]:
    """Primitive integer vector positively proportional to a rational vector."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return [x // g for x in ints]


def wedge(vectors: Sequence[Sequence[int]], n: int) -> list[int]:
    """Plücker coordinates of ``v_1 ∧ ... ∧ v_p`` in the lexicographic basis ``e_I``."""
    p = len(vectors)
    if p == 0:
        return [1]
    out = []
    for idx in combinations(range(n), p):
        out.append(det([[v[i] for i in idx] for v in vectors]))
    return [int(x) for x in out]


def wedge_basis(gens: Sequence[Sequence[int]], p: int, n: int | None = None) -> Matrix:
    """Matrix whose columns are the p-fold wedges of all p-subsets of ``gens``."""
    if n is None:
        n = len(gens[0])
    if not 0 <= p <= n:
        raise ValueError("wedge degree out of range")
    if p == 0:
        return [[1]]
    cols = [wedge(list(sub), n) for sub in combinations(gens, p)]
    dim = len(list(combinations(range(n), p)))
    return columns_to_matrix(cols, dim)


def compound(m: Matrix, p: int) -> Matrix:
    """p-th exterior power of a linear map ``Z^k -> Z^r`` given as an ``r x k`` matrix."""
    r = len(m)
    k = len(m[0]) if r else 0
    if p == 0:
        return [[1]]
    rows = list(combinations(range(r), p))
    cols = list(combinations(range(k), p))
    return [[int(det([[m[i][j] for j in J] for i in I])) for J in cols] for I in rows]


def lattice_index(ambient: Sequence[Sequence[int]], sub: Sequence[Sequence[int]]):
    """Index ``[L : L']`` where both lattices are given by generating columns.

    ``ambient`` columns must be a basis. Returns ``INFINITE`` when ``sub`` has
    lower rank.
    """
    amb = list(ambient)
    coords = []
    for s in sub:
        c = solve(amb, s)
        if c is None:
            raise ValueError("sublattice is not contained in the ambient span")
        coords.append(c)
    if not coords or rank(coords) < len(amb):
        return INFINITE
    basis = hermite_basis([[int(x) for x in c] for c in coords], len(amb)) \
        if all(x.denominator == 1 for c in coords for x in c) else None
    if basis is None:
        raise ValueError("sublattice is not contained in the ambient lattice")
    return abs(det(basis))
