"""Exact upper hulls of lifted point configurations and face lattices of small polytopes.

Points are integer or rational tuples; heights are Fractions. Configurations
here are tiny (a few dozen points), so facets are found by direct search
over affinely independent subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .lattice import integer_kernel, primitive, rank


class DegenerateConfiguration(ValueError):
    """The points do not affinely span the ambient space."""


def affine_rank(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def _normal(points: Sequence[Sequence], dim: int) -> list[int] | None:
    """Integer normal of the hyperplane through ``dim`` points in R^dim, or None."""
    p0 = points[0]
    diffs = [[Fraction(a - b) for a, b in zip(p, p0)] for p in points[1:]]
    if dim == 1:
        return [1]
    # scale rows to integers before taking the kernel
    rows = []
    for d in diffs:
        den = 1
        for x in d:
            den = den * x.denominator // _gcd(den, x.denominator)
        rows.append([int(x * den) for x in d])
    if rank(rows) != dim - 1:
        return None
    ker = integer_kernel(rows, dim)
    return ker[0] if len(ker) == 1 else None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _project(points: Sequence[Sequence]) -> tuple[list[tuple], int]:
    """Affinely isomorphic copy of ``points`` in R^k, k = affine dimension.

    Uses a coordinate projection, so integer points stay integer.
    """
    k = affine_rank(points)
    n = len(points[0])
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    for idx in combinations(range(n), k):
        if rank([[d[i] for i in idx] for d in diffs]) == k:
            return [tuple(p[i] for i in idx) for p in points], k
    raise AssertionError("unreachable: projection search failed")


def facets(points: Sequence[Sequence]) -> list[frozenset[int]]:
    """Facets of conv(points) as sets of indices of the points lying on them."""
    pts, k = _project(points)
    if k == 0:
        return []
    if k == 1:
        xs = [p[0] for p in pts]
        lo, hi = min(xs), max(xs)
        return [frozenset(i for i, x in enumerate(xs) if x == lo),
                frozenset(i for i, x in enumerate(xs) if x == hi)]
    found: set[frozenset[int]] = set()
    for combo in combinations(range(len(pts)), k):
        if any(frozenset(combo) <= f for f in found):
            continue
        w = _normal([pts[i] for i in combo], k)
        if w is None:
            continue
        c = _dot(w, pts[combo[0]])
        pos = neg = False
        on = []
        for i, p in enumerate(pts):
            s = _dot(w, p) - c
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                on.append(i)
            if pos and neg:
                break
        if pos and neg:
            continue
        found.add(frozenset(on))
    return sorted(found, key=sorted)


def polytope_faces(points: Sequence[Sequence]) -> dict[frozenset[int], int]:
    """All nonempty faces of conv(points), mapped to their dimension.

    Each face is the set of indices of the given points that lie on it.
    """
    out: dict[frozenset[int], int] = {}

    def rec(idx: frozenset[int]):
        if idx in out:
            return
        sub = sorted(idx)
        pts = [points[i] for i in sub]
        k = affine_rank(pts)
        out[idx] = k
        if k == 0:
            return
        for f in facets(pts):
            rec(frozenset(sub[i] for i in f))

    rec(frozenset(range(len(points))))
    return out


@dataclass(frozen=True)
class HullCell:
    """An upper facet: the lifted points on it and its supporting affine function."""
    points: frozenset[int]
    slope: tuple[Fraction, ...]
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return _dot(self.slope, x) + self.offset


def upper_hull(points: Sequence[Sequence], heights: Sequence) -> list[HullCell]:
    """Upper facets of ``{(p, h)}``; their projections tile conv(points)."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    hs = [Fraction(h) for h in heights]
    if not pts:
        raise DegenerateConfiguration("empty configuration")
    n = len(pts[0])
    if affine_rank(pts) < n:
        raise DegenerateConfiguration("points do not affinely span the ambient space")

    def touching(slope, off):
        return frozenset(i for i, p in enumerate(pts) if _dot(slope, p) + off == hs[i])

    # start from the horizontal plane at the maximal height and tilt it down
    slope = [Fraction(0)] * n
    off = max(hs)
    T = touching(slope, off)
    while affine_rank([pts[i] for i in sorted(T)]) < n:
        t0 = pts[min(T)]
        diffs = [[a - b for a, b in zip(pts[i], t0)] for i in sorted(T) if pts[i] != t0]
        cand = integer_kernel([primitive(d) for d in diffs], n) if diffs else [
            [int(i == j) for j in range(n)] for i in range(n)]
        w = next(v for v in cand if any(_dot(v, p) != _dot(v, t0) for p in pts))
        lam = [_dot(w, p) - _dot(w, t0) for p in pts]
        if not any(l > 0 for l in lam):
            w = [-x for x in w]
            lam = [-l for l in lam]
        t = min((_dot(slope, pts[i]) + off - hs[i]) / lam[i] for i in range(len(pts)) if lam[i] > 0)
        slope = [s - t * wi for s, wi in zip(slope, w)]
        off = off + t * _dot(w, t0)
        T = touching(slope, off)

    cells: dict[frozenset[int], HullCell] = {}
    todo = [HullCell(T, tuple(slope), off)]
    while todo:
        cell = todo.pop()
        if cell.points in cells:
            continue
        cells[cell.points] = cell
        members = sorted(cell.points)
        cpts = [pts[i] for i in members]
        for f in facets(cpts):
            fidx = [members[i] for i in sorted(f)]
            w = _facet_normal([pts[i] for i in fidx], n)
            c = _dot(w, pts[fidx[0]])
            inside = next(pts[i] for i in members if _dot(w, pts[i]) != c)
            if _dot(w, inside) - c > 0:
                w = [-x for x in w]
                c = -c
            lam = [_dot(w, p) - c for p in pts]
            out = [i for i, l in enumerate(lam) if l > 0]
            if not out:
                continue
            t = max((hs[i] - cell.value(pts[i])) / lam[i] for i in out)
            nslope = tuple(s + t * wi for s, wi in zip(cell.slope, w))
            noff = cell.offset - t * c
            nT = touching(nslope, noff)
            if nT not in cells:
                todo.append(HullCell(nT, nslope, noff))
    return sorted(cells.values(), key=lambda c: sorted(c.points))


def _facet_normal(fpts: Sequence[Sequence], n: int) -> list[int]:
    p0 = fpts[0]
    diffs = [primitive([a - b for a, b in zip(p, p0)]) for p in fpts[1:] if p != p0]
    ker = integer_kernel(diffs, n)
    if len(ker) != 1:
        raise AssertionError("facet does not span a hyperplane")
    return ker[0]
