"""Tropical hypersurfaces, their compactification in a toric ambient, and CW checks.

A hypersurface with Newton polytope P is closed up inside the toric variety of
P's normal fan. Each boundary stratum corresponds to a face Q of P; a point of
the stratum is recorded in coordinates of N_Q = Z^n / (directions normal to Q),
realised as the dual of the saturated lattice M_Q of directions of Q. The cells
of the closure are the pairs (Q, sigma) with sigma a positive-dimensional cell
of the dual subdivision contained in Q; such a cell has dimension
dim Q - dim sigma.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .hull import affine_rank, facets
from .lattice import det, hermite_basis, identity, integer_kernel, primitive, solve, solve_int, transpose
from .troppoly import Subdivision, TropicalPolynomial, dual_subdivision

Vec = tuple[int, ...]


class NotCompactifiable(ValueError):
    """The recession fan of the hypersurface is not subordinate to the ambient's fan."""


@dataclass(frozen=True)
class Ambient:
    """A smooth toric ambient given by the primitive rays of its fan, keyed by their labels."""

    name: str
    n: int
    rays: tuple[tuple[int, Vec], ...]

    def label_of(self, v: Sequence[int]) -> int | None:
        v = tuple(v)
        return next((lab for lab, r in self.rays if r == v), None)


def projective_space(n: int) -> Ambient:
    rays = [(0, tuple([1] * n))] + [(i, tuple(-int(j == i - 1) for j in range(n))) for i in range(1, n + 1)]
    return Ambient(f"TP{n}", n, tuple(rays))


def toric_delta() -> Ambient:
    """The threefold whose fan is the normal fan of conv(d*simplex_2 x {0}, (d-1)*simplex_2 x {1})."""
    rays = ((0, (1, 1, 1)), (1, (-1, 0, 0)), (2, (0, -1, 0)), (3, (0, 0, -1)), (4, (0, 0, 1)))
    return Ambient("T(Delta)", 3, rays)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _any_solution(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Some rational solution of a consistent (possibly underdetermined) system."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][nc] != 0 for i in range(r, nr)):
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * nc
    for i, c in enumerate(piv_cols):
        x[c] = a[i][nc]
    return x


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass
class ConvexGeometry:
    """conv(vertices) + cone(rays), in some fixed coordinates."""

    vertices: list[tuple[Fraction, ...]]
    rays: list[Vec]


def _stratum_geometry(coords: dict, coeffs: dict, tops: list, facet_data: list, sigma) -> ConvexGeometry:
    """Vertices and rays of the region of a stratum where exactly ``sigma`` ties for the max.

    ``coords`` maps exponents to chart coordinates, ``tops`` are the maximal
    subdivision cells of the stratum, ``facet_data`` lists (outward normal,
    point set) for the facets of the stratum's polytope.
    """
    verts = []
    for tau in tops:
        if not sigma <= tau:
            continue
        pts = sorted(tau)
        a0 = pts[0]
        rows = [_sub(coords[a], coords[a0]) for a in pts[1:]]
        rhs = [coeffs[a0] - coeffs[a] for a in pts[1:]]
        verts.append(tuple(_any_solution(rows, rhs)))
    rays = [tuple(nu) for nu, fpts in facet_data if sigma <= fpts]
    return ConvexGeometry(sorted(set(verts)), sorted(rays))


@dataclass
class AffineCell:
    dim: int
    dual: frozenset
    tangent: list[list[int]]
    geometry: ConvexGeometry


@dataclass
class AffineComplex:
    """The hypersurface in R^n: one cell per positive-dimensional subdivision cell."""

    poly: TropicalPolynomial
    subdivision: Subdivision
    newton_facets: list[tuple[Vec, frozenset]]
    cells: list[AffineCell]

    def cells_of_dim(self, k: int) -> list[AffineCell]:
        return [c for c in self.cells if c.dim == k]


def _canonical_basis(vectors: list[list[int]], k: int) -> list[list[int]]:
    return hermite_basis(vectors, k) if vectors else []


def _tangent(coords: dict, sigma, k: int) -> list[list[int]]:
    pts = sorted(sigma)
    rows = [list(_sub(coords[a], coords[pts[0]])) for a in pts[1:]]
    if affine_rank([coords[a] for a in pts]) == k:
        return []
    return _canonical_basis(integer_kernel(rows, k), k)


def _newton_facets(points: list[Vec]) -> list[tuple[Vec, frozenset]]:
    """Outward primitive normals of conv(points) with the points on each facet."""
    out = []
    inner = [sum(Fraction(p[i]) for p in points) / len(points) for i in range(len(points[0]))]
    for f in facets(points):
        fp = [points[i] for i in sorted(f)]
        diffs = [list(_sub(p, fp[0])) for p in fp[1:]]
        nu = integer_kernel(diffs, len(points[0]))[0] if diffs else [1]
        if _dot(nu, inner) > _dot(nu, fp[0]):
            nu = [-x for x in nu]
        out.append((tuple(primitive(nu)), frozenset(fp)))
    return sorted(out)


def hypersurface(f: TropicalPolynomial) -> AffineComplex:
    S = dual_subdivision(f)
    n = f.dim
    coords = {a: a for a in S.points}
    nf = _newton_facets(S.points)
    tops = S.cells_of_dim(n)
    cells = []
    for sigma, k in sorted(S.cells.items(), key=lambda kv: (-kv[1], sorted(kv[0]))):
        if k == 0:
            continue
        cells.append(AffineCell(n - k, sigma, _tangent(coords, sigma, n),
                                _stratum_geometry(coords, f.terms, tops, nf, sigma)))
    cells.sort(key=lambda c: (c.dim, sorted(c.dual)))
    return AffineComplex(f, S, nf, cells)


@dataclass(frozen=True)
class Stratum:
    """A face Q of the Newton polytope, i.e. a torus orbit of the ambient."""

    sedentarity: frozenset[int]
    points: frozenset[Vec]
    dim: int
    basis: tuple[Vec, ...]      # columns: basis of the saturated direction lattice of Q
    base: Vec

    def chart(self, alpha: Sequence[int]) -> Vec:
        """Coordinates of ``alpha - base`` in the direction basis of Q."""
        if not self.basis:
            return ()
        return tuple(solve_int(self.basis, _sub(alpha, self.base)))

    def project(self, x: Sequence) -> tuple:
        """The map N -> N_Q on points or vectors."""
        return tuple(_dot(b, x) for b in self.basis)


@dataclass
class Cell:
    id: int
    dim: int
    sedentarity: frozenset[int]
    stratum: Stratum
    dual: frozenset[Vec]
    tangent: list[list[int]]      # basis of the tangent lattice in N_Q coordinates
    geometry: ConvexGeometry

    @property
    def key(self):
        return (self.sedentarity, self.dual)


@dataclass
class CompactComplex:
    ambient: Ambient
    poly: TropicalPolynomial
    subdivision: Subdivision
    strata: dict[frozenset[int], Stratum]
    cells: list[Cell]
    boundary: dict[int, dict[int, int]]
    index: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.ambient.n

    def cell(self, sed: Sequence[int], dual) -> Cell:
        return self.cells[self.index[(frozenset(sed), frozenset(map(tuple, dual)))]]

    def cells_of_dim(self, k: int) -> list[Cell]:
        return [c for c in self.cells if c.dim == k]

    def cofaces(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {c.id: {} for c in self.cells}
        for c, faces in self.boundary.items():
            for fid, s in faces.items():
                out[fid][c] = s
        return out

    def closure(self, cid: int) -> set[int]:
        seen = {cid}
        todo = [cid]
        while todo:
            for f in self.boundary[todo.pop()]:
                if f not in seen:
                    seen.add(f)
                    todo.append(f)
        return seen

    def stratum_value(self, sed, y) -> tuple[Fraction, frozenset]:
        """max of the stratum's restricted polynomial at chart point ``y`` and its argmax."""
        st = self.strata[frozenset(sed)]
        vals = {a: self.poly.terms[a] + _dot(st.chart(a), y) for a in st.points}
        m = max(vals.values())
        return m, frozenset(a for a, v in vals.items() if v == m)

    def locate(self, sed, y) -> Cell | None:
        """The open cell containing chart point ``y`` of the stratum, or None off the surface."""
        _, arg = self.stratum_value(sed, y)
        key = (frozenset(sed), arg)
        return self.cells[self.index[key]] if key in self.index else None


def _strata(ambient: Ambient, points: list[Vec], newton: list[tuple[Vec, frozenset]]) -> dict:
    labels = {}
    for nu, fpts in newton:
        lab = ambient.label_of(nu)
        if lab is None:
            raise NotCompactifiable(
                f"recession direction {list(nu)} is not a ray of the {ambient.name} fan: "
                f"surface not compactifiable in this ambient")
        labels[lab] = fpts
    missing = [lab for lab, _ in ambient.rays if lab not in labels]
    if missing:
        raise NotCompactifiable(
            f"Newton polytope has no facet normal to rays {missing} of {ambient.name}: "
            f"surface not compactifiable in this ambient")
    n = ambient.n
    normal = dict(ambient.rays)
    out = {}
    for r in range(len(labels) + 1):
        for S in combinations(sorted(labels), r):
            pts = frozenset(points)
            for lab in S:
                pts &= labels[lab]
            if not pts:
                continue
            closed = frozenset(lab for lab, fp in labels.items() if pts <= fp)
            if closed != frozenset(S):
                continue
            k = affine_rank(sorted(pts))
            if k == n:
                basis = tuple(tuple(c) for c in identity(n))
            elif k == 0:
                basis = ()
            else:
                ker = integer_kernel([list(normal[lab]) for lab in S], n)
                basis = tuple(tuple(c) for c in _canonical_basis(ker, n))
            out[closed] = Stratum(closed, pts, k, basis, min(pts))
    return out


def compactify(V: AffineComplex, ambient: Ambient) -> CompactComplex:
    if ambient.n != V.poly.dim:
        raise NotCompactifiable("ambient dimension differs from the hypersurface's")
    for c in V.cells:
        for r in c.geometry.rays:
            if ambient.label_of(r) is None:
                raise NotCompactifiable(
                    f"recession direction {list(r)} is not a ray of the {ambient.name} fan: "
                    f"surface not compactifiable in this ambient")
    S = V.subdivision
    strata = _strata(ambient, S.points, V.newton_facets)
    f = V.poly
    cells: list[Cell] = []
    for sed, st in sorted(strata.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        if st.dim == 0:
            continue
        coords = {a: st.chart(a) for a in st.points}
        tops = [c for c, k in S.cells.items() if k == st.dim and c <= st.points]
        facet_data = [(_outward(st, strata[s2]), strata[s2].points)
                      for s2 in _facets_of(strata, sed)]
        for sigma, k in S.cells.items():
            if k == 0 or not sigma <= st.points:
                continue
            cells.append(Cell(-1, st.dim - k, sed, st, sigma, _tangent(coords, sigma, st.dim),
                              _stratum_geometry(coords, f.terms, tops, facet_data, sigma)))
    cells.sort(key=lambda c: (c.dim, sorted(c.sedentarity), len(c.sedentarity), sorted(c.dual)))
    for i, c in enumerate(cells):
        c.id = i
    index = {c.key: c.id for c in cells}
    X = CompactComplex(ambient, f, S, strata, cells, {}, index)
    X.boundary = {c.id: _boundary(X, c) for c in cells}
    return X


def _facets_of(strata: dict, sed: frozenset) -> list[frozenset]:
    k = strata[sed].dim
    return [s2 for s2, st in strata.items() if sed < s2 and st.dim == k - 1]


def _restriction(st: Stratum, sub: Stratum) -> list[list[int]]:
    """Matrix R (dim Q x dim Q') with B_{Q'} = B_Q R; the chart map N_Q -> N_Q' is R^T."""
    cols = [solve_int(st.basis, b) for b in sub.basis]
    return [[cols[j][i] for j in range(len(cols))] for i in range(st.dim)]


def _outward(st: Stratum, sub: Stratum) -> Vec:
    """Primitive vector of N_Q pointing towards the facet Q' (killed by the chart map to N_Q')."""
    R = _restriction(st, sub)
    e = integer_kernel(transpose(R, sub.dim) if sub.dim else [[0] * st.dim], st.dim)
    assert len(e) == 1
    e = e[0]
    w = next(a for a in sorted(st.points) if a not in sub.points)
    m = _sub(st.chart(w), st.chart(sub.base))
    if _dot(m, e) > 0:
        e = [-x for x in e]
    return tuple(e)


def _boundary(X: CompactComplex, c: Cell) -> dict[int, int]:
    if c.dim == 0:
        return {}
    st = c.stratum
    out = {}
    S = X.subdivision
    b = c.tangent
    sig = sorted(c.dual)
    v0 = st.chart(sig[0])
    # faces inside the same stratum: one more point ties for the max
    for s2 in _subdivision_cofaces(S).get(c.dual, ()):
        if not s2 <= st.points:
            continue
        face = X.cells[X.index[(c.sedentarity, s2)]]
        w = next(a for a in sorted(s2) if a not in c.dual)
        m = _sub(st.chart(w), v0)
        y = next(list(v) for v in b if _dot(v, m) != 0)
        if _dot(y, m) < 0:
            y = [-x for x in y]
        out[face.id] = _orientation_sign(b, [y] + face.tangent)
    # faces at infinity: the cell runs off towards a facet of its stratum
    for s2 in _facets_of(X.strata, c.sedentarity):
        sub = X.strata[s2]
        if not c.dual <= sub.points:
            continue
        face = X.cells[X.index[(s2, c.dual)]]
        R = _restriction(st, sub)
        e = list(_outward(st, sub))
        RT = transpose(R, sub.dim)
        # lift the face basis through the chart map, staying in c's tangent space
        bt = [[_dot(row, bi) for row in RT] for bi in b]        # images of c's basis
        lifts = []
        for fb in face.tangent:
            t = _any_solution([[bt[j][i] for j in range(len(b))] for i in range(sub.dim)], fb)
            lifts.append([sum(t[j] * b[j][i] for j in range(len(b))) for i in range(st.dim)])
        out[face.id] = _orientation_sign(b, [e] + lifts)
    return out


def _subdivision_cofaces(S: Subdivision) -> dict[frozenset, list[frozenset]]:
    """Cells one dimension up containing each subdivision cell (cached on the subdivision)."""
    cached = S.__dict__.get("_cofaces")
    if cached is None:
        by_dim: dict[int, list[frozenset]] = {}
        for c, k in S.cells.items():
            by_dim.setdefault(k, []).append(c)
        cached = {c: [b for b in by_dim.get(k + 1, ()) if c < b] for c, k in S.cells.items()}
        S.__dict__["_cofaces"] = cached
    return cached


def _orientation_sign(basis: list[list[int]], vectors: list) -> int:
    coords = [solve(basis, v) for v in vectors]
    if any(x is None for x in coords):
        raise AssertionError("boundary frame is not inside the cell's tangent space")
    d = det(coords)
    s = _sign(d)
    if s == 0:
        raise AssertionError("degenerate boundary frame")
    return s


@dataclass
class CWReport:
    ok: bool
    violations: list[str]

    def __bool__(self):
        return self.ok


def validate_cw(X: CompactComplex) -> CWReport:
    bad = []
    for c in X.cells:
        faces = X.boundary.get(c.id, {})
        for fid, s in faces.items():
            if s not in (1, -1):
                bad.append(f"cell {c.id}: incidence with {fid} is {s}")
            if X.cells[fid].dim != c.dim - 1:
                bad.append(f"cell {c.id}: face {fid} has wrong dimension")
        if c.dim >= 1 and not faces:
            bad.append(f"cell {c.id}: empty boundary")
        chi = sum((-1) ** X.cells[i].dim for i in X.closure(c.id))
        if chi != 1:
            bad.append(f"cell {c.id}: closed cell has Euler characteristic {chi}")
        if c.dim >= 1 and len(faces) < c.dim + 1:
            bad.append(f"cell {c.id}: too few boundary faces for a polytope")
    # boundary of boundary
    for c in X.cells:
        acc: dict[int, int] = {}
        for fid, s in X.boundary.get(c.id, {}).items():
            for gid, t in X.boundary.get(fid, {}).items():
                acc[gid] = acc.get(gid, 0) + s * t
        for gid, v in acc.items():
            if v:
                bad.append(f"boundary of boundary nonzero on pair ({c.id}, {gid})")
    return CWReport(not bad, bad)


@dataclass
class StarCone:
    cell: int
    dim: int
    tangent: list[list[int]]
    rays: list[Vec]


def star(X: CompactComplex, tau: Cell) -> list[StarCone]:
    """Cones of the local fan at ``tau`` within its stratum.

    Each cone is spanned by ``tau``'s tangent space and the rays listed; rays
    are representatives modulo that tangent space.
    """
    st = tau.stratum
    S = X.subdivision
    top = tau.dual
    kdim = affine_rank(sorted(top))
    coords = {a: st.chart(a) for a in top}
    ray_of = {}
    for phi, k in S.cells.items():
        if k == kdim - 1 and k >= 1 and phi < top:
            cell = X.cells[X.index[(tau.sedentarity, phi)]]
            w = next(a for a in sorted(top) if a not in phi)
            m = _sub(coords[w], coords[min(phi)])
            y = next(list(v) for v in cell.tangent if _dot(v, m) != 0)
            if _dot(y, m) > 0:
                y = [-x for x in y]
            ray_of[phi] = tuple(y)
    out = []
    for sigma, k in S.cells.items():
        if k >= 1 and sigma <= top:
            cell = X.cells[X.index[(tau.sedentarity, sigma)]]
            rays = sorted(r for phi, r in ray_of.items() if sigma <= phi)
            out.append(StarCone(cell.id, cell.dim, cell.tangent, rays))
    return sorted(out, key=lambda s: (s.dim, s.cell))


def cell_counts(X: CompactComplex) -> dict[str, list[int]]:
    """Number of cells per dimension for each sedentarity."""
    out: dict[str, list[int]] = {}
    for c in X.cells:
        key = ",".join(map(str, sorted(c.sedentarity))) or "-"
        row = out.setdefault(key, [0] * (X.n + 1))
        row[c.dim] += 1
    return out


def to_json(X: CompactComplex) -> dict:
    def q(x):
        return str(x)
    return {
        "ambient": X.ambient.name,
        "n": X.n,
        "cells": [{
            "id": c.id,
            "dim": c.dim,
            "sedentarity": sorted(c.sedentarity),
            "dual": sorted(list(a) for a in c.dual),
            "tangent": c.tangent,
            "vertices": [[q(x) for x in v] for v in c.geometry.vertices],
            "rays": [list(r) for r in c.geometry.rays],
            "boundary": {str(k): v for k, v in sorted(X.boundary[c.id].items())},
        } for c in X.cells],
    }


def dumps(X: CompactComplex) -> str:
    return json.dumps(to_json(X), indent=1)


# --------------------------------------------------------------------------- clipped geometry

def _hull2(points: list[tuple]) -> list[tuple]:
    """Counter-clockwise convex hull (monotone chain) of 2D points, keeping original payloads."""
    pts = sorted(set(points), key=lambda p: (p[0], p[1]))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _clip(poly: list[tuple], axis: int, bound: Fraction, keep_below: bool) -> list[tuple]:
    def inside(p):
        return p[axis] <= bound if keep_below else p[axis] >= bound

    out = []
    for i, cur in enumerate(poly):
        prev = poly[i - 1]
        if inside(cur):
            if not inside(prev):
                out.append(_cut(prev, cur, axis, bound))
            out.append(cur)
        elif inside(prev):
            out.append(_cut(prev, cur, axis, bound))
    return out


def _cut(a, b, axis, bound):
    t = (bound - a[axis]) / (b[axis] - a[axis])
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def clipped_polygon(c: Cell, R) -> list[tuple]:
    """Vertices, in order, of a 2-cell of sedentarity zero intersected with the box [-R, R]^n."""
    R = Fraction(R)
    g = c.geometry
    scale = 4 * (R + max((abs(x) for v in g.vertices for x in v), default=0) + 1)
    pts = list(g.vertices) + [tuple(x + scale * y for x, y in zip(v, r)) for v in g.vertices for r in g.rays]
    T = [list(t) for t in c.tangent]
    base = pts[0]
    flat = {}
    for p in pts:
        co = solve(T, [x - y for x, y in zip(p, base)])
        flat[tuple(co)] = p
    ring = [flat[q] for q in _hull2(list(flat))]
    for axis in range(len(base)):
        ring = _clip(ring, axis, R, True)
        ring = _clip(ring, axis, -R, False)
        if not ring:
            break
    out = []
    for q in ring:
        if not out or q != out[-1]:
            out.append(q)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out if len(out) >= 3 else []


def to_obj(X: CompactComplex, R, polylines: dict[str, list[list[tuple]]] | None = None) -> str:
    """OBJ text: the clipped affine 2-cells as fan-triangulated faces, 1-cells as lines."""
    R = Fraction(R)
    if R <= 0:
        raise ValueError("bounding box must be positive")
    lines = [f"# {X.ambient.name} surface of degree {X.poly.degree} clipped to [-{R},{R}]^{X.n}"]
    index: dict[tuple, int] = {}

    def vid(p):
        if p not in index:
            index[p] = len(index) + 1
            lines.append("v " + " ".join(f"{float(x):.6f}" for x in p))
        return index[p]

    lines.append("g surface")
    for c in X.cells_of_dim(X.n - 1):
        if c.sedentarity:
            continue
        ring = clipped_polygon(c, R) if X.n == 3 else []
        ids = [vid(p) for p in ring]
        for i in range(1, len(ids) - 1):
            lines.append(f"f {ids[0]} {ids[i]} {ids[i + 1]}")
    for c in X.cells_of_dim(1):
        if c.sedentarity or X.n != 3:
            continue
        g = c.geometry
        if len(g.vertices) == 2:
            seg = [g.vertices[0], g.vertices[1]]
        else:
            v, r = g.vertices[0], g.rays[0]
            seg = [v, tuple(x + 4 * (R + max(abs(y) for y in v) + 1) * y for x, y in zip(v, r))]
        for axis in range(X.n):
            seg = clip_segment(seg, axis, R)
            if seg is None:
                break
        if seg:
            lines.append(f"l {vid(seg[0])} {vid(seg[1])}")
    for name, paths in (polylines or {}).items():
        lines.append(f"g {name}")
        for path in paths:
            ids = [vid(tuple(Fraction(x) for x in p)) for p in path]
            if len(ids) >= 2:
                lines.append("l " + " ".join(map(str, ids)))
    return "\n".join(lines) + "\n"


def clip_segment(seg, axis, R):
    a, b = seg
    for bound, below in ((R, True), (-R, False)):
        ina = a[axis] <= bound if below else a[axis] >= bound
        inb = b[axis] <= bound if below else b[axis] >= bound
        if not ina and not inb:
            return None
        if not ina:
            a = _cut(a, b, axis, bound)
        elif not inb:
            b = _cut(a, b, axis, bound)
    return [a, b]
