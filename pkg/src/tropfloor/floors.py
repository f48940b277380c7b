"""Floor decompositions: analysis, synthesis from floor plans, and explicit (1,1)-cycles.

Surfaces here are ``f = max_k ((d-k) x3 + b_k + f_k(x1, x2))`` for k = 0..d, with
``f_0 = 0`` and ``f_k`` a degree-k plane curve polynomial. The level-k curve
C_k is the corner locus of f_k; the floor F_{k+1,k} is the graph of
``z_k = (b_{k+1} + f_{k+1}) - (b_k + f_k)`` and the wall over C_k runs between
the floors z_k (below) and z_{k-1} (above).
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chains import EMPTY, FramedChain, as_point, chain_along, envelope_pieces
from .hull import DegenerateConfiguration
from .lattice import det, primitive
from .polyhedral import (AffineComplex, CompactComplex, compactify, hypersurface,
                         projective_space, toric_delta)
from .troppoly import (PolynomialError, Subdivision, TropicalPolynomial, dual_subdivision,
                       honeycomb_height, is_primitive, normalized_volume, polynomial_from_heights,
                       restrict_to_level)

E3 = (0, 0, 1)


class FloorPlanError(ValueError):
    pass


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


# --------------------------------------------------------------------------- analysis

def is_floor_decomposed(f: TropicalPolynomial, S: Subdivision | None = None) -> bool:
    """Primitive subdivision whose slice at every level a3 = d-k is a primitive triangulation of kΔ2."""
    if f.dim != 3:
        return False
    S = S or dual_subdivision(f)
    if not is_primitive(S)[0]:
        return False
    d = f.degree
    for k in range(1, d + 1):
        a3 = d - k
        tris = [c for c, m in S.cells.items() if m == 2 and all(p[2] == a3 for p in c)]
        vols = [normalized_volume([p[:2] for p in c]) if len(c) == 3 else 0 for c in tris]
        if any(v != 1 for v in vols) or sum(vols) != k * k:
            return False
    return True


@dataclass
class CurveEdge:
    id: int
    dual: frozenset
    start: tuple
    end: tuple | None
    direction: tuple[int, int]      # primitive, pointing from start to end (or along the ray)


class PlaneCurve:
    """A plane tropical curve with explicit vertices and edges in R^2."""

    def __init__(self, poly: TropicalPolynomial):
        if poly.dim != 2:
            raise PolynomialError("plane curves need two variables")
        self.poly = poly
        self.affine: AffineComplex = hypersurface(poly)
        self.vertices = [as_point(c.geometry.vertices[0]) for c in self.affine.cells_of_dim(0)]
        self.edges: list[CurveEdge] = []
        for c in self.affine.cells_of_dim(1):
            g = c.geometry
            vs = [as_point(v) for v in g.vertices]
            if len(vs) == 2:
                u = primitive([b - a for a, b in zip(*vs)])
                self.edges.append(CurveEdge(len(self.edges), c.dual, vs[0], vs[1], tuple(u)))
            elif len(vs) == 1:
                self.edges.append(CurveEdge(len(self.edges), c.dual, vs[0], None,
                                            tuple(int(x) for x in g.rays[0])))
            else:
                raise FloorPlanError("curve with an edge carrying no vertex (a line with no vertex)")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def argmax(self, x) -> frozenset:
        return self.poly.evaluate(x)[1]

    def edge_at(self, x) -> CurveEdge | None:
        arg = self.argmax(x)
        if len(arg) != 2:
            return None
        return next(e for e in self.edges if e.dual == arg)

    def contains(self, x) -> bool:
        return len(self.argmax(x)) >= 2

    def param(self, e: CurveEdge, x) -> Fraction:
        """t with x = start + t*direction."""
        i = 0 if e.direction[0] else 1
        return (Fraction(x[i]) - e.start[i]) / e.direction[i]

    def bounded_graph(self) -> tuple[list[tuple], list[CurveEdge]]:
        return self.vertices, [e for e in self.edges if e.end is not None]

    def genus(self) -> int:
        vs, es = self.bounded_graph()
        return len(es) - len(vs) + 1 if vs else 0


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def curve_intersections(C: PlaneCurve, D: PlaneCurve) -> list[tuple[tuple, CurveEdge, CurveEdge]]:
    """Exact intersection points of two plane curves, each required to be a transversal
    crossing of two open edges with multiplicity one; sorted lexicographically."""
    out = []
    for e in C.edges:
        for g in D.edges:
            u, v = e.direction, g.direction
            w = tuple(b - a for a, b in zip(e.start, g.start))
            den = _cross(u, v)
            if den == 0:
                if _cross(w, u) == 0:
                    lo = [C.param(e, g.start)] + ([C.param(e, g.end)] if g.end is not None else [])
                    raise FloorPlanError(f"curves share a segment along edges {e.id}/{g.id} near {lo}")
                continue
            s = Fraction(_cross(w, v), den)
            t = Fraction(_cross(w, u), den)
            s_max = None if e.end is None else C.param(e, e.end)
            t_max = None if g.end is None else D.param(g, g.end)
            if s < 0 or t < 0 or (s_max is not None and s > s_max) or (t_max is not None and t > t_max):
                continue
            if s == 0 or t == 0 or s == s_max or t == t_max:
                raise FloorPlanError("curves meet at a vertex, not in the interior of edges")
            if abs(den) != 1:
                raise FloorPlanError(f"intersection point of multiplicity {abs(den)}")
            x = tuple(a + s * b for a, b in zip(e.start, u))
            out.append((x, e, g))
    out.sort(key=lambda r: r[0])
    return out


@dataclass
class FloorPlan:
    """Plane curves C_1..C_d with the intersection points of consecutive curves."""

    curves: list[PlaneCurve]
    intersections: dict[int, list[tuple]] = field(default_factory=dict)   # i -> points of C_i ∩ C_{i+1}
    heights: list[Fraction] | None = None

    @property
    def degree(self) -> int:
        return len(self.curves)

    def to_json(self) -> dict:
        doc = {"curves": [c.poly.to_json() for c in self.curves]}
        if self.heights is not None:
            doc["heights"] = [str(h) for h in self.heights]
        return doc


def make_floor_plan(polys: Sequence[TropicalPolynomial], heights=None) -> FloorPlan:
    """Validate the floor-plan conditions: C_k has degree k and a primitive dual
    subdivision, and consecutive curves cross transversally in i(i+1) edge-interior points."""
    curves = []
    for k, p in enumerate(polys, start=1):
        if p.dim != 2 or p.degree != k:
            raise FloorPlanError(f"curve {k} must be a plane curve of degree {k}")
        S = dual_subdivision(p)
        if sorted(S.points) != sorted(a for a in _triangle(k)):
            raise FloorPlanError(f"curve {k} does not have full Newton polygon")
        ok, bad = is_primitive(S)
        if not ok:
            raise FloorPlanError(f"curve {k} is singular: cell {sorted(bad)} is not unimodular")
        curves.append(PlaneCurve(p))
    ints = {}
    for i in range(1, len(curves)):
        pts = curve_intersections(curves[i - 1], curves[i])
        if len(pts) != i * (i + 1):
            raise FloorPlanError(f"C_{i} and C_{i + 1} meet in {len(pts)} points, expected {i * (i + 1)}")
        ints[i] = [x for x, _, _ in pts]
    return FloorPlan(curves, ints, None if heights is None else [Fraction(h) for h in heights])


def _triangle(k):
    return [(a, b) for a in range(k + 1) for b in range(k + 1 - a)]


def floor_plan(f: TropicalPolynomial) -> FloorPlan:
    if not is_floor_decomposed(f):
        raise FloorPlanError("surface is not floor decomposed")
    return make_floor_plan([restrict_to_level(f, k) for k in range(1, f.degree + 1)])


def parse_floor_plan(doc: dict) -> FloorPlan:
    from .troppoly import parse_polynomial, parse_rational
    polys = [parse_polynomial(c) for c in doc["curves"]]
    h = doc.get("heights")
    return make_floor_plan(polys, None if h is None else [parse_rational(x) for x in h])


def surface_polynomial(plan: FloorPlan, heights: Sequence) -> TropicalPolynomial:
    """``max_k ((d-k) x3 + b_k + f_k)``; ``heights`` are b_1..b_d, and b_0 = f_0 = 0."""
    d = plan.degree
    terms = {(0, 0, d): Fraction(0)}
    for k, (C, b) in enumerate(zip(plan.curves, heights), start=1):
        for e, c in C.poly.terms.items():
            terms[(e[0], e[1], d - k)] = c + Fraction(b)
    return TropicalPolynomial(3, d, terms)


def schedule_heights(d: int, gap) -> list[Fraction]:
    """b_k = -gap * k(k-1)/2, so the floor gaps z_{k-1} - z_k grow by ``gap`` per level."""
    return [Fraction(-gap * k * (k - 1), 2) for k in range(1, d + 1)]


def surface_from_floor_plan(plan: FloorPlan, heights: Sequence | None = None,
                            max_doublings: int = 60) -> tuple[TropicalPolynomial, CompactComplex]:
    """Assemble the floor-decomposed surface, choosing heights by doubling a
    uniform gap when none are supplied."""
    d = plan.degree
    if heights is None:
        heights = plan.heights
    if heights is not None:
        if len(heights) != d:
            raise FloorPlanError(f"need {d} heights, got {len(heights)}")
        f = surface_polynomial(plan, heights)
        try:
            ok = is_floor_decomposed(f)
        except DegenerateConfiguration:
            ok = False
        if not ok:
            raise FloorPlanError("supplied heights do not give a floor decomposed surface")
        return f, compactify(hypersurface(f), projective_space(3))
    gap = Fraction(1)
    for _ in range(max_doublings):
        f = surface_polynomial(plan, schedule_heights(d, gap))
        if is_floor_decomposed(f):
            return f, compactify(hypersurface(f), projective_space(3))
        gap *= 2
    raise FloorPlanError("height scheduler failed to separate the floors")


def _random_shift(rng: random.Random, scale: int = 1) -> tuple[Fraction, Fraction]:
    return tuple(Fraction(rng.randint(-97 * scale, 97 * scale), 97) for _ in range(2))


def synth_floor_plan(d: int, seed: int = 0, attempts: int = 200) -> FloorPlan:
    """Honeycomb curves of degrees 1..d, each translated by a seeded random
    rational vector until consecutive curves meet transversally."""
    rng = random.Random(seed)
    polys = [polynomial_from_heights(2, k, honeycomb_height) for k in range(1, d + 1)]
    chosen: list[TropicalPolynomial] = []
    for k, p in enumerate(polys, start=1):
        for _ in range(attempts):
            q = p.translated(_random_shift(rng, k))
            if k == 1:
                break
            try:
                got = curve_intersections(PlaneCurve(chosen[-1]), PlaneCurve(q))
            except FloorPlanError:
                continue
            if len(got) == (k - 1) * k:
                break
        else:
            raise FloorPlanError(f"could not place curve {k} transversally")
        chosen.append(q)
    return make_floor_plan(chosen)


def synth_surface(d: int, seed: int = 0):
    plan = synth_floor_plan(d, seed)
    f, X = surface_from_floor_plan(plan)
    return plan, f, X


def build_Xd_dminus1(fd: TropicalPolynomial, fd1: TropicalPolynomial | None) -> CompactComplex:
    """The graph of f_d - f_{d-1} closed up in the toric threefold of the prism-like polytope Δ.

    ``fd1`` None stands for the constant f_0 = 0 (d = 1).
    """
    d = fd.degree
    if fd1 is None:
        fd1 = TropicalPolynomial(2, 1, {(0, 0): Fraction(0)})
    elif fd1.degree != d - 1:
        raise FloorPlanError("curve degrees must be d and d-1")
    terms = {(e[0], e[1], 0): c for e, c in fd.terms.items()}
    terms.update({(e[0], e[1], 1): c for e, c in fd1.terms.items()})
    g = TropicalPolynomial(3, d, terms)
    # for d = 1 the polytope is the unit simplex and the ambient is projective space
    return compactify(hypersurface(g), toric_delta() if d > 1 else projective_space(3))


def boundary_curve_count(X: CompactComplex) -> int:
    """Number of two-dimensional boundary strata meeting the surface in a curve."""
    return sum(1 for s, st in X.strata.items() if len(s) == 1 and st.dim == 2
               and any(c.sedentarity == s for c in X.cells))


# --------------------------------------------------------------------------- curve graphs

def curve_graph(C: PlaneCurve, marks: Sequence = ()) -> dict[tuple, list[tuple]]:
    """Adjacency of the bounded part of C with ``marks`` inserted as extra nodes."""
    on_edge: dict[int, list[tuple]] = {e.id: [] for e in C.edges}
    for x in marks:
        x = as_point(x)
        e = C.edge_at(x)
        if e is not None:
            on_edge[e.id].append(x)
        elif x not in C.vertices:
            raise FloorPlanError(f"point {[str(v) for v in x]} is not on the curve")
    adj: dict[tuple, list[tuple]] = {v: [] for v in C.vertices}
    for e in C.edges:
        pts = sorted(set(on_edge[e.id]), key=lambda x: C.param(e, x))
        chain = [e.start] + pts + ([e.end] if e.end is not None else [])
        for a, b in zip(chain, chain[1:]):
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        for x in pts:
            adj.setdefault(x, [])
    for v in adj:
        adj[v].sort()
    return adj


def shortest_path(adj: dict, a, targets) -> list[tuple]:
    """Breadth-first path from ``a`` to the nearest node in ``targets`` (neighbours in lexicographic order)."""
    a = as_point(a)
    targets = {as_point(t) for t in targets}
    prev = {a: None}
    dq = deque([a])
    while dq:
        u = dq.popleft()
        if u in targets:
            path = [u]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                dq.append(w)
    raise FloorPlanError("no path along the curve")


@dataclass
class BreakingData:
    points: list[tuple]                  # (point, primitive framing along its edge)
    tree: list[int]                      # edge ids of the spanning tree
    loops: list[list[tuple]]             # closed polylines, first point == last point


def curve_breaking_points(C: PlaneCurve) -> BreakingData:
    """Midpoints of the bounded edges left out of a DFS spanning tree, with their dual loops."""
    verts, edges = C.bounded_graph()
    if not verts:
        return BreakingData([], [], [])
    inc: dict[tuple, list[CurveEdge]] = {v: [] for v in verts}
    for e in edges:
        inc[e.start].append(e)
        inc[e.end].append(e)
    leaves = sorted(v for v in verts if len(inc[v]) == 1)
    root = leaves[0] if leaves else min(verts)
    seen, tree, parent = {root}, [], {root: None}
    stack = [root]
    while stack:
        u = stack.pop()
        for e in sorted(inc[u], key=lambda e: e.id, reverse=True):
            w = e.end if e.start == u else e.start
            if w not in seen:
                seen.add(w)
                tree.append(e.id)
                parent[w] = u
                stack.append(w)
    tset = set(tree)
    tadj: dict[tuple, list[tuple]] = {v: [] for v in verts}
    for e in edges:
        if e.id in tset:
            tadj[e.start].append(e.end)
            tadj[e.end].append(e.start)
    pts, loops = [], []
    for e in sorted(edges, key=lambda e: e.id):
        if e.id in tset:
            continue
        mid = tuple((a + b) / 2 for a, b in zip(e.start, e.end))
        pts.append((mid, e.direction))
        back = shortest_path(tadj, e.end, [e.start])
        loops.append([mid, e.end] + back[1:] + [mid])
    return BreakingData(pts, tree, loops)


# --------------------------------------------------------------------------- floors of a surface

class FloorSurface:
    """Level polynomials, floor heights and the up/down wall chains W and D on a compactified
    surface ``max_j ((d-j) x3 + L_j(x))`` whose curves C_j are the corner loci of L_j."""

    def __init__(self, X: CompactComplex):
        self.X = X
        f = X.poly
        self.d = d = f.degree
        self.levels: dict[int, dict] = {}
        for e, c in f.terms.items():
            self.levels.setdefault(d - e[2], {})[e[:2]] = c
        self.curves: dict[int, PlaneCurve] = {}
        for j, terms in self.levels.items():
            if j >= 1:
                self.curves[j] = PlaneCurve(TropicalPolynomial(2, j, terms))
        self.floors = sorted(j for j in self.levels if j + 1 in self.levels)
        self._ints: dict[int, list[tuple]] = {}

    # heights
    def L(self, j, x):
        return max(c + _dot(a, x) for a, c in self.levels[j].items())

    def z(self, k, x):
        """Height of the floor F_{k+1,k} over x."""
        return self.L(k + 1, x) - self.L(k, x)

    def lift(self, k, x):
        x = as_point(x)
        return x + (self.z(k, x),)

    def gradient(self, k, x):
        """Gradient of z_k at a point off C_k and C_{k+1}."""
        got = []
        for j in (k + 1, k):
            vals = {a: c + _dot(a, x) for a, c in self.levels[j].items()}
            m = max(vals.values())
            arg = [a for a, v in vals.items() if v == m]
            if len(arg) != 1:
                raise FloorPlanError("gradient requested on a curve")
            got.append(arg[0])
        return tuple(p - q for p, q in zip(*got))

    def intersections(self, k) -> list[tuple]:
        """C_k ∩ C_{k+1}, sorted lexicographically."""
        if k not in self._ints:
            self._ints[k] = [x for x, _, _ in curve_intersections(self.curves[k], self.curves[k + 1])]
        return self._ints[k]

    def _breaks(self, k, a, u, t_end):
        ts = set()
        for j in (k, k + 1):
            for t0, t1, _ in envelope_pieces(self.levels[j], a, u, t_end):
                if t0 > 0:
                    ts.add(t0)
        return sorted(ts)

    def lift_polyline(self, k, pts) -> list[tuple]:
        pts = [as_point(p) for p in pts]
        out = [self.lift(k, pts[0])]
        for a, b in zip(pts, pts[1:]):
            u = tuple(y - x for x, y in zip(a, b))
            for t in self._breaks(k, a, u, 1):
                if t < 1:
                    out.append(self.lift(k, tuple(x + t * y for x, y in zip(a, u))))
            out.append(self.lift(k, b))
        return out

    def lift_ray(self, k, a, u) -> tuple[list[tuple], tuple[int, ...]]:
        """Lifted vertices of the ray a + t u and the direction of its unbounded piece."""
        a = as_point(a)
        ts = self._breaks(k, a, u, None)
        pts = [self.lift(k, a)] + [self.lift(k, tuple(x + t * y for x, y in zip(a, u))) for t in ts]
        last = tuple(x + (ts[-1] if ts else 0) * y for x, y in zip(a, u))
        far = tuple(x + y for x, y in zip(last, u))
        return pts, tuple(primitive([p - q for p, q in zip(self.lift(k, far), self.lift(k, last))]))

    # chains
    def _vertical(self, pts, weight=1) -> FramedChain:
        return chain_along(self.X, pts, E3, weight=weight)

    def _walk(self, k, j, q, targets) -> tuple[FramedChain, tuple]:
        """Vertically framed lift to F_{k+1,k} of a path along C_j from q to the nearest target."""
        adj = curve_graph(self.curves[j], [q] + list(targets))
        path = shortest_path(adj, q, targets)
        if len(path) == 1:
            return FramedChain(), path[0]
        return self._vertical(self.lift_polyline(k, path)), path[-1]

    def top_rays(self, q) -> FramedChain:
        """Walk C_1 on the top floor from q to its vertex, then the three rays framed by their directions."""
        C1 = self.curves[1]
        walk, V = self._walk(0, 1, q, C1.vertices)
        out = walk
        for e in C1.edges:
            pts, r = self.lift_ray(0, V, e.direction)
            out = out + chain_along(self.X, pts, r, ray=r)
        return out

    def up(self, q, k) -> FramedChain:
        """W(q): boundary -e3 at the lift of q to F_{k+1,k}; climbs walls to the top floor."""
        q = as_point(q)
        if k == 0:
            return self.top_rays(q)
        if self.curves[k].contains(q):
            p, walk = q, FramedChain()
        else:
            walk, p = self._walk(k, k + 1, q, self.intersections(k))
        climb = self._vertical([self.lift(k, p), self.lift(k - 1, p)])
        return walk + climb + self.up(p, k - 1)

    def down(self, q, k) -> FramedChain:
        """D(q): boundary -e3 at the lift of q to F_{k+1,k}; descends walls to x3 = -inf."""
        q = as_point(q)
        if self.curves[k + 1].contains(q):
            p, walk = q, FramedChain()
        else:
            walk, p = self._walk(k, k, q, self.intersections(k))
        if k + 1 == self.d:
            return walk + chain_along(self.X, [self.lift(k, p)], E3, ray=(0, 0, -1))
        drop = self._vertical([self.lift(k, p), self.lift(k + 1, p)])
        return walk + drop + self.down(p, k + 1)

    def vertical_cycle(self) -> FramedChain:
        d = self.d
        q0 = self.curves[1].vertices[0] if d == 1 else self.intersections(d - 1)[0]
        v = self.up(q0, d - 1) - self.down(q0, d - 1)
        v.label = "v"
        return v

    def a_cycles(self) -> list[FramedChain]:
        out = []
        for i in self.floors:
            if i == 0:
                continue
            xs = self.intersections(i)
            adj_i = curve_graph(self.curves[i], xs)
            adj_j = curve_graph(self.curves[i + 1], xs)
            for s in range(len(xs) - 1):
                p1 = shortest_path(adj_i, xs[s], [xs[s + 1]])
                p2 = shortest_path(adj_j, xs[s + 1], [xs[s]])
                c = self._vertical(self.lift_polyline(i, p1 + p2[1:]))
                c.label = f"A[{i}][{s}]"
                out.append(c)
        return out

    def gamma_cycles(self) -> list[FramedChain]:
        out = []
        for i in self.floors:
            if i == 0:
                continue
            for n, loop in enumerate(curve_breaking_points(self.curves[i]).loops):
                c = self._vertical(self.lift_polyline(i, loop))
                c.label = f"gamma[{i}][{n}]"
                out.append(c)
        return out

    def _tau_lift(self, k, x, phi, u) -> tuple[FramedChain, list[tuple]]:
        """Lift of the ray x + t u to F_{k+1,k} with framing (phi, grad z_k . phi), and the
        vertical jumps of that framing: [(planar point, jump)] with jump = next - previous."""
        pts, r = self.lift_ray(k, x, u)

        def frame(cell, s, e):
            mid = s[:2] if e is None else tuple((a + b) / 2 for a, b in zip(s[:2], e[:2]))
            if e is None:
                mid = tuple(a + b for a, b in zip(s[:2], u))
            g = self.gradient(k, mid)
            return (phi[0], phi[1], _dot(g, phi))

        ch = chain_along(self.X, pts, frame, ray=r)
        jumps = []
        for a, b in zip(ch.cells, ch.cells[1:]):
            jumps.append((b.start[:2], b.framing[2] - a.framing[2]))
        return ch, jumps

    def beta_cycle(self, i, x, phi, u=(-3, -5)) -> FramedChain:
        """The cycle dual to the loop broken at x on C_i (1 <= i < d)."""
        x = as_point(x)
        phi3 = (phi[0], phi[1], 0)
        ch = self.X
        wall = chain_along(ch, [self.lift(i, x), self.lift(i - 1, x)], phi3)
        low, low_jumps = self._tau_lift(i, x, phi, u)
        high, high_jumps = self._tau_lift(i - 1, x, phi, u)
        beta = wall - low + high
        beta.extend(self.up(x, i), low.cells[0].framing[2])
        for q, c in low_jumps:
            beta.extend(self.up(q, i), c)
        beta.extend(self.down(x, i - 1), -high.cells[0].framing[2])
        for q, c in high_jumps:
            beta.extend(self.down(q, i - 1), -c)
        return beta

    def beta_cycles(self) -> list[FramedChain]:
        out = []
        for i in self.floors:
            if i == 0:
                continue
            for n, (x, phi) in enumerate(curve_breaking_points(self.curves[i]).points):
                b = self.beta_cycle_generic(i, x, phi)
                b.label = f"beta[{i}][{n}]"
                out.append(b)
        return out

    def beta_cycle_generic(self, i, x, phi) -> FramedChain:
        """beta_cycle, retrying corner directions when a lift meets a vertex."""
        from .chains import ChainError
        for u in ((-3, -5), (-5, -3), (-7, -11), (-11, -7), (-13, -17)):
            try:
                return self.beta_cycle(i, x, phi, u)
            except (FloorPlanError, ChainError):
                continue
        raise FloorPlanError(f"no generic corner path from the breaking point on C_{i}")


# --------------------------------------------------------------------------- X_{d,d-1}

@dataclass
class ExceptionalCycles:
    E: list[FramedChain]
    L: FramedChain
    points: list[tuple]          # x_k, the base points of the fibres E_k
    center: tuple                # centre of the generic line whose lift is L


def _line_is_generic(FS: FloorSurface, k: int, c) -> bool:
    curves = [FS.curves[j] for j in (k, k + 1)]
    if any(C.contains(c) for C in curves):
        return False
    for w in ((-1, 0), (0, -1), (1, 1)):
        for t in FS._breaks(k, c, w, None):
            q = tuple(a + t * b for a, b in zip(c, w))
            on = [C for C in curves if C.contains(q)]
            if len(on) != 1 or on[0].edge_at(q) is None:
                return False
    return True


def lifted_line(FS: FloorSurface, k: int, c):
    """π^{-1}(L) ∩ F_{k+1,k} plus vertical rays where L crosses the curves, as a weighted 1-cycle."""
    from .intersect import Weighted1Cycle, edge
    c = as_point(c)
    out = []
    for w in ((-1, 0), (0, -1), (1, 1)):
        pts, r = FS.lift_ray(k, c, w)
        for a, b in zip(pts, pts[1:]):
            out.append(edge(a, b))
        out.append(edge(pts[-1], direction=r))
        for i in range(1, len(pts)):
            back = primitive([p - q for p, q in zip(pts[i - 1], pts[i])])
            fwd = primitive([p - q for p, q in zip(pts[i + 1], pts[i])]) if i + 1 < len(pts) else list(r)
            res = back[2] + fwd[2]
            if res:
                out.append(edge(pts[i], direction=(0, 0, -1 if res > 0 else 1), weight=abs(res)))
    return Weighted1Cycle(out)


def generic_center(FS: FloorSurface, k: int, seed: int = 0, avoid=None) -> tuple:
    rng = random.Random(seed)
    xs = FS.intersections(k)
    lo = [min(x[i] for x in xs) for i in range(2)]
    hi = [max(x[i] for x in xs) for i in range(2)]
    for _ in range(1000):
        c = tuple(Fraction(rng.randint(int(lo[i] * 97) - 97, int(hi[i] * 97) + 97), 97) for i in range(2))
        if avoid is not None and (c[0] == avoid[0] or c[1] == avoid[1] or c[0] - c[1] == avoid[0] - avoid[1]):
            continue
        if _line_is_generic(FS, k, c):
            return c
    raise FloorPlanError("no generic line found")


def exceptional_cycles(Y: CompactComplex, seed: int = 0) -> ExceptionalCycles:
    """Fibres E_k over the points of C_{d-1} ∩ C_d and the lifted generic line, on X_{d,d-1}."""
    from .intersect import Weighted1Cycle, cyc, edge
    FS = FloorSurface(Y)
    d = Y.poly.degree
    k = d - 1
    xs = FS.intersections(k) if d > 1 else []
    E = []
    for n, x in enumerate(xs):
        y = FS.lift(k, x)
        e = cyc(Weighted1Cycle([edge(y, direction=(0, 0, 1)), edge(y, direction=(0, 0, -1))]), Y)
        e.label = f"E[{n}]"
        E.append(e)
    c = generic_center(FS, k, seed) if d > 1 else (Fraction(0), Fraction(0))
    L = cyc(lifted_line(FS, k, c), Y)
    L.label = "L"
    return ExceptionalCycles(E, L, xs, c)


# --------------------------------------------------------------------------- decomposition and retracts

def levels_of(cell) -> frozenset[int]:
    """Values of the third exponent over the dual cell."""
    return frozenset(a[2] for a in cell.dual)


@dataclass
class FloorDecomposition:
    floors: list[set[int]]                 # components left after removing vertical cells
    walls: dict[int, set[int]]             # curve index i -> cells of the wall over C_i


def floor_decomposition(X: CompactComplex) -> FloorDecomposition:
    """Split the cells of a floor-decomposed surface into floors (two levels) and walls (one level)."""
    d = X.poly.degree
    walls: dict[int, set[int]] = {}
    keep = set()
    for c in X.cells:
        L = levels_of(c)
        if len(L) == 1:
            walls.setdefault(d - next(iter(L)), set()).add(c.id)
        else:
            keep.add(c.id)
    adj: dict[int, set[int]] = {c: set() for c in keep}
    for c in keep:
        for f in X.boundary[c]:
            if f in keep:
                adj[c].add(f)
                adj[f].add(c)
    comps, seen = [], set()
    for c in sorted(keep):
        if c in seen:
            continue
        comp, todo = set(), [c]
        seen.add(c)
        while todo:
            u = todo.pop()
            comp.add(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        comps.append(comp)
    return FloorDecomposition(comps, walls)


@dataclass
class RetractModels:
    """Closed subcomplexes standing in for the open pieces of X_d = X°_{d-1} ∪ X°_{d,d-1}."""

    upper: list[int]        # retract of X°_{d-1}: levels >= 1 except the wall over C_{d-1}
    lower: list[int]        # retract of X°_{d,d-1}: the bottom floor and the wall over C_d
    overlap: list[int]      # the open wall over C_{d-1}, used with a degree shift of one


def retract_models(X: CompactComplex) -> RetractModels:
    up, lo, ov = [], [], []
    for c in X.cells:
        L = levels_of(c)
        if 0 in L:
            lo.append(c.id)
        elif L == {1}:
            ov.append(c.id)
        else:
            up.append(c.id)
    return RetractModels(up, lo, ov)


def wall_cells(X: CompactComplex, i: int) -> list[int]:
    """Cells of the open wall over C_i."""
    d = X.poly.degree
    return [c.id for c in X.cells if levels_of(c) == {d - i}]


def open_piece_homology(X: CompactComplex) -> dict:
    """h_{1,q} of the wall cylinders and of the two retract models."""
    from .homology import chain_complex, homology_from_complex
    d = X.poly.degree
    out = {"walls": {}, "upper": None, "lower": None}
    for i in range(1, d):
        C = chain_complex(X, 1, cells=wall_cells(X, i), degree_shift=1, check=False)
        out["walls"][i] = [homology_from_complex(C, q).rank for q in range(2)]
    R = retract_models(X)
    for name, ids in (("upper", R.upper), ("lower", R.lower)):
        C = chain_complex(X, 1, cells=ids, check=False)
        out[name] = [homology_from_complex(C, q).rank for q in range(3)]
    return out


def basis_cycles(X: CompactComplex) -> dict[str, list[FramedChain]]:
    """Labelled (1,1)-cycles A, gamma, beta and v of a floor decomposed surface."""
    FS = FloorSurface(X)
    return {"A": FS.a_cycles(), "gamma": FS.gamma_cycles(), "beta": FS.beta_cycles(),
            "v": [FS.vertical_cycle()]}
