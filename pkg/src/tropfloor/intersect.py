"""Tropical 1-cycles, transversal intersection of framed (1,1)-cycles, and intersection forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chains import EMPTY, ChainError, FramedCell, FramedChain, as_point, chain_along, pieces
from .lattice import solve
from .polyhedral import CompactComplex, _any_solution


class NotTransversal(ValueError):
    pass


# --------------------------------------------------------------------------- weighted 1-cycles

@dataclass(frozen=True)
class WeightedEdge:
    start: tuple
    end: tuple | None
    direction: tuple[int, ...]       # primitive; from start towards end, or along the ray
    weight: int = 1


@dataclass
class Weighted1Cycle:
    edges: list[WeightedEdge] = field(default_factory=list)

    def vertices(self) -> list[tuple]:
        vs = set()
        for e in self.edges:
            vs.add(e.start)
            if e.end is not None:
                vs.add(e.end)
        return sorted(vs)


def edge(start, end=None, direction=None, weight=1) -> WeightedEdge:
    from .lattice import primitive
    start = as_point(start)
    if end is not None:
        end = as_point(end)
        direction = primitive([b - a for a, b in zip(start, end)])
    return WeightedEdge(start, end, tuple(int(x) for x in direction), int(weight))


def check_balanced(A: Weighted1Cycle) -> tuple[bool, tuple | None]:
    """Sum of weighted outgoing primitive directions at every vertex is zero."""
    acc: dict[tuple, list] = {}
    for e in A.edges:
        n = len(e.direction)
        s = acc.setdefault(e.start, [0] * n)
        for i, x in enumerate(e.direction):
            s[i] += e.weight * x
        if e.end is not None:
            t = acc.setdefault(e.end, [0] * n)
            for i, x in enumerate(e.direction):
                t[i] -= e.weight * x
    for v in sorted(acc):
        if any(acc[v]):
            return False, v
    return True, None


def cyc(A: Weighted1Cycle, X: CompactComplex) -> FramedChain:
    """The parallel (1,1)-cycle: each edge framed by its own primitive direction, times its weight."""
    ok, bad = check_balanced(A)
    if not ok:
        raise ValueError(f"1-cycle not balanced at {[str(x) for x in bad]}")
    out = FramedChain()
    for e in A.edges:
        if e.end is None:
            out = out + chain_along(X, [e.start], e.direction, ray=e.direction, weight=e.weight)
        else:
            out = out + chain_along(X, [e.start, e.end], e.direction, weight=e.weight)
    return out


# --------------------------------------------------------------------------- transversal intersection

def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _in_range(t, cell: FramedCell) -> int:
    """-1 outside, 0 at an endpoint, 1 in the open parameter interval."""
    if t < 0 or (cell.end is not None and t > 1):
        return -1
    if t == 0 or (cell.end is not None and t == 1):
        return 0
    return 1


def _dependent(u, v) -> bool:
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def _meet(a: FramedCell, b: FramedCell):
    """The unique intersection point of two cells, None if disjoint; raises on overlaps."""
    u, v, w = a.vector, b.vector, _sub(b.start, a.start)
    if _dependent(u, v):
        if not _dependent(u, w):
            return None
        k = next(i for i in range(len(u)) if u[i])
        t0 = w[k] / u[k]
        if b.end is not None:
            t1 = (b.end[k] - a.start[k]) / u[k]
            lo, hi = min(t0, t1), max(t0, t1)
        elif v[k] / u[k] > 0:
            lo, hi = t0, None
        else:
            lo, hi = None, t0
        a_hi = None if a.end is None else Fraction(1)
        lo = Fraction(0) if lo is None else max(Fraction(0), lo)
        hi = a_hi if hi is None else (hi if a_hi is None else min(hi, a_hi))
        if hi is None or lo <= hi:
            raise NotTransversal(f"collinear overlap near {[str(x) for x in a.point_at(lo)]}")
        return None
    n = len(u)
    rows = [[u[i], -v[i]] for i in range(n)]
    try:
        sol = _any_solution(rows, list(w))
    except ValueError:
        return None
    if sol is None:
        return None
    s, t = sol
    if any(u[i] * s - v[i] * t != w[i] for i in range(n)):
        return None
    ra, rb = _in_range(s, a), _in_range(t, b)
    if ra < 0 or rb < 0:
        return None
    x = a.point_at(s)
    if ra == 0 or rb == 0:
        raise NotTransversal(f"chains meet at a cell endpoint {[str(c) for c in x]}")
    return x


def local_multiplicity(X: CompactComplex, x, a: FramedCell, b: FramedCell) -> int:
    """sign det(a, b) * det(phi_a, phi_b) in a basis of the facet lattice, times the weights."""
    host = X.locate(EMPTY, x)
    if host is None or host.dim != X.n - 1 or host.id != a.host or host.id != b.host:
        got = None if host is None else host.dim
        raise NotTransversal(f"intersection at {[str(c) for c in x]} is not interior to a facet (dim {got})")
    T = [list(c) for c in host.tangent]

    def coords(vec):
        c = solve(T, list(vec))
        if c is None:
            raise NotTransversal("vector not tangent to the facet")
        return c

    ca, cb = coords(a.vector), coords(b.vector)
    fa, fb = coords(a.framing), coords(b.framing)
    d = ca[0] * cb[1] - ca[1] * cb[0]
    sgn = (d > 0) - (d < 0)
    m = fa[0] * fb[1] - fa[1] * fb[0]
    return a.weight * b.weight * sgn * int(m)


def intersection_points(alpha: FramedChain, beta: FramedChain, X: CompactComplex) -> list[tuple]:
    """[(point, multiplicity)] over all crossings of the two chains."""
    out = []
    for a in alpha.cells:
        for b in beta.cells:
            x = _meet(a, b)
            if x is not None:
                out.append((x, local_multiplicity(X, x, a, b)))
    return out


def transversal_intersection(alpha: FramedChain, beta: FramedChain, X: CompactComplex) -> int:
    return sum(m for _, m in intersection_points(alpha, beta, X))


# --------------------------------------------------------------------------- bent fibre near a vertex

@dataclass
class LocalModel:
    """A closed framed graph near the vertex Y of a fibre E: nodes U_i on the four floor edges at Y,
    segments [U_i, U_j] in the six facets, vertical rays from U_i into the two walls."""

    vertex: tuple
    rays: list[tuple]                 # floor edge directions r_1..r_4 (r_1, r_2 bound the lower wall)
    nodes: list[tuple]
    chain: FramedChain
    segment_framings: dict            # (i, j) -> framing


def _floor_edges(FS, k, x):
    """Planar directions of the two curve edges through x, as [(w, curve index)] in both senses."""
    out = []
    for j in (k + 1, k):
        e = FS.curves[j].edge_at(x)
        if e is None:
            raise NotTransversal("fibre base point is not an edge crossing")
        w = e.direction
        out += [(w, j), (tuple(-a for a in w), j)]
    return out


def _nullspace_solution(rows, rhs, prefer_zero: Sequence[int]):
    """A rational solution with as many of the ``prefer_zero`` unknowns vanishing as possible."""
    from itertools import combinations
    n = len(rows[0])
    for r in range(len(prefer_zero), -1, -1):
        for zs in combinations(prefer_zero, r):
            extra = [[int(i == z) for i in range(n)] for z in zs]
            try:
                sol = _any_solution(rows + extra, list(rhs) + [0] * len(zs))
            except ValueError:
                continue
            return sol, set(zs)
    raise ValueError("inconsistent local system")


def bent_fibre(Y: CompactComplex, FS, x, ray_weights=((1, 0), (1, 0))) -> LocalModel:
    """The deformation of the fibre over x, closed by solving for the facet framings.

    ``ray_weights`` split the unit weight of the lower and upper vertical rays
    between the two nodes bounding each wall.
    """
    k = FS.d - 1
    x = as_point(x)
    Yv = FS.lift(k, x)
    dirs = _floor_edges(FS, k, x)
    eps = None
    for w, _ in dirs:
        ts = FS._breaks(k, x, w, None)
        t = ts[0] / 2 if ts else Fraction(1)
        eps = t if eps is None else min(eps, t)
    nodes = [FS.lift(k, tuple(a + eps * b for a, b in zip(x, w))) for w, _ in dirs]
    rays = [tuple(b - a for a, b in zip(Yv, U)) for U in nodes]
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    hosts = {}
    for i, j in pairs:
        pcs = pieces(Y, nodes[i], nodes[j])
        if len(pcs) != 1 or pcs[0][2].dim != 2:
            raise NotTransversal("local segment leaves its facet")
        hosts[(i, j)] = pcs[0][2]
    down = (0, 0, -1)
    up = (0, 0, 1)
    ray_dir = [down, down, up, up]
    aw = [ray_weights[0][0], ray_weights[0][1], ray_weights[1][0], ray_weights[1][1]]
    # unknowns: two tangent coordinates per segment
    cols = []
    for p in pairs:
        T = hosts[p].tangent
        cols.append((p, T))
    nunk = 2 * len(pairs)
    rows, rhs = [], []
    for i in range(4):
        for c in range(3):
            row = [Fraction(0)] * nunk
            for n, ((a, b), T) in enumerate(cols):
                sgn = 1 if b == i else (-1 if a == i else 0)
                if sgn:
                    row[2 * n] += sgn * T[0][c]
                    row[2 * n + 1] += sgn * T[1][c]
            rows.append(row)
            rhs.append(aw[i] * ray_dir[i][c])
    # prefer solutions avoiding the two wall segments, so the fibre is met once
    wall_unk = [2 * pairs.index((0, 1)), 2 * pairs.index((0, 1)) + 1,
                2 * pairs.index((2, 3)), 2 * pairs.index((2, 3)) + 1]
    sol, _ = _nullspace_solution(rows, rhs, wall_unk)
    chain = FramedChain(label="E'")
    framings = {}
    for n, ((a, b), T) in enumerate(cols):
        fr = tuple(sol[2 * n] * T[0][c] + sol[2 * n + 1] * T[1][c] for c in range(3))
        if any(f.denominator != 1 for f in fr):
            raise ValueError("local framing is not integral")
        fr = tuple(int(f) for f in fr)
        framings[(a, b)] = fr
        if any(fr):
            chain.cells.append(FramedCell(nodes[a], nodes[b], None, hosts[(a, b)].id, fr, 1))
    for i in range(4):
        if aw[i]:
            chain = chain + chain_along(Y, [nodes[i]], ray_dir[i], ray=ray_dir[i], weight=aw[i])
    return LocalModel(Yv, rays, nodes, chain, framings)


# --------------------------------------------------------------------------- forms and signatures

STAR = None          # unknown entry


@dataclass
class IntersectionForm:
    labels: list[str]
    tags: list[str]                        # A1, A2, v, B, C, E, L
    entries: list[list[int | None]]
    asserted: list[str] = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    def known(self) -> bool:
        return all(x is not None for row in self.entries for x in row)

    def to_json(self) -> dict:
        return {"labels": self.labels, "tags": self.tags, "matrix": self.entries,
                "asserted": self.asserted, "checks": self.checks}


def exact_signature(M: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) of a rational symmetric matrix by congruence diagonalization."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if A[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in idx for j in idx if i != j and A[i][j] != 0), None)
            if pair is None:
                zero += len(idx)
                break
            i, j = pair
            # row/column i += row/column j makes the diagonal entry 2 a_ij
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            piv = i
        p = A[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in idx if k != piv]
        for r in rest:
            f = A[r][piv] / p
            if f:
                for c in idx:
                    A[r][c] -= f * A[piv][c]
        for r in rest:
            A[piv][r] = A[r][piv] = Fraction(0)
        idx = rest
    return pos, neg, zero


STAR_ALLOWED = {frozenset(("v",)), frozenset(("v", "B")), frozenset(("B",)), frozenset(("B", "A1")),
                frozenset(("B", "A2"))}


def signature(Q: IntersectionForm) -> dict:
    """Signature of a form, eliminating ★ entries through the β-γ pairing when needed."""
    if Q.known():
        p, n, z = exact_signature(Q.entries)
        return {"signature": [p, n, z], "asserted": []}
    t = Q.tags
    for i in range(Q.size):
        for j in range(Q.size):
            if Q.entries[i][j] is None and frozenset((t[i], t[j])) not in STAR_ALLOWED:
                raise ValueError(f"unknown entry at ({Q.labels[i]}, {Q.labels[j]}) cannot be eliminated")
    B = [i for i in range(Q.size) if t[i] == "B"]
    C = [i for i in range(Q.size) if t[i] == "C"]
    if len(B) != len(C):
        raise ValueError("B and C blocks differ in size")
    for a, i in enumerate(B):
        for b, j in enumerate(C):
            if Q.entries[i][j] != int(a == b):
                raise ValueError("B-C block is not the identity")
    for j in C:
        for i in range(Q.size):
            if t[i] != "B" and Q.entries[i][j] != 0:
                raise ValueError("C is not orthogonal to the rest")
    # γ-columns clear β rows against A and v, leaving the A ⊕ v ⊕ hyperbolic splitting
    rest = [i for i in range(Q.size) if t[i] in ("A1", "A2")]
    p, n, z = exact_signature([[Q.entries[i][j] for j in rest] for i in rest])
    v = [i for i in range(Q.size) if t[i] == "v"]
    asserted = []
    for i in v:
        if any(Q.entries[i][j] != 0 for j in rest):
            raise ValueError("v is not orthogonal to the A block")
        if Q.entries[i][i] is None:
            asserted.append("v contributes +1 to the signature")
            p += 1
        else:
            s = Q.entries[i][i]
            p, n, z = p + (s > 0), n + (s < 0), z + (s == 0)
    return {"signature": [p + len(B), n + len(B), z], "asserted": asserted}


def form_Xd_dminus1(Y: CompactComplex, seed: int = 0) -> IntersectionForm:
    """Intersection form on the fibres E_k and the lifted line, every entry computed transversally."""
    from .floors import FloorSurface, exceptional_cycles, generic_center, lifted_line
    FS = FloorSurface(Y)
    d = FS.d
    ex = exceptional_cycles(Y, seed)
    k = d - 1
    c2 = generic_center(FS, k, seed + 1, avoid=ex.center)
    L2 = cyc(lifted_line(FS, k, c2), Y)
    m = len(ex.E)
    M = [[0] * (m + 1) for _ in range(m + 1)]
    M[0][0] = transversal_intersection(ex.L, L2, Y)
    for i, e in enumerate(ex.E, start=1):
        M[0][i] = M[i][0] = transversal_intersection(ex.L, e, Y)
        M[i][i] = transversal_intersection(e, bent_fibre(Y, FS, ex.points[i - 1]).chain, Y)
        for j in range(i + 1, m + 1):
            M[i][j] = M[j][i] = transversal_intersection(e, ex.E[j - 1], Y)
    labels = ["L"] + [e.label for e in ex.E]
    return IntersectionForm(labels, ["L"] + ["E"] * m, M)


def floor_block(Q: IntersectionForm) -> list[list[int]]:
    """Gram matrix of the differences E_s - E_{s+1} (the floor cycles of the top floor)."""
    E = [i for i, t in enumerate(Q.tags) if t == "E"]
    D = [[int(r == E[s]) - int(r == E[s + 1]) for r in range(Q.size)] for s in range(len(E) - 1)]
    return [[sum(a[r] * Q.entries[r][c] * b[c] for r in range(Q.size) for c in range(Q.size))
             for b in D] for a in D]


@dataclass
class FormAssembly:
    form: IntersectionForm
    sub_forms: dict[int, IntersectionForm]       # i -> form of X_{i+1,i}


def assemble_form(plan, cycles: dict | None = None, X: CompactComplex | None = None,
                  seed: int = 0, verify_disjoint: bool = True) -> FormAssembly:
    """The form on H_{1,1}(X_d) in the basis A, v, β, γ, with ★ where no value is certified."""
    from .floors import build_Xd_dminus1
    d = plan.degree
    subs: dict[int, IntersectionForm] = {}
    blocks = []
    for i in range(1, d):
        Y = build_Xd_dminus1(plan.curves[i].poly, plan.curves[i - 1].poly)
        subs[i] = form_Xd_dminus1(Y, seed)
        blocks.append(floor_block(subs[i]))
    labels, tags = [], []
    for i in range(1, d):
        n = len(blocks[i - 1])
        labels += [f"A[{i}][{s}]" for s in range(n)]
        tags += ["A2" if i == d - 1 else "A1"] * n
    g = [plan.curves[i - 1].genus() for i in range(1, d)]
    labels.append("v")
    tags.append("v")
    labels += [f"beta[{i}][{n}]" for i in range(1, d) for n in range(g[i - 1])]
    tags += ["B"] * sum(g)
    labels += [f"gamma[{i}][{n}]" for i in range(1, d) for n in range(g[i - 1])]
    tags += ["C"] * sum(g)
    N = len(labels)
    M: list[list[int | None]] = [[0] * N for _ in range(N)]
    off = 0
    for blk in blocks:
        for a, row in enumerate(blk):
            for b, x in enumerate(row):
                M[off + a][off + b] = x
        off += len(blk)
    pos = {l: i for i, l in enumerate(labels)}
    B = [i for i, t in enumerate(tags) if t == "B"]
    C = [i for i, t in enumerate(tags) if t == "C"]
    for a, i in enumerate(B):
        for b, j in enumerate(C):
            M[i][j] = M[j][i] = int(a == b)
    for i in range(N):
        for j in range(N):
            if frozenset((tags[i], tags[j])) in STAR_ALLOWED:
                M[i][j] = STAR
    Q = IntersectionForm(labels, tags, M, ["v contributes +1 to the signature"])
    if verify_disjoint and cycles is not None and X is not None:
        Q.checks = _verify_zero_entries(Q, cycles, X)
    return FormAssembly(Q, subs)


def _host_closures(chain: FramedChain, X: CompactComplex) -> set[int]:
    out = set()
    for c in chain.cells:
        out |= X.closure(c.host)
    return out


def _verify_zero_entries(Q: IntersectionForm, cycles: dict, X: CompactComplex) -> dict:
    """Cross-check structurally zero entries: disjoint supports give zero, and transversal
    crossings must sum to zero."""
    stats = {"disjoint": 0, "transversal_zero": 0, "not_transversal": 0, "conflicts": []}
    closures = {l: _host_closures(c, X) for l, c in cycles.items()}
    N = Q.size
    for i in range(N):
        for j in range(i + 1, N):
            li, lj = Q.labels[i], Q.labels[j]
            if Q.entries[i][j] != 0 or li not in cycles or lj not in cycles:
                continue
            if not closures[li] & closures[lj]:
                stats["disjoint"] += 1
                continue
            try:
                pts = intersection_points(cycles[li], cycles[lj], X)
            except NotTransversal:
                stats["not_transversal"] += 1
                continue
            if not pts:
                stats["disjoint"] += 1
            elif sum(m for _, m in pts) == 0:
                stats["transversal_zero"] += 1
            else:
                stats["conflicts"].append([li, lj, sum(m for _, m in pts)])
    return stats


# --------------------------------------------------------------------------- theorem checks

def h11_formula(d: int) -> int:
    return (2 * d ** 3 - 6 * d ** 2 + 7 * d) // 3


def interior_points(d: int) -> int:
    """Interior lattice points of the degree-d simplex in dimension 3."""
    return (d - 1) * (d - 2) * (d - 3) // 6


def _check(name, expected, got) -> dict:
    return {"check": name, "expected": expected, "got": got, "pass": expected == got}


def _sign(sig) -> int:
    return sig[0] - sig[1]


def verify_theorem(d: int, seed: int = 0, max_degree: int = 5) -> dict:
    """Rank, basis, signature, additivity and rank recursion checks on a synthesized X_d."""
    from .floors import (FloorSurface, basis_cycles, build_Xd_dminus1, make_floor_plan,
                         surface_from_floor_plan, synth_floor_plan)
    from .chains import is_cycle, validate_chain
    from .homology import chain_complex, homology_from_complex

    if not 1 <= d <= max_degree:
        raise ValueError(f"degree {d} outside 1..{max_degree}")
    plan = synth_floor_plan(d, seed)
    _, X = surface_from_floor_plan(plan)
    checks = []
    C1 = chain_complex(X, 1)
    h = homology_from_complex(C1, 1)
    b2 = interior_points(d)
    checks.append(_check("h11 equals rank formula", h11_formula(d), h.rank))
    checks.append(_check("H11 torsion free", [], list(h.torsion)))

    basis = basis_cycles(X)
    counts = {k: len(v) for k, v in basis.items()}
    checks.append(_check("basis sizes", {"A": (d ** 3 - 4 * d + 3) // 3, "gamma": b2, "beta": b2, "v": 1},
                         counts))
    checks.append(_check("basis total equals h11", h.rank, sum(counts.values())))
    chains = [c for v in basis.values() for c in v]
    bad = [c.label for c in chains if not is_cycle(c, X) or validate_chain(c, X)]
    checks.append(_check("every basis chain is a valid cycle", [], bad))

    cycles = {c.label: c for c in chains}
    fa = assemble_form(plan, cycles, X, seed)
    sig = signature(fa.form)
    checks.append(_check("signature", [1 + b2, h.rank - 1 - b2, 0], sig["signature"]))
    checks.append(_check("structural zeros not contradicted", [], fa.form.checks.get("conflicts", [])))

    if d >= 2:
        Y = build_Xd_dminus1(plan.curves[d - 1].poly, plan.curves[d - 2].poly)
        CY = chain_complex(Y, 1)
        checks.append(_check("h11 of X_{d,d-1}", d * (d - 1) + 1, homology_from_complex(CY, 1).rank))
        checks.append(_check("h12 of X_{d,d-1}", 0, homology_from_complex(CY, 2).rank))
        sub = signature(fa.sub_forms[d - 1])["signature"]
        checks.append(_check("signature of X_{d,d-1}", [1, d * (d - 1), 0], sub))
        if d == 2:
            prev_sig, prev_h = [1, 0, 0], 1
        else:
            prev = make_floor_plan([c.poly for c in plan.curves[:d - 1]])
            _, Xp = surface_from_floor_plan(prev)
            prev_h = homology_from_complex(chain_complex(Xp, 1), 1).rank
            prev_sig = signature(assemble_form(prev, seed=seed).form)["signature"]
        checks.append(_check("signature additivity", _sign(prev_sig) + _sign(sub), _sign(sig["signature"])))
        g = plan.curves[d - 2].genus()
        checks.append(_check("rank recursion", prev_h + d * (d - 1) + 2 * g - 1, h.rank))
    return {"degree": d, "seed": seed, "h11": h.rank, "b2": b2, "signature": sig["signature"],
            "asserted": sig["asserted"], "checks": checks,
            "pass": all(c["pass"] for c in checks)}
