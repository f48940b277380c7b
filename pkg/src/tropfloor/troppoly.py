"""Max-plus polynomials over simplices and their dual regular subdivisions."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .hull import DegenerateConfiguration, affine_rank, polytope_faces, upper_hull
from .lattice import det

Exponent = tuple[int, ...]


class PolynomialError(ValueError):
    pass


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise PolynomialError(f"coefficient must be a string 'p/q', got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolynomialError(f"malformed rational {s!r}") from exc


def simplex_points(n: int, d: int) -> list[Exponent]:
    return sorted(a for a in product(range(d + 1), repeat=n) if sum(a) <= d)


@dataclass(frozen=True)
class TropicalPolynomial:
    """``f(x) = max_a (c_a + <a, x>)``; absent exponents have coefficient -inf."""

    dim: int
    degree: int
    terms: Mapping[Exponent, Fraction]

    def __post_init__(self):
        if self.degree < 1:
            raise PolynomialError("degree must be at least 1")
        if not self.terms:
            raise PolynomialError("empty term list")
        for e in self.terms:
            if len(e) != self.dim or min(e) < 0 or sum(e) > self.degree:
                raise PolynomialError(f"exponent {list(e)} outside simplex")

    def evaluate(self, x: Sequence) -> tuple[Fraction, frozenset[Exponent]]:
        vals = {e: c + sum(a * Fraction(xi) for a, xi in zip(e, x)) for e, c in self.terms.items()}
        m = max(vals.values())
        return m, frozenset(e for e, v in vals.items() if v == m)

    def __call__(self, x: Sequence) -> Fraction:
        return self.evaluate(x)[0]

    @property
    def exponents(self) -> list[Exponent]:
        return sorted(self.terms)

    def shifted(self, c) -> "TropicalPolynomial":
        c = Fraction(c)
        return TropicalPolynomial(self.dim, self.degree, {e: v + c for e, v in self.terms.items()})

    def translated(self, t: Sequence) -> "TropicalPolynomial":
        """The polynomial ``x -> f(x - t)``."""
        return TropicalPolynomial(self.dim, self.degree, {
            e: v - sum(a * Fraction(ti) for a, ti in zip(e, t)) for e, v in self.terms.items()})

    def to_json(self) -> dict:
        return {"dim": self.dim, "degree": self.degree,
                "terms": [{"e": list(e), "c": str(self.terms[e])} for e in self.exponents]}


def parse_polynomial(doc) -> TropicalPolynomial:
    """Build a polynomial from the JSON schema ``{"dim","degree","terms":[{"e","c"}]}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        dim, degree, raw = int(doc["dim"]), int(doc["degree"]), doc["terms"]
    except (KeyError, TypeError) as exc:
        raise PolynomialError(f"polynomial document missing field: {exc}") from exc
    terms: dict[Exponent, Fraction] = {}
    for t in raw:
        e = tuple(int(a) for a in t["e"])
        if e in terms:
            raise PolynomialError(f"duplicate exponent {list(e)}")
        terms[e] = parse_rational(t["c"])
    return TropicalPolynomial(dim, degree, terms)


@dataclass
class Subdivision:
    """A polyhedral subdivision of a lattice polytope; cells are keyed by their point sets."""

    points: list[Exponent]
    cells: dict[frozenset[Exponent], int]
    top: list[frozenset[Exponent]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def cells_of_dim(self, k: int) -> list[frozenset[Exponent]]:
        return sorted((c for c, d in self.cells.items() if d == k), key=sorted)

    def restricted(self, keep) -> "Subdivision":
        cells = {c: d for c, d in self.cells.items() if all(keep(p) for p in c)}
        return Subdivision(sorted({p for c in cells for p in c}), cells,
                           [c for c in cells if cells[c] == max(cells.values(), default=0)])


def subdivision_from_lift(points: Sequence[Exponent], heights: Sequence) -> Subdivision:
    pts = [tuple(p) for p in points]
    hull = upper_hull(pts, heights)
    cells: dict[frozenset[Exponent], int] = {}
    top = []
    for hc in hull:
        members = sorted(hc.points)
        cpts = [pts[i] for i in members]
        top.append(frozenset(cpts))
        for face, k in polytope_faces(cpts).items():
            cells[frozenset(cpts[i] for i in face)] = k
    return Subdivision(sorted(pts), cells, sorted(top, key=sorted))


def dual_subdivision(f: TropicalPolynomial) -> Subdivision:
    exps = f.exponents
    if len(exps) < 2 or affine_rank(exps) < f.dim:
        raise DegenerateConfiguration("exponents do not span the Newton polytope")
    return subdivision_from_lift(exps, [f.terms[e] for e in exps])


def normalized_volume(points: Sequence[Sequence]) -> int:
    """n! times the Euclidean volume of conv(points), for a full-dimensional lattice polytope."""
    pts = sorted({tuple(p) for p in points})
    n = len(pts[0])
    if len(pts) == n + 1:
        return abs(int(det([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]])))
    # a placing triangulation: wildly separated heights are generic
    heights = [-(7 ** i) for i in range(len(pts))]
    total = 0
    for hc in upper_hull(pts, heights):
        total += normalized_volume([pts[i] for i in hc.points])
    return total


def is_primitive(S: Subdivision) -> tuple[bool, frozenset | None]:
    """True iff every top cell is a unimodular simplex; otherwise the first bad cell."""
    n = S.dim
    for c in S.top:
        if len(c) != n + 1 or normalized_volume(c) != 1:
            return False, c
    return True, None


def restrict_to_level(f: TropicalPolynomial, k: int) -> TropicalPolynomial:
    """The curve polynomial on the slice ``a_3 = d - k`` with ``x_3 = 0``."""
    if f.dim != 3:
        raise PolynomialError("level restriction needs a polynomial in three variables")
    if not 1 <= k <= f.degree:
        raise PolynomialError(f"level {k} outside 1..{f.degree}")
    terms = {e[:2]: c for e, c in f.terms.items() if e[2] == f.degree - k}
    if not terms:
        raise PolynomialError(f"slice for level {k} has no terms")
    return TropicalPolynomial(2, k, terms)


def polynomial_from_heights(dim: int, degree: int, height) -> TropicalPolynomial:
    """Full-support polynomial with coefficient ``height(a)`` at every lattice point."""
    return TropicalPolynomial(dim, degree, {a: Fraction(height(a)) for a in simplex_points(dim, degree)})


def honeycomb_height(a: Sequence[int]) -> Fraction:
    """Concave quadratic lift giving a unimodular triangulation of every simplex.

    In three variables the symmetric form leaves octahedra, so one cross term
    is perturbed to make the form generic.
    """
    s = Fraction(sum(x * x for x in a) + sum(a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a))))
    if len(a) >= 3:
        s -= Fraction(1, 4) * a[0] * a[2]
    return -s
