"""Framed piecewise-linear 1-chains on a compactified surface.

A framed 1-cell is a straight segment or ray lying in a single open cell of
sedentarity zero, together with an integer weight and a framing vector in the
first framing group of that cell. Rays run off to the boundary stratum picked
out by their direction; framings there are pushed forward by the chart map, so
directions normal to the stratum die.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cosheaf import framing_group
from .lattice import solve
from .polyhedral import CompactComplex

Point = tuple[Fraction, ...]
EMPTY: frozenset[int] = frozenset()


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def as_point(x: Iterable) -> Point:
    return tuple(Fraction(v) for v in x)


def envelope_pieces(terms: dict, p: Sequence, u: Sequence, t_end=None) -> list[tuple]:
    """Split ``p + t u`` (0 <= t <= t_end, or t >= 0 for a ray) where the max-plus argmax changes.

    Returns ``(t0, t1, argmax)`` triples; ``t1`` is None for the final piece of a ray.
    """
    lines = [(c + _dot(a, p), _dot(a, u), a) for a, c in terms.items()]
    t = Fraction(0)
    out = []
    while True:
        vals = [v + s * t for v, s, _ in lines]
        m = max(vals)
        tied = [ln for ln, val in zip(lines, vals) if val == m]
        smax = max(s for _, s, _ in tied)
        cur = [ln for ln in tied if ln[1] == smax]
        v0 = cur[0][0]
        cands = [(v0 - v) / (s - smax) for v, s, _ in lines if s > smax]
        tn = min(cands) if cands else None
        if t_end is not None and (tn is None or tn >= t_end):
            out.append((t, Fraction(t_end), frozenset(a for _, _, a in cur)))
            return out
        if tn is None:
            out.append((t, None, frozenset(a for _, _, a in cur)))
            return out
        out.append((t, tn, frozenset(a for _, _, a in cur)))
        t = tn


@dataclass(frozen=True)
class FramedCell:
    """``weight * (framing, [start, end])``; ``end`` is None for a ray along ``direction``."""

    start: Point
    end: Point | None
    direction: tuple[int, ...] | None
    host: int
    framing: tuple[int, ...]
    weight: int = 1

    def point_at(self, t) -> Point:
        if self.end is None:
            return tuple(a + t * b for a, b in zip(self.start, self.direction))
        return tuple(a + t * (b - a) for a, b in zip(self.start, self.end))

    @property
    def vector(self) -> tuple:
        """Direction of travel (end - start, or the ray direction)."""
        if self.end is None:
            return tuple(Fraction(x) for x in self.direction)
        return tuple(b - a for a, b in zip(self.start, self.end))

    def scaled(self, k: int) -> "FramedCell":
        return FramedCell(self.start, self.end, self.direction, self.host, self.framing, self.weight * k)

    def to_json(self) -> dict:
        return {"start": [str(x) for x in self.start],
                "end": None if self.end is None else [str(x) for x in self.end],
                "direction": None if self.direction is None else list(self.direction),
                "host": self.host, "framing": list(self.framing), "weight": self.weight}


@dataclass
class FramedChain:
    """A (1,1)-chain: a formal sum of framed 1-cells."""

    cells: list[FramedCell] = field(default_factory=list)
    label: str = ""
    p: int = 1
    q: int = 1

    def __add__(self, other: "FramedChain") -> "FramedChain":
        return FramedChain(self.cells + other.cells, self.label or other.label)

    def __neg__(self) -> "FramedChain":
        return FramedChain([c.scaled(-1) for c in self.cells], self.label)

    def __sub__(self, other: "FramedChain") -> "FramedChain":
        return self + (-other)

    def scaled(self, k: int) -> "FramedChain":
        return FramedChain([c.scaled(k) for c in self.cells], self.label)

    def extend(self, other: "FramedChain", k: int = 1) -> None:
        self.cells.extend(c.scaled(k) for c in other.cells if k)

    def to_json(self) -> dict:
        return {"label": self.label, "p": self.p, "q": self.q, "cells": [c.to_json() for c in self.cells]}


class ChainError(ValueError):
    pass


def pieces(X: CompactComplex, a: Sequence, b: Sequence | None = None, direction: Sequence | None = None):
    """Cut the segment [a, b] (or the ray from a) into pieces each inside one open cell of X.

    Yields ``(start, end_or_None, cell)``; raises ChainError when the path leaves X.
    """
    a = as_point(a)
    if b is not None:
        u = tuple(y - x for x, y in zip(a, as_point(b)))
        raw = envelope_pieces(X.poly.terms, a, u, 1)
    else:
        u = tuple(Fraction(x) for x in direction)
        raw = envelope_pieces(X.poly.terms, a, u, None)
    out = []
    for t0, t1, arg in raw:
        if t1 is not None and t1 == t0:
            continue
        key = (EMPTY, arg)
        if key not in X.index:
            raise ChainError(f"path through {list(map(str, a))} leaves the surface")
        s = tuple(x + t0 * y for x, y in zip(a, u))
        e = None if t1 is None else tuple(x + t1 * y for x, y in zip(a, u))
        out.append((s, e, X.cells[X.index[key]]))
    return out


def infinity_endpoint(X: CompactComplex, start: Point, direction: Sequence[int]):
    """Stratum and chart point reached by the ray, found from the face of P maximising the direction."""
    vals = {a: _dot(a, direction) for a in X.subdivision.points}
    m = max(vals.values())
    face = frozenset(a for a, v in vals.items() if v == m)
    st = next(s for s in X.strata.values() if s.points == face)
    return st, st.project(start)


def boundary(chain: FramedChain, X: CompactComplex) -> dict:
    """The framed 0-chain ∂chain as {(sedentarity, chart point): framing vector}, zeros dropped."""
    acc: dict = {}

    def add(key, vec):
        cur = acc.get(key)
        acc[key] = tuple(vec) if cur is None else tuple(x + y for x, y in zip(cur, vec))

    for c in chain.cells:
        add((EMPTY, c.start), [-c.weight * x for x in c.framing])
        if c.end is not None:
            add((EMPTY, c.end), [c.weight * x for x in c.framing])
        else:
            st, y = infinity_endpoint(X, c.start, c.direction)
            add((st.sedentarity, tuple(y)), [c.weight * x for x in st.project(c.framing)])
    return {k: v for k, v in acc.items() if any(v)}


def is_cycle(chain: FramedChain, X: CompactComplex) -> bool:
    return not boundary(chain, X)


def validate_chain(chain: FramedChain, X: CompactComplex) -> list[str]:
    """Check that each cell's interior lies in its host and its framing is in F_1(host)."""
    bad = []
    for i, c in enumerate(chain.cells):
        host = X.cells[c.host]
        if host.sedentarity:
            bad.append(f"cell {i}: host {c.host} is not of sedentarity zero")
            continue
        pcs = pieces(X, c.start, c.end, c.direction) if c.end is not None else pieces(X, c.start, None, c.direction)
        if len(pcs) != 1 or pcs[0][2].id != c.host:
            bad.append(f"cell {i}: interior not contained in host {c.host}")
        F = framing_group(X, host, 1)
        co = solve([list(col) for col in F.basis], c.framing)
        if co is None or any(x.denominator != 1 for x in co):
            bad.append(f"cell {i}: framing {list(c.framing)} not in F_1 of host {c.host}")
    return bad


def chain_along(X: CompactComplex, points: Sequence, framing, ray: Sequence[int] | None = None,
                weight: int = 1) -> FramedChain:
    """Framed polyline through ``points`` (then out along ``ray`` if given).

    ``framing`` is a fixed vector or a function of (host cell, piece start,
    piece end or None) returning one.
    """
    pts = [as_point(p) for p in points]
    out = []
    segs = [(pts[i], pts[i + 1], None) for i in range(len(pts) - 1) if pts[i] != pts[i + 1]]
    if ray is not None:
        segs.append((pts[-1], None, tuple(ray)))
    for a, b, r in segs:
        for s, e, cell in pieces(X, a, b, r):
            fr = framing(cell, s, e) if callable(framing) else framing
            out.append(FramedCell(s, e, None if e is not None else tuple(r), cell.id, tuple(fr), weight))
    return FramedChain(out)
