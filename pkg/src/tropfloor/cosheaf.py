"""Framing groups F_p of the cells of a compactified hypersurface and the maps between them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .lattice import compound, hermite_basis, matmul, solve_int, transpose, wedge
from .polyhedral import Cell, CompactComplex, _restriction


@dataclass(frozen=True)
class FramingModule:
    p: int
    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]        # columns, in Plücker coordinates of N_Q
    sedentarity: frozenset[int]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _star_duals(X: CompactComplex, cell: Cell):
    """Subdivision cells of positive dimension contained in the cell's dual cell."""
    return [s for s, k in X.subdivision.cells.items() if k >= 1 and s <= cell.dual]


def framing_group(X: CompactComplex, tau: Cell, p: int) -> FramingModule:
    cache = X.__dict__.setdefault("_framing_cache", {})
    key = (tau.id, p)
    if key in cache:
        return cache[key]
    k = tau.stratum.dim
    if not 0 <= p <= X.n:
        raise ValueError(f"framing degree {p} outside 0..{X.n}")
    amb = comb(k, p)
    if p == 0:
        fm = FramingModule(0, 1, ((1,),), tau.sedentarity)
    else:
        gens = []
        for s in _star_duals(X, tau):
            T = X.cells[X.index[(tau.sedentarity, s)]].tangent
            for sub in combinations(T, p):
                gens.append(wedge(list(sub), k))
        basis = hermite_basis(gens, amb) if gens else []
        fm = FramingModule(p, amb, tuple(tuple(b) for b in basis), tau.sedentarity)
    cache[key] = fm
    return fm


def framing_map(X: CompactComplex, tau: Cell, sigma: Cell, p: int) -> list[list[int]]:
    """Matrix of ∧^p of the chart change N_Q -> N_Q' (Plücker coordinates), identity in-stratum."""
    st, sub = tau.stratum, sigma.stratum
    if st.sedentarity == sub.sedentarity:
        return [[int(i == j) for j in range(comb(st.dim, p))] for i in range(comb(st.dim, p))]
    R = _restriction(st, sub)
    return compound(transpose(R, sub.dim), p)


def inclusion_map(X: CompactComplex, tau: Cell, sigma: Cell, p: int) -> list[list[int]]:
    """Matrix (rows: basis of F_p(sigma), columns: basis of F_p(tau)) of the inclusion map."""
    if not (tau.sedentarity <= sigma.sedentarity and tau.dual <= sigma.dual
            and sigma.dual <= sigma.stratum.points):
        raise ValueError(f"cell {sigma.id} is not a face of the closure of cell {tau.id}")
    Ft, Fs = framing_group(X, tau, p), framing_group(X, sigma, p)
    if p == 0:
        return [[1]]
    if not Ft.basis:
        return [[] for _ in Fs.basis]
    M = framing_map(X, tau, sigma, p)
    images = matmul(M, [list(c) for c in zip(*Ft.basis)]) if M else []
    cols = []
    for j in range(Ft.rank):
        v = [images[i][j] for i in range(len(images))]
        cols.append(solve_int(list(Fs.basis), v) if any(v) else [0] * Fs.rank)
    return [[cols[j][i] for j in range(Ft.rank)] for i in range(Fs.rank)]
