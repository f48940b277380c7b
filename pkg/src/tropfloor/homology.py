"""Cellular (p,q)-chain complexes with framing coefficients, and their homology."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cosheaf import framing_group, inclusion_map
from .lattice import sparse_elementary_divisors
from .polyhedral import CompactComplex, validate_cw


class CWValidationError(RuntimeError):
    pass


@dataclass
class PQComplex:
    """Generators per degree q are (cell id, index into the framing basis)."""

    p: int
    generators: dict[int, list[tuple[int, int]]]
    boundary: dict[int, list[dict[int, int]]]     # D_q as sparse columns: one dict per q-generator

    def dims(self) -> list[int]:
        return [len(self.generators.get(q, [])) for q in range(max(self.generators, default=-1) + 1)]

    def rows(self, q: int) -> list[dict[int, int]]:
        """D_q as sparse rows indexed by (q-1)-generators."""
        out = [dict() for _ in self.generators.get(q - 1, [])]
        for j, col in enumerate(self.boundary.get(q, [])):
            for i, v in col.items():
                out[i][j] = v
        return out


@dataclass(frozen=True)
class HomologyResult:
    rank: int
    torsion: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


def chain_complex(X: CompactComplex, p: int, cells: Iterable[int] | None = None,
                  degree_shift: int = 0, check: bool = True) -> PQComplex:
    """The (p, *) chain complex of X, or of the subcomplex spanned by ``cells``.

    ``cells`` must be closed under taking faces unless ``degree_shift`` is used
    to model a slice (then faces outside the set are dropped). Coefficients are
    always the framing groups of X itself.
    """
    if check:
        rep = validate_cw(X)
        if not rep.ok:
            raise CWValidationError("; ".join(rep.violations[:5]))
    keep = set(range(len(X.cells))) if cells is None else set(cells)
    gens: dict[int, list[tuple[int, int]]] = {}
    for c in X.cells:
        if c.id in keep:
            q = c.dim - degree_shift
            if q < 0:
                continue
            for j in range(framing_group(X, c, p).rank):
                gens.setdefault(q, []).append((c.id, j))
    pos = {q: {g: i for i, g in enumerate(gl)} for q, gl in gens.items()}
    D: dict[int, list[dict[int, int]]] = {}
    for q, gl in gens.items():
        cols = []
        cache = {}
        for cid, j in gl:
            if cid not in cache:
                col_blocks = {}
                for fid, s in X.boundary[cid].items():
                    if fid not in keep:
                        continue
                    col_blocks[fid] = (s, inclusion_map(X, X.cells[cid], X.cells[fid], p))
                cache[cid] = col_blocks
            col: dict[int, int] = {}
            for fid, (s, M) in cache[cid].items():
                for i, row in enumerate(M):
                    v = s * row[j]
                    if v:
                        col[pos[q - 1][(fid, i)]] = col.get(pos[q - 1][(fid, i)], 0) + v
            cols.append({k: v for k, v in col.items() if v})
        D[q] = cols
    C = PQComplex(p, gens, D)
    _assert_dd_zero(C)
    return C


def _assert_dd_zero(C: PQComplex) -> None:
    for q, cols in C.boundary.items():
        prev = C.boundary.get(q - 1)
        if not prev:
            continue
        for col in cols:
            acc: dict[int, int] = {}
            for i, v in col.items():
                for k, w in prev[i].items():
                    acc[k] = acc.get(k, 0) + v * w
            if any(acc.values()):
                raise AssertionError(f"D_{q - 1} D_{q} != 0")


def _divisors(C: PQComplex, q: int) -> list[int]:
    cols = C.boundary.get(q, [])
    if not cols or not C.generators.get(q - 1):
        return []
    return [d for d in sparse_elementary_divisors([dict(c) for c in cols]) if d]


def homology_from_complex(C: PQComplex, q: int) -> HomologyResult:
    dim = len(C.generators.get(q, []))
    dq = _divisors(C, q)
    dq1 = _divisors(C, q + 1)
    return HomologyResult(dim - len(dq) - len(dq1), tuple(sorted(d for d in dq1 if d > 1)))


def tropical_homology(X: CompactComplex, p: int, q: int) -> HomologyResult:
    return homology_from_complex(chain_complex(X, p), q)


@dataclass
class HodgeTable:
    h: list[list[HomologyResult]]
    torsion_free: bool = field(init=False)

    def __post_init__(self):
        self.torsion_free = all(not r.torsion for row in self.h for r in row)

    def rank(self, p: int, q: int) -> int:
        return self.h[p][q].rank

    def to_json(self) -> dict:
        return {"h": [[r.to_json() for r in row] for row in self.h],
                "betti": [self.h[0][q].rank for q in range(len(self.h))],
                "torsion_free": self.torsion_free}


def hodge_table(X: CompactComplex, progress: Callable[[str], None] | None = None) -> HodgeTable:
    validate = validate_cw(X)
    if not validate.ok:
        raise CWValidationError("; ".join(validate.violations[:5]))
    n = X.n
    rows = []
    for p in range(n + 1):
        C = chain_complex(X, p, check=False)
        rows.append([homology_from_complex(C, q) for q in range(n + 1)])
        if progress:
            progress(f"p={p} done")
    return HodgeTable(rows)


def euler_characteristic(C: PQComplex) -> int:
    return sum((-1) ** q * n for q, n in enumerate(C.dims()))
