"""Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact; the only
tolerances are the wall-clock budgets of criterion 1 (60 s for d <= 4, 600 s for d = 5).

Run with ``pytest -s tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tropfloor.floors import (FloorSurface, curve_breaking_points, exceptional_cycles, open_piece_homology,
                              surface_from_floor_plan, synth_floor_plan)
from tropfloor.homology import chain_complex, hodge_table, homology_from_complex
from tropfloor.intersect import (bent_fibre, form_Xd_dminus1, h11_formula, intersection_points,
                                 signature, verify_theorem)
from tropfloor.lattice import smith_normal_form
from tropfloor.troppoly import simplex_points
from tropfloor.hull import upper_hull
from tropfloor.troppoly import normalized_volume

from _surfaces import floor_pair, plan, plane_curve, surface

H11_BUDGET = {1: 60, 2: 60, 3: 60, 4: 60, 5: 600}


def report(n, ok, detail):
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    return ok


@lru_cache(maxsize=None)
def theorem(d):
    return verify_theorem(d)


def _check(rep, name):
    return next(c for c in rep["checks"] if c["check"] == name)


def criterion_1():
    rows, ok = [], True
    for d in range(1, 6):
        t = time.perf_counter()
        _, X = surface_from_floor_plan(synth_floor_plan(d, 0))
        h = homology_from_complex(chain_complex(X, 1), 1).rank
        dt = time.perf_counter() - t
        good = h == h11_formula(d) and dt < H11_BUDGET[d]
        ok &= good
        rows.append(f"d={d}: h11={h} (want {h11_formula(d)}, {dt:.1f}s)")
    return report(1, ok, "; ".join(rows))


def criterion_2():
    want = {2: [1, 1, 0], 3: [1, 6, 0], 4: [2, 18, 0], 5: [5, 40, 0]}
    got = {d: theorem(d)["signature"] for d in want}
    asserted = {tuple(theorem(d)["asserted"]) for d in want}
    ok = got == want and asserted == {("v contributes +1 to the signature",)}
    return report(2, ok, f"signatures {got}; asserted inputs {sorted(asserted)}")


def criterion_3():
    rows, ok = [], True
    for d in (2, 3, 4):
        C = chain_complex(floor_pair(d), 1)
        h11, h12 = homology_from_complex(C, 1).rank, homology_from_complex(C, 2).rank
        ok &= (h11, h12) == (d * (d - 1) + 1, 0)
        rows.append(f"d={d}: h11={h11} h12={h12}")
    return report(3, ok, "; ".join(rows))


def criterion_4():
    rows, ok = [], True
    for d in (2, 3, 4):
        Q = form_Xd_dminus1(floor_pair(d))
        E = [i for i, t in enumerate(Q.tags) if t == "E"]
        L = Q.tags.index("L")
        sig = signature(Q)["signature"]
        good = (sig == [1, d * (d - 1), 0] and Q.entries[L][L] == 1
                and all(Q.entries[i][i] == -1 for i in E) and Q.known())
        ok &= good
        rows.append(f"d={d}: sig={sig} L^2={Q.entries[L][L]} E^2={sorted({Q.entries[i][i] for i in E})}")
    return report(4, ok, "; ".join(rows))


def criterion_5():
    rows = {d: _check(theorem(d), "signature additivity") for d in range(2, 6)}
    ok = all(c["pass"] for c in rows.values())
    return report(5, ok, "; ".join(f"d={d}: {c['got']} = {c['expected']}" for d, c in rows.items()))


def criterion_6():
    rows = {d: _check(theorem(d), "rank recursion") for d in range(2, 6)}
    ok = all(c["pass"] for c in rows.values())
    return report(6, ok, "; ".join(f"d={d}: {c['got']} vs {c['expected']}" for d, c in rows.items()))


def criterion_7():
    rows, ok = [], True
    for d in range(1, 5):
        g = (d - 1) * (d - 2) // 2
        H = hodge_table(plane_curve(d)[1])
        got = (H.rank(0, 0), H.rank(0, 1), H.rank(1, 0), H.rank(1, 1))
        B = curve_breaking_points(plan(d).curves[d - 1])
        good = got == (1, g, g, 1) and len(B.points) == len(B.loops) == g
        ok &= good
        rows.append(f"d={d}: h00,h01,h10,h11={got} breaks={len(B.points)} loops={len(B.loops)}")
    return report(7, ok, "; ".join(rows))


def criterion_8():
    rows, ok = [], True
    for d in range(1, 6):
        r = theorem(d)
        sizes, total, valid = (_check(r, n) for n in ("basis sizes", "basis total equals h11",
                                                       "every basis chain is a valid cycle"))
        ok &= sizes["pass"] and total["pass"] and valid["pass"]
        rows.append(f"d={d}: {sizes['got']} total={total['got']} invalid={valid['got']}")
    return report(8, ok, "; ".join(rows))


def criterion_9():
    rows, ok = [], True
    for d in (2, 3, 4):
        H = open_piece_homology(surface(d))
        genera = {i: plan(d).curves[i - 1].genus() for i in H["walls"]}
        walls = {i: tuple(v) for i, v in H["walls"].items()}
        want = {i: (g + 1, g) for i, g in genera.items()}
        good = walls == want and H["upper"][0] == 0 and H["lower"][0] == 0
        ok &= good
        rows.append(f"d={d}: (h10,h11) of wall cylinders {walls} want {want}; "
                    f"h10 upper={H['upper'][0]} lower={H['lower'][0]}")
    return report(9, ok, "; ".join(rows))


def criterion_10():
    Y = floor_pair(2)
    FS = FloorSurface(Y)
    ex = exceptional_cycles(Y)
    ms = []
    for e, x in zip(ex.E, ex.points):
        ms += [m for _, m in intersection_points(e, bent_fibre(Y, FS, x).chain, Y)]
    return report(10, ms == [-1] * len(ex.E), f"local multiplicities {ms}")


def criterion_11():
    import test_cosheaf_homology as tch
    import test_lattice as tl
    import test_polyhedral as tp
    from test_intersect import CENTER, PLANE, _in_facet, _through
    from tropfloor.intersect import local_multiplicity

    rng = random.Random(11)
    parts = {}
    bad = 0
    for _ in range(200):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        m = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        res = smith_normal_form(m)
        good = list(res.diagonal) == tl.determinantal_divisors(m)
        good &= all(b % a == 0 for a, b in zip(res.diagonal, res.diagonal[1:]))
        good &= abs(tl._int_det(res.U)) == 1 and abs(tl._int_det(res.V)) == 1
        bad += not good
    parts["snf"] = bad == 0
    bad = 0
    for _ in range(50):
        n, d = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3)])
        pts = simplex_points(n, d)
        cells = upper_hull(pts, [rng.randint(-20, 20) for _ in pts])
        bad += sum(normalized_volume([pts[i] for i in c.points]) for c in cells) != d ** n
    parts["tiling"] = bad == 0
    comps = [surface(d) for d in range(1, 6)] + [floor_pair(d) for d in (2, 3, 4)]
    parts["balancing"] = all(tp.balancing_defects(X) == [] for X in comps)
    for X in comps + [plane_curve(d)[1] for d in range(1, 5)]:
        for p in range(X.n + 1):
            chain_complex(X, p)          # raises unless D o D = 0
    parts["dd=0"] = True
    bad = 0
    for _ in range(200):
        a, b = [(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
        if a[0] * b[1] - a[1] * b[0] == 0:
            continue
        A, B = _through(_in_facet(a), _in_facet(a)), _through(_in_facet(b), _in_facet(b))
        bad += local_multiplicity(PLANE, CENTER, A, B) <= 0
    parts["parallel"] = bad == 0
    small = [tch._plane(), surface(2), surface(3), floor_pair(2), floor_pair(3)]
    parts["functoriality"] = all(tch._functoriality_failures(X, range(X.n + 1)) == 0 for X in small)
    return report(11, all(parts.values()), " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in parts.items()))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
