"""Command-line front end: subdivide, surface, homology, floorplan, synth, intersect, verify, export."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .chains import FramedChain
from .floors import (FloorPlanError, basis_cycles, floor_plan, parse_floor_plan, surface_from_floor_plan,
                     synth_floor_plan)
from .homology import CWValidationError, hodge_table, tropical_homology
from .hull import DegenerateConfiguration
from .intersect import assemble_form, signature, verify_theorem
from .polyhedral import (NotCompactifiable, cell_counts, clip_segment, compactify, hypersurface,
                         projective_space, to_json, to_obj, toric_delta, validate_cw)
from .troppoly import PolynomialError, dual_subdivision, is_primitive, parse_polynomial, parse_rational

EXIT_OK, EXIT_INPUT, EXIT_VALIDATION, EXIT_VERIFY = 0, 2, 3, 4


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    degree: int | None = None
    seed: int = 0
    bbox: Fraction = Fraction(10)
    max_degree: int = 5
    out: str | None = None
    cycles_out: str | None = None
    ambient: str | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.degree is not None and self.degree < 1:
            raise InputError("degree must be at least 1")
        if self.bbox <= 0:
            raise InputError("bounding box must be positive")
        if self.max_degree < 1:
            raise InputError("max degree must be at least 1")


def _load(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc


def _poly(cfg: RunConfig):
    if not cfg.inputs:
        raise InputError(f"{cfg.command} needs an input polynomial")
    return parse_polynomial(_load(cfg.inputs[0]))


def _ambient(name: str | None, dim: int):
    name = name or ("tp2" if dim == 2 else "tp3")
    table = {"tp2": (2, lambda: projective_space(2)), "tp3": (3, lambda: projective_space(3)),
             "toric": (3, toric_delta)}
    if name not in table:
        raise InputError(f"unknown ambient {name}")
    need, make = table[name]
    if need != dim:
        raise InputError(f"ambient {name} needs a polynomial in {need} variables, got {dim}")
    return make()


def _surface(cfg: RunConfig, f=None):
    f = f or _poly(cfg)
    X = compactify(hypersurface(f), _ambient(cfg.ambient, f.dim))
    rep = validate_cw(X)
    if not rep.ok:
        raise CWValidationError("; ".join(rep.violations[:5]))
    return f, X


def _plan(cfg: RunConfig):
    if cfg.inputs:
        doc = _load(cfg.inputs[0])
        if "curves" in doc:
            return parse_floor_plan(doc)
        return floor_plan(parse_polynomial(doc))
    if cfg.degree is None:
        raise InputError("give a floor plan, a surface polynomial or --degree")
    return synth_floor_plan(cfg.degree, cfg.seed)


def cmd_subdivide(cfg: RunConfig) -> dict:
    f = _poly(cfg)
    S = dual_subdivision(f)
    ok, bad = is_primitive(S)
    cells = [{"dim": k, "points": sorted(list(a) for a in c)}
             for c, k in sorted(S.cells.items(), key=lambda t: (t[1], sorted(t[0])))]
    return {"dim": f.dim, "degree": f.degree, "top_cells": len(S.top), "primitive": ok,
            "offending_cell": None if ok else sorted(list(a) for a in bad), "cells": cells}


def cmd_surface(cfg: RunConfig) -> dict:
    _, X = _surface(cfg)
    doc = to_json(X)
    doc["cell_counts"] = cell_counts(X)
    return doc


def cmd_homology(cfg: RunConfig) -> dict:
    _, X = _surface(cfg)
    if cfg.p is not None and cfg.q is not None:
        r = tropical_homology(X, cfg.p, cfg.q)
        return {"ambient": X.ambient.name, "p": cfg.p, "q": cfg.q, **r.to_json(),
                "torsion_free": not r.torsion}
    if (cfg.p is None) != (cfg.q is None):
        raise InputError("--p and --q must be given together")
    return {"ambient": X.ambient.name, **hodge_table(X).to_json()}


def cmd_floorplan(cfg: RunConfig) -> dict:
    plan = _plan(cfg)
    f, X = surface_from_floor_plan(plan)
    return {"plan": plan.to_json(),
            "genera": [C.genus() for C in plan.curves],
            "intersections": {str(i): [[str(x) for x in p] for p in pts]
                              for i, pts in sorted(plan.intersections.items())},
            "surface": f.to_json(), "cell_counts": cell_counts(X)}


def cmd_synth(cfg: RunConfig) -> dict:
    if cfg.degree is None:
        raise InputError("synth needs --degree")
    plan = synth_floor_plan(cfg.degree, cfg.seed)
    f, _ = surface_from_floor_plan(plan)
    return {"degree": cfg.degree, "seed": cfg.seed, "plan": plan.to_json(), "surface": f.to_json()}


def cmd_intersect(cfg: RunConfig) -> dict:
    plan = _plan(cfg)
    _, X = surface_from_floor_plan(plan)
    basis = basis_cycles(X)
    cycles = {c.label: c for v in basis.values() for c in v}
    fa = assemble_form(plan, cycles, X, cfg.seed)
    subs = {str(i + 1): {"form": Q.to_json(), **signature(Q)} for i, Q in sorted(fa.sub_forms.items())}
    return {"degree": plan.degree, "form": fa.form.to_json(), **signature(fa.form), "floor_forms": subs}


def cmd_verify(cfg: RunConfig) -> dict:
    reports = [verify_theorem(d, cfg.seed, max(cfg.max_degree, 5)) for d in range(1, cfg.max_degree + 1)]
    ok = all(r["pass"] for r in reports)
    return {"max_degree": cfg.max_degree, "pass": ok, "degrees": reports}


def chain_polylines(ch: FramedChain, R: Fraction) -> list[list[tuple]]:
    out = []
    for c in ch.cells:
        if c.end is not None:
            seg = [c.start, c.end]
        else:
            reach = 4 * (R + max(abs(x) for x in c.start) + 1)
            seg = [c.start, c.point_at(reach)]
        for axis in range(len(c.start)):
            seg = clip_segment(seg, axis, R)
            if seg is None:
                break
        if seg:
            out.append(seg)
    return out


def cmd_export(cfg: RunConfig) -> str:
    _, X = _surface(cfg)
    text = to_obj(X, cfg.bbox)
    if cfg.cycles_out:
        groups = {}
        for chains in basis_cycles(X).values():
            for ch in chains:
                groups[ch.label] = chain_polylines(ch, cfg.bbox)
        _write(cfg.cycles_out, to_obj_polylines(groups))
    return text


def to_obj_polylines(groups: dict[str, list[list[tuple]]]) -> str:
    lines, index = [], {}
    for name, paths in groups.items():
        lines.append(f"g {name}")
        for path in paths:
            ids = []
            for p in path:
                key = tuple(p)
                if key not in index:
                    index[key] = len(index) + 1
                    lines.append("v " + " ".join(f"{float(x):.6f}" for x in key))
                ids.append(index[key])
            lines.append("l " + " ".join(map(str, ids)))
    return "\n".join(lines) + "\n"


COMMANDS = {"subdivide": cmd_subdivide, "surface": cmd_surface, "homology": cmd_homology,
            "floorplan": cmd_floorplan, "synth": cmd_synth, "intersect": cmd_intersect,
            "verify": cmd_verify, "export": cmd_export}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropfloor", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("inputs", nargs="*")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")
        if name in ("surface", "homology", "export"):
            sp.add_argument("--ambient", choices=["tp2", "tp3", "toric"])
        if name == "homology":
            sp.add_argument("--p", type=int)
            sp.add_argument("--q", type=int)
        if name in ("synth", "floorplan", "intersect"):
            sp.add_argument("--degree", type=int)
        if name == "verify":
            sp.add_argument("--max-degree", type=int, default=5)
        if name == "export":
            sp.add_argument("--bbox", default="10")
            sp.add_argument("--cycles", dest="cycles_out")
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    if "bbox" in kw:
        try:
            kw["bbox"] = parse_rational(kw["bbox"])
        except (PolynomialError, ValueError) as exc:
            raise InputError(f"bad --bbox: {exc}") from exc
    return RunConfig(**kw)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = _config(ns)
        result = COMMANDS[cfg.command](cfg)
    except (InputError, PolynomialError, DegenerateConfiguration, FloorPlanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CWValidationError, NotCompactifiable) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    text = result if isinstance(result, str) else json.dumps(result, indent=1, sort_keys=True) + "\n"
    try:
        _write(cfg.out, text)
    except OSError as exc:
        print(f"error: cannot write {cfg.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(result, dict) and result.get("pass") is False:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
