"""Write clipped OBJ geometry of synthesized surfaces and their basis cycles."""
import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from tropfloor.cli import chain_polylines, to_obj_polylines
from tropfloor.floors import basis_cycles, surface_from_floor_plan, synth_floor_plan
from tropfloor.polyhedral import to_obj


@dataclass
class Config:
    degrees: tuple[int, ...] = (1, 2, 3)
    bbox: Fraction = Fraction(12)
    seed: int = 0
    out_dir: Path = Path("figures")


def run(cfg: Config) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for d in cfg.degrees:
        _, X = surface_from_floor_plan(synth_floor_plan(d, cfg.seed))
        (cfg.out_dir / f"surface_d{d}.obj").write_text(to_obj(X, cfg.bbox))
        groups = {c.label: chain_polylines(c, cfg.bbox) for cs in basis_cycles(X).values() for c in cs}
        (cfg.out_dir / f"cycles_d{d}.obj").write_text(to_obj_polylines(groups))
        print(f"d={d}: {len(groups)} cycles written to {cfg.out_dir}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--bbox", default="12")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", default="figures")
    a = ap.parse_args()
    run(Config(tuple(a.degrees), Fraction(a.bbox), a.seed, Path(a.out_dir)))
