"""Homology of the retract models of the two open pieces and of their overlap, with the
Mayer-Vietoris count that must reproduce h11 of the whole surface."""
import argparse
from dataclasses import dataclass

from tropfloor.floors import open_piece_homology, surface_from_floor_plan, synth_floor_plan
from tropfloor.homology import chain_complex, homology_from_complex


@dataclass
class Config:
    degrees: tuple[int, ...] = (2, 3, 4)
    seed: int = 0


def run(cfg: Config) -> None:
    print("d  upper(h10,h11,h12)  lower(h10,h11,h12)  overlap(h10,h11)  g  MV-total  h11(X)")
    for d in cfg.degrees:
        plan = synth_floor_plan(d, cfg.seed)
        _, X = surface_from_floor_plan(plan)
        H = open_piece_homology(X)
        h10, h11 = H["walls"][d - 1]
        total = H["upper"][1] + H["lower"][1] - h11 + h10
        real = homology_from_complex(chain_complex(X, 1), 1).rank
        g = plan.curves[d - 2].genus()
        print(f"{d}  {tuple(H['upper'])!s:18}  {tuple(H['lower'])!s:18}  {(h10, h11)!s:16}  {g}  "
              f"{total:8}  {real}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(Config(tuple(a.degrees), a.seed))
