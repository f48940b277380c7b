"""Tabulate rank, basis and signature checks for synthesized floor decomposed surfaces."""
import argparse
import json
import time
from dataclasses import dataclass

from tropfloor.intersect import verify_theorem


@dataclass
class Config:
    max_degree: int = 5
    seeds: tuple[int, ...] = (0,)
    json_out: str | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for seed in cfg.seeds:
        for d in range(1, cfg.max_degree + 1):
            t = time.perf_counter()
            rep = verify_theorem(d, seed)
            rep["seconds"] = round(time.perf_counter() - t, 2)
            rows.append(rep)
            failed = [c["check"] for c in rep["checks"] if not c["pass"]]
            print(f"seed={seed} d={d} h11={rep['h11']:>3} b2={rep['b2']} sig={rep['signature']} "
                  f"{'ok' if rep['pass'] else 'FAILED ' + ', '.join(failed)} ({rep['seconds']}s)", flush=True)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--json")
    a = ap.parse_args()
    rows = run(Config(a.max_degree, tuple(a.seeds), a.json))
    if a.json:
        with open(a.json, "w") as fh:
            json.dump(rows, fh, indent=1, sort_keys=True)
