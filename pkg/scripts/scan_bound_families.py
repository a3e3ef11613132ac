"""Seeded comparison of the avg2 and row-sum bounds over a grid of sizes and densities.

    python3 scripts/scan_bound_families.py --count 500 --seed 1
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

from specbound.scan import run_scan


@dataclass
class ScanGrid:
    count: int = 500
    seed: int = 1
    sizes: list = field(default_factory=lambda: [(3, 5), (6, 9), (10, 14)])
    densities: list = field(default_factory=lambda: [0.2, 0.5, 0.8])
    family: str = "matrix"
    kind: str | None = None


def run(cfg: ScanGrid) -> list[dict]:
    out = []
    for n_min, n_max in cfg.sizes:
        for p in cfg.densities:
            summary, _ = run_scan(cfg.count, cfg.seed, n_min, n_max, p, cfg.family, cfg.kind)
            d = summary.to_dict()
            d.update(n_min=n_min, n_max=n_max, density=p)
            out.append(d)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=ScanGrid.count)
    ap.add_argument("--seed", type=int, default=ScanGrid.seed)
    ap.add_argument("--family", choices=["matrix", "graph"], default="matrix")
    ap.add_argument("--kind", default=None)
    args = ap.parse_args()
    cfg = ScanGrid(count=args.count, seed=args.seed, family=args.family, kind=args.kind)
    if cfg.family == "graph":
        cfg.sizes = [(4, 6), (7, 10)]
    rows = run(cfg)
    print(f"{'n':>7} {'p':>4} | {'phi':>5} {'Phi':>5} {'tie':>5} | {'psi':>5} {'Psi':>5} {'tie':>5} | max viol")
    for r in rows:
        u, lo = r["upper_wins"], r["lower_wins"]
        print(f"{r['n_min']:>3}-{r['n_max']:<3} {r['density']:>4} | {u['phi']:>5} {u['Phi']:>5} {u['tie']:>5} | "
              f"{lo['psi']:>5} {lo['Psi']:>5} {lo['tie']:>5} | {r['max_violation']:.1e}")
    print(json.dumps({"config": asdict(cfg)}, default=list))


if __name__ == "__main__":
    main()
