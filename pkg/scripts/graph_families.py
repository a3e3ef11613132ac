"""Bounds versus spectral radius for all five graph matrices on small named families."""

import argparse
from dataclasses import dataclass, field

from specbound.graph_bounds import graph_bound
from specbound.graphs import GraphMatrixKind, complete_graph, cycle, path, star, wheel

FAMILIES = {"star": star, "path": path, "cycle": cycle, "wheel": wheel, "complete": complete_graph}


@dataclass
class FamilyConfig:
    families: list = field(default_factory=lambda: list(FAMILIES))
    sizes: list = field(default_factory=lambda: [4, 6, 8])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=FamilyConfig().sizes)
    cfg = FamilyConfig(sizes=ap.parse_args().sizes)
    print(f"{'graph':<12} {'kind':<28} {'lower':>10} {'rho':>10} {'upper':>10} l  pred_up pred_lo")
    for name in cfg.families:
        for n in cfg.sizes:
            G = FAMILIES[name](n)
            for kind in GraphMatrixKind:
                up = graph_bound(G, kind, "upper")
                lo = graph_bound(G, kind, "lower")
                print(f"{name + str(n):<12} {kind.value:<28} {lo.bound:>10.5f} {up.rho.rho:>10.5f} "
                      f"{up.bound:>10.5f} {up.curve.best_l}  {str(up.stated_predicate.holds):<7} "
                      f"{lo.stated_predicate.holds}")


if __name__ == "__main__":
    main()
