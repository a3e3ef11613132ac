"""Seeded random scan comparing the avg2 bounds with the row-sum bounds.

Each instance draws from its own PCG64 stream seeded by
``SeedSequence([seed, index])``, so instance k is the same whatever the
count and however instances are scheduled.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .errors import InvariantViolation
from .graph_bounds import graph_bound
from .graphs import Graph, GraphMatrixKind, build_matrix, format_edge_list, is_connected
from .matrix import NonnegMatrix, format_matrix, profile, spectral_radius
from .report import round_sig

VIOLATION_TOL = 1e-8
TIE_RTOL = 1e-12
MAX_GRAPH_ATTEMPTS = 10_000
CSV_COLUMNS = ["instance", "n", "rho", "psi", "best_phi", "best_l", "duan_psi", "best_Phi", "winner"]


def instance_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def random_matrix(rng: np.random.Generator, n: int, density: float) -> NonnegMatrix:
    """Entries in {0, 1, 2}, nonzero with probability ``density``, plus a
    directed Hamiltonian cycle of 1s so the result is irreducible."""
    nonzero = rng.random((n, n)) < density
    values = rng.integers(1, 3, size=(n, n))
    A = np.where(nonzero, values, 0).astype(float)
    perm = rng.permutation(n)
    for i in range(n):
        u, v = perm[i], perm[(i + 1) % n]
        A[u, v] = max(A[u, v], 1.0)
    return NonnegMatrix(A)


def random_connected_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    iu = np.triu_indices(n, k=1)
    for _ in range(MAX_GRAPH_ATTEMPTS):
        keep = rng.random(len(iu[0])) < density
        G = Graph(n, tuple(zip(iu[0][keep].tolist(), iu[1][keep].tolist())))
        if is_connected(G):
            return G
    raise ValueError(f"no connected G({n}, {density}) after {MAX_GRAPH_ATTEMPTS} attempts")


@dataclass
class InstanceResult:
    index: int
    n: int
    rho: float
    psi: float
    best_phi: float
    best_l: int
    duan_psi: float
    best_Phi: float
    winner: str
    lower_winner: str
    upper_cert: bool
    lower_cert: bool
    violation: float


def sandwich_violation(rho: float, prof, phi_vals, psi_val, dphi_vals, dpsi_val, extra=()) -> float:
    """Largest relative amount by which any lower bound exceeds rho or rho
    exceeds any upper bound; 0 when every bound holds."""
    scale = max(1.0, abs(rho))
    lows = [psi_val, dpsi_val, min(prof.row_sums), min(prof.avg2)]
    highs = [min(phi_vals), min(dphi_vals), max(prof.row_sums), max(prof.avg2)]
    for kind, v in extra:
        (lows if kind == "lower" else highs).append(v)
    worst = max([lo - rho for lo in lows] + [rho - hi for hi in highs])
    return max(0.0, worst) / scale


def _winner(a: float, b: float, names: tuple[str, str, str]) -> str:
    if abs(a - b) <= TIE_RTOL * max(1.0, abs(a), abs(b)):
        return names[2]
    return names[0] if a < b else names[1]


def evaluate_instance(index: int, A: NonnegMatrix, extra=()) -> InstanceResult:
    prof = profile(A)
    phi = bounds.phi_curve(A, prof)
    low = bounds.psi(A, prof).value
    dphi = bounds.duan_phi_curve(A, prof)
    dlow = bounds.duan_psi(A, prof).value
    rho = spectral_radius(A).rho
    best_phi, best_Phi = min(phi.values), min(dphi.values)
    return InstanceResult(
        index=index,
        n=A.n,
        rho=rho,
        psi=low,
        best_phi=best_phi,
        best_l=phi.best_l,
        duan_psi=dlow,
        best_Phi=best_Phi,
        winner=_winner(best_phi, best_Phi, ("phi", "Phi", "tie")),
        # larger lower bound wins
        lower_winner=_winner(-low, -dlow, ("psi", "Psi", "tie")),
        upper_cert=bounds.upper_certificate(A, phi.best_l, prof).verdict,
        lower_cert=bounds.lower_certificate(A, prof).verdict,
        violation=sandwich_violation(rho, prof, phi.values, low, dphi.values, dlow, extra),
    )


@dataclass
class ScanSummary:
    seed: int
    count: int
    family: str
    kind: str | None
    upper_wins: dict = field(default_factory=lambda: {"phi": 0, "Phi": 0, "tie": 0})
    lower_wins: dict = field(default_factory=lambda: {"psi": 0, "Psi": 0, "tie": 0})
    certificate_hits: dict = field(default_factory=lambda: {"upper": 0, "lower": 0})
    max_violation: float = 0.0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return round_sig({
            "seed": self.seed,
            "count": self.count,
            "family": self.family,
            "kind": self.kind,
            "upper_wins": self.upper_wins,
            "lower_wins": self.lower_wins,
            "certificate_hits": self.certificate_hits,
            "max_violation": self.max_violation,
            "failures": self.failures,
        })


class ScanViolation(InvariantViolation):
    def __init__(self, index: int, violation: float, dump: str):
        self.index = index
        self.violation = violation
        self.dump = dump
        super().__init__(f"instance {index}: sandwich violated by {violation:.3g} (relative)")


def make_instance(seed: int, index: int, n_min: int, n_max: int, density: float,
                  family: str, kind: GraphMatrixKind | None):
    """Return (matrix, dump text, extra specialized bounds) for one instance."""
    rng = instance_rng(seed, index)
    n = int(rng.integers(n_min, n_max + 1))
    if family == "matrix":
        A = random_matrix(rng, n, density)
        return A, format_matrix(A), ()
    G = random_connected_graph(rng, n, density)
    kind = GraphMatrixKind(kind or GraphMatrixKind.ADJACENCY)
    A = build_matrix(G, kind)
    up = graph_bound(G, kind, "upper")
    lo = graph_bound(G, kind, "lower")
    extra = [("upper", v) for v in up.curve.values] + [("lower", lo.lower.value)]
    return A, format_edge_list(G), extra


def run_scan(count: int, seed: int, n_min: int, n_max: int, density: float,
             family: str = "matrix", kind: str | None = None):
    """Run the scan; returns (summary, per-instance results).

    Raises ScanViolation on the first instance whose bounds fail to sandwich rho.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if family not in ("matrix", "graph"):
        raise ValueError(f"unknown family {family!r}")
    if family == "graph":
        kind = GraphMatrixKind(kind or GraphMatrixKind.ADJACENCY).value
        if n_min < 2:
            raise ValueError("graph family needs n_min >= 2")
    summary = ScanSummary(seed=seed, count=count, family=family, kind=kind)
    results = []
    for index in range(count):
        A, dump, extra = make_instance(seed, index, n_min, n_max, density, family, kind)
        res = evaluate_instance(index, A, extra)
        if res.violation > VIOLATION_TOL:
            raise ScanViolation(index, res.violation, dump)
        summary.upper_wins[res.winner] += 1
        summary.lower_wins[res.lower_winner] += 1
        summary.certificate_hits["upper"] += res.upper_cert
        summary.certificate_hits["lower"] += res.lower_cert
        summary.max_violation = max(summary.max_violation, res.violation)
        results.append(res)
    return summary, results


def render_rows(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in results:
        w.writerow([r.index, r.n] + [round_sig(getattr(r, c)) for c in CSV_COLUMNS[2:]])
    return buf.getvalue()
