"""Bounds for the five graph matrices, computed from graph quantities.

Each kind plugs its own (M, N, b) or (S, T, c) into the closed forms of
:mod:`specbound.bounds`; average 2-quantities are computed from degrees,
transmissions and reciprocal transmissions directly rather than from the
built matrix, so agreement with the general engine is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bounds
from .bounds import EqualityCertificate, LowerBoundValue, UpperBoundCurve
from .errors import Disconnected
from .graphs import DistanceData, Graph, GraphMatrixKind, apsp, build_matrix
from .matrix import SpectralEstimate, descending_order, spectral_radius

K = GraphMatrixKind

# kinds/directions with a dedicated published bound; the rest are the
# general matrix bound applied to the graph matrix
STATED = {
    (K.ADJACENCY, "upper"),
    (K.SIGNLESS_LAPLACIAN, "upper"),
    (K.DISTANCE, "upper"),
    (K.DISTANCE, "lower"),
    (K.DISTANCE_SIGNLESS_LAPLACIAN, "upper"),
    (K.DISTANCE_SIGNLESS_LAPLACIAN, "lower"),
    (K.RECIPROCAL, "upper"),
}


@dataclass(frozen=True, eq=False)
class GraphQuantities:
    """Per-vertex values a kind's bound is expressed in."""

    kind: GraphMatrixKind
    avg2: np.ndarray  # average 2-degree / 2-transmission / 2-reciprocal transmission
    vertex_value: np.ndarray  # d_i, D_i or R_i (the quantity the equality predicates speak about)
    params: dict


def _is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def graph_quantities(G: Graph, kind: GraphMatrixKind, data: DistanceData | None = None) -> GraphQuantities:
    kind = GraphMatrixKind(kind)
    n = G.n
    complete = _is_complete(G)
    if kind in (K.ADJACENCY, K.SIGNLESS_LAPLACIAN):
        build_matrix(G, kind)  # precondition check only
        d = G.degrees
        nbr_sum = np.array([sum(d[j] for j in G.adjacency[i]) for i in range(n)])
        dmax, dmin = float(d.max()), float(d.min())
        if kind is K.ADJACENCY:
            m = nbr_sum / d
            params = dict(M=0.0, N=1.0, b=dmax / dmin,
                          S=0.0, T=1.0 if complete else 0.0, c=dmin / dmax)
        else:
            m = d + nbr_sum / d
            params = dict(M=dmax, N=1.0, b=dmax / dmin,
                          S=dmin, T=1.0 if complete else 0.0, c=dmin / dmax)
        return GraphQuantities(kind, m, d, params)

    data = data or apsp(G)
    if not data.connected:
        raise Disconnected(int(np.flatnonzero(~np.isfinite(data.dist[0]))[0]))
    dist = data.dist
    off = ~np.eye(n, dtype=bool)
    if kind is K.RECIPROCAL:
        inv = np.zeros_like(dist)
        inv[off] = 1.0 / dist[off]
        R = inv.sum(axis=1)
        m = (inv @ R) / R
        rmax, rmin = float(R.max()), float(R.min())
        params = dict(M=0.0, N=1.0, b=rmax / rmin,
                      S=0.0, T=1.0 / data.diameter, c=rmin / rmax)
        return GraphQuantities(kind, m, R, params)

    D = data.transmissions
    Dmax, Dmin = data.d_max_transmission, data.d_min_transmission
    weighted = (dist @ D) / D
    if kind is K.DISTANCE:
        params = dict(M=0.0, N=data.diameter, b=Dmax / Dmin, S=0.0, T=1.0, c=Dmin / Dmax)
        return GraphQuantities(kind, weighted, D, params)
    params = dict(M=Dmax, N=data.diameter, b=Dmax / Dmin, S=Dmin, T=1.0, c=Dmin / Dmax)
    return GraphQuantities(kind, D + weighted, D, params)


@dataclass(frozen=True)
class PredicateResult:
    holds: bool | None  # None: no equality statement exists for this kind/direction
    branch: str | None  # "m-equal" | "dominant-vertex"
    vertex: int | None  # 1-based distinguished vertex
    witness: tuple[float, tuple[float, ...]] | None  # (value at vertex; others sorted)
    m_sorted_reading: bool | None  # same test, anchored at the m-largest vertex instead


def _dominant_test(values: np.ndarray, p: int, target: float, larger_rest: bool) -> bool:
    rest = np.delete(values, p)
    if not bounds.close(values[p], target):
        return False
    if not all(bounds.close(x, rest[0]) for x in rest):
        return False
    return bool(rest[0] > values[p]) if larger_rest else bool(rest[0] < values[p])


def stated_equality_predicate(G: Graph, kind: GraphMatrixKind, direction: str,
                              q: GraphQuantities | None = None) -> PredicateResult:
    """The equality condition printed with each graph bound, evaluated literally.

    Index 1 in the printed condition is read as the distinguished vertex: the one
    with the extreme degree (resp. R_i, transmission). The reading anchored at
    the m-largest vertex is reported next to it for audit.
    """
    kind = GraphMatrixKind(kind)
    if kind in (K.ADJACENCY, K.SIGNLESS_LAPLACIAN):
        data = apsp(G)
        if not data.connected:
            raise Disconnected(int(np.flatnonzero(~np.isfinite(data.dist[0]))[0]))
    q = q or graph_quantities(G, kind)
    if (kind, direction) not in STATED:
        return PredicateResult(None, None, None, None, None)
    m = q.avg2
    if bounds.close(float(m.max()), float(m.min())):
        return PredicateResult(True, "m-equal", None, None, True)
    if kind in (K.DISTANCE, K.DISTANCE_SIGNLESS_LAPLACIAN) and direction == "upper":
        return PredicateResult(False, None, None, None, False)

    vals = q.vertex_value
    n = G.n
    lower = direction == "lower"
    p = int(np.argmin(vals)) if lower else int(np.argmax(vals))
    holds = _dominant_test(vals, p, n - 1, larger_rest=lower)
    p_m = descending_order(m)[0]
    m_reading = _dominant_test(vals, p_m, n - 1, larger_rest=lower)
    witness = (float(vals[p]), tuple(sorted(float(x) for x in np.delete(vals, p))))
    return PredicateResult(holds, "dominant-vertex" if holds else None, p + 1, witness, m_reading)


@dataclass(frozen=True)
class GraphBoundReport:
    kind: GraphMatrixKind
    direction: str
    stated_theorem: bool
    parameters: dict
    curve: UpperBoundCurve | None
    lower: LowerBoundValue | None
    stated_predicate: PredicateResult
    general_certificate: EqualityCertificate
    rho: SpectralEstimate

    @property
    def bound(self) -> float:
        return self.curve.best_value if self.curve is not None else self.lower.value


def specialized_upper(q: GraphQuantities, complete: bool) -> UpperBoundCurve:
    p = q.params
    m = q.avg2[list(descending_order(q.avg2))]
    Kb = p["N"] * p["b"]
    values = bounds.upper_values(m, p["M"], Kb)
    best = 1 if complete else (bounds.crossing_index(m, p["M"], Kb) or 1)
    return bounds.curve_from(values, best, "avg2")


def specialized_lower(q: GraphQuantities) -> LowerBoundValue:
    p = q.params
    m = q.avg2[list(descending_order(q.avg2))]
    return LowerBoundValue(bounds.lower_value(m, p["S"], p["T"] * p["c"]), "avg2")


def graph_bound(G: Graph, kind: GraphMatrixKind, direction: str = "upper",
                tol: float = 1e-12, max_iters: int | None = None) -> GraphBoundReport:
    kind = GraphMatrixKind(kind)
    if direction not in ("upper", "lower"):
        raise ValueError(f"direction must be 'upper' or 'lower', got {direction!r}")
    if G.n < 2:
        raise ValueError("graph bounds need n >= 2")
    data = apsp(G)
    A = build_matrix(G, kind, data)
    q = graph_quantities(G, kind, data)
    keys = ("M", "N", "b") if direction == "upper" else ("S", "T", "c")
    params = {k: q.params[k] for k in keys}
    if direction == "upper":
        curve, low = specialized_upper(q, _is_complete(G)), None
        cert = bounds.upper_certificate(A, curve.best_l)
    else:
        curve, low = None, specialized_lower(q)
        cert = bounds.lower_certificate(A)
    if data.connected:
        pred = stated_equality_predicate(G, kind, direction, q)
    else:
        pred = PredicateResult(None, None, None, None, None)
    return GraphBoundReport(
        kind=kind,
        direction=direction,
        stated_theorem=(kind, direction) in STATED,
        parameters=params,
        curve=curve,
        lower=low,
        stated_predicate=pred,
        general_certificate=cert,
        rho=spectral_radius(A, tol, max_iters),
    )


def adjacency_upper_simple(G: Graph, l: int) -> float:
    """Adjacency bound with the tail sum weakened to (l-1)(m_1 - m_l)."""
    if not 1 <= l <= G.n:
        raise ValueError(f"l must be in 1..{G.n}, got {l}")
    q = graph_quantities(G, K.ADJACENCY)
    m = q.avg2[list(descending_order(q.avg2))]
    return float(bounds.weakened_upper_values(m, 0.0, q.params["b"])[l - 1])
