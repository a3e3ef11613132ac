"""Simple undirected graphs and the five nonnegative matrices built from them."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    IsolatedVertex,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
)
from .matrix import NonnegMatrix


class GraphMatrixKind(enum.Enum):
    ADJACENCY = "adjacency"
    SIGNLESS_LAPLACIAN = "signless-laplacian"
    DISTANCE = "distance"
    DISTANCE_SIGNLESS_LAPLACIAN = "distance-signless-laplacian"
    RECIPROCAL = "reciprocal"

    @property
    def needs_connected(self) -> bool:
        return self in DISTANCE_FAMILY


DISTANCE_FAMILY = frozenset({
    GraphMatrixKind.DISTANCE,
    GraphMatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
    GraphMatrixKind.RECIPROCAL,
})


@dataclass(frozen=True)
class Graph:
    """Vertices are 0..n-1 internally; the text format is 1-based."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        canon = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        edges = tuple(sorted(canon))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(x)) for x in nbrs))

    @property
    def degrees(self) -> np.ndarray:
        return np.array([len(x) for x in self.adjacency], dtype=float)

    @classmethod
    def from_edges(cls, n: int, edges, one_based: bool = False) -> Graph:
        shift = 1 if one_based else 0
        return cls(n, tuple((u - shift, v - shift) for u, v in edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star(n: int) -> Graph:
    """K_{1,n-1} with the hub at vertex 0."""
    return Graph(n, tuple((0, j) for j in range(1, n)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """Hub 0 joined to a cycle on 1..n-1 (n vertices in total)."""
    rim = n - 1
    spokes = [(0, j) for j in range(1, n)]
    ring = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, tuple(spokes + ring))


# --- text format -----------------------------------------------------------

def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLine(lineno, line)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLine(lineno, line) from None


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v" (1-based). '#' starts a comment line."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _int_pair(line, lineno)
            if header[0] < 1 or header[1] < 0:
                raise MalformedLine(lineno, line, "expected n >= 1 and m >= 0")
            continue
        n, m = header
        if len(edges) == m:
            raise MalformedLine(lineno, line, f"more than the declared {m} edges")
        u, v = _int_pair(line, lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise VertexOutOfRange(lineno, x, n)
        if u == v:
            raise SelfLoop(lineno, u)
        e = (min(u, v) - 1, max(u, v) - 1)
        if e in seen:
            raise DuplicateEdge(lineno, u, v)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise MalformedLine(max(lineno, 1), "", "missing 'n m' header")
    if len(edges) != header[1]:
        raise MalformedLine(lineno, "", f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"] + [f"{u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


# --- distances -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DistanceData:
    dist: np.ndarray  # float; inf between components
    transmissions: np.ndarray
    diameter: float
    connected: bool

    @property
    def d_max_transmission(self) -> float:
        return float(self.transmissions.max())

    @property
    def d_min_transmission(self) -> float:
        return float(self.transmissions.min())


def apsp(G: Graph) -> DistanceData:
    """All-pairs shortest path lengths by one BFS per vertex."""
    n = G.n
    dist = np.full((n, n), np.inf)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if row[w] == np.inf:
                    row[w] = row[u] + 1
                    queue.append(w)
    connected = bool(np.all(np.isfinite(dist)))
    dist.setflags(write=False)
    tr = dist.sum(axis=1)
    tr.setflags(write=False)
    return DistanceData(dist=dist, transmissions=tr, diameter=float(dist.max()), connected=connected)


def _require_connected(data: DistanceData) -> None:
    if not data.connected:
        unreachable = int(np.flatnonzero(~np.isfinite(data.dist[0]))[0])
        raise Disconnected(unreachable)


def _require_no_isolated(G: Graph) -> None:
    for v, nb in enumerate(G.adjacency):
        if not nb:
            raise IsolatedVertex(v)


def build_matrix(G: Graph, kind: GraphMatrixKind, data: DistanceData | None = None) -> NonnegMatrix:
    kind = GraphMatrixKind(kind)
    if kind in DISTANCE_FAMILY:
        data = data or apsp(G)
        _require_connected(data)
        D = np.array(data.dist)
        if kind is GraphMatrixKind.DISTANCE:
            return NonnegMatrix(D)
        if kind is GraphMatrixKind.DISTANCE_SIGNLESS_LAPLACIAN:
            return NonnegMatrix(D + np.diag(data.transmissions))
        R = np.zeros_like(D)
        off = ~np.eye(G.n, dtype=bool)
        R[off] = 1.0 / D[off]
        return NonnegMatrix(R)
    _require_no_isolated(G)
    A = np.zeros((G.n, G.n))
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1.0
    if kind is GraphMatrixKind.SIGNLESS_LAPLACIAN:
        A += np.diag(G.degrees)
    return NonnegMatrix(A)


def reciprocal_stats(G: Graph, data: DistanceData | None = None) -> tuple[np.ndarray, float, float]:
    """Row sums R_i of the reciprocal distance matrix, with their max and min."""
    R = build_matrix(G, GraphMatrixKind.RECIPROCAL, data).entries.sum(axis=1)
    return R, float(R.max()), float(R.min())


def is_connected(G: Graph) -> bool:
    return apsp(G).connected
