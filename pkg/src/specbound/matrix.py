"""Dense nonnegative matrices: row statistics, irreducibility, spectral radius."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import MatrixParseError, NoConvergence, ZeroRowSum

DEFAULT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NonnegMatrix:
    """Square matrix with finite nonnegative float64 entries (read-only)."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        if np.any(a < 0):
            i, j = np.argwhere(a < 0)[0]
            raise ValueError(f"negative entry at ({i + 1}, {j + 1})")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def permuted(self, perm) -> NonnegMatrix:
        """Return P A P^T, i.e. rows and columns reindexed by ``perm``."""
        p = np.asarray(perm)
        return NonnegMatrix(self.entries[np.ix_(p, p)])

    def scaled(self, alpha: float) -> NonnegMatrix:
        return NonnegMatrix(alpha * self.entries)

    def is_symmetric(self, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.entries, self.entries.T, rtol=0.0, atol=atol))

    def __eq__(self, other):
        if not isinstance(other, NonnegMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash(self.entries.tobytes())


def as_matrix(a) -> NonnegMatrix:
    return a if isinstance(a, NonnegMatrix) else NonnegMatrix(a)


@dataclass(frozen=True)
class Profile:
    """Row statistics that every bound is built from.

    ``N`` and ``T`` are ``None`` for a 1x1 matrix, which has no
    off-diagonal entries.
    """

    row_sums: tuple[float, ...]
    avg2: tuple[float, ...]
    order: tuple[int, ...]
    M: float
    N: float | None
    S: float
    T: float | None
    b: float
    c: float

    @property
    def n(self) -> int:
        return len(self.row_sums)

    @property
    def sorted_avg2(self) -> np.ndarray:
        return np.array([self.avg2[i] for i in self.order])


def row_sums(a) -> np.ndarray:
    return as_matrix(a).entries.sum(axis=1)


def avg_two_row_sums(a) -> np.ndarray:
    """m_i = (sum_k a_ik r_k) / r_i for every row."""
    A = as_matrix(a).entries
    r = A.sum(axis=1)
    zero = np.flatnonzero(r <= 0)
    if zero.size:
        raise ZeroRowSum(int(zero[0]))
    return (A @ r) / r


def descending_order(values) -> tuple[int, ...]:
    """Stable descending sort; ties keep ascending original index."""
    v = np.asarray(values)
    return tuple(int(i) for i in np.argsort(-v, kind="stable"))


def profile(a) -> Profile:
    A = as_matrix(a)
    E = A.entries
    r = E.sum(axis=1)
    m = avg_two_row_sums(A)
    diag = np.diag(E)
    if A.n > 1:
        off = E[~np.eye(A.n, dtype=bool)]
        N, T = float(off.max()), float(off.min())
    else:
        N = T = None
    return Profile(
        row_sums=tuple(float(x) for x in r),
        avg2=tuple(float(x) for x in m),
        order=descending_order(m),
        M=float(diag.max()),
        N=N,
        S=float(diag.min()),
        T=T,
        b=float(r.max() / r.min()),
        c=float(r.min() / r.max()),
    )


def _successors(E: np.ndarray) -> list[list[int]]:
    n = E.shape[0]
    return [[j for j in np.flatnonzero(E[i] > 0) if j != i] for i in range(n)]


def scc_blocks(a) -> list[list[int]]:
    """Strongly connected components of the off-diagonal nonzero pattern.

    Iterative Tarjan. Components come out in topological order of the
    condensation (a component precedes every component it has arcs into).
    Indices are 0-based and sorted within each block.
    """
    E = as_matrix(a).entries
    n = E.shape[0]
    succ = _successors(E)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    # Tarjan emits sinks first
    out.reverse()
    return out


def is_irreducible(a) -> bool:
    return len(scc_blocks(a)) == 1


@dataclass(frozen=True)
class SpectralEstimate:
    rho: float
    iterations: int
    residual: float
    method: str  # "power-iteration-per-block" | "exact-small"


def default_max_iters(n: int) -> int:
    return 100 * n * n + 10_000


def _block_radius(B: np.ndarray, tol: float, max_iters: int) -> tuple[float, int, float]:
    # Iterate on B/s + I, with s the largest row sum: B/s + I is primitive and
    # its shift is on the scale of rho, so small or periodic blocks converge.
    # Stop once the relative change of the max-norm ratio has stayed below tol
    # for 3 steps and the Collatz-Wielandt bracket min/max (Bx)_i/x_i, which
    # contains rho for every positive x, is tol-tight (floored at rounding level).
    n = B.shape[0]
    s = float(B.sum(axis=1).max())
    C = B / s + np.eye(n)
    width_tol = max(tol, 64 * n * np.finfo(float).eps)
    x = np.ones(n)
    lam_prev = None
    streak = 0
    change = width = math.inf
    for it in range(1, max_iters + 1):
        y = C @ x
        lam = float(y.max())
        if lam_prev is not None:
            change = abs(lam - lam_prev) / lam
            streak = streak + 1 if change < tol else 0
        lam_prev = lam
        ratios = (B @ x) / x
        lo, hi = float(ratios.min()), float(ratios.max())
        width = (hi - lo) / hi
        if streak >= 3 and width <= width_tol:
            return 0.5 * (lo + hi), it, width
        x = y / lam
    raise NoConvergence(max_iters, width if math.isfinite(width) else change)


def spectral_radius(a, tol: float = DEFAULT_TOL, max_iters: int | None = None) -> SpectralEstimate:
    """Spectral radius as the largest radius over irreducible diagonal blocks."""
    A = as_matrix(a)
    E = A.entries
    if max_iters is None:
        max_iters = default_max_iters(A.n)
    rho = 0.0
    iterations = 0
    residual = 0.0
    iterated = False
    for block in scc_blocks(A):
        if len(block) == 1:
            rho = max(rho, float(E[block[0], block[0]]))
            continue
        iterated = True
        r, its, res = _block_radius(E[np.ix_(block, block)], tol, max_iters)
        rho = max(rho, r)
        iterations += its
        residual = max(residual, res)
    method = "power-iteration-per-block" if iterated else "exact-small"
    return SpectralEstimate(rho=rho, iterations=iterations, residual=residual, method=method)


# --- text format -----------------------------------------------------------

def parse_matrix(text: str) -> NonnegMatrix:
    """Parse the matrix text format.

    First significant line holds n, then n rows of n nonnegative decimals.
    Lines starting with '#' and blank lines are ignored.
    """
    rows: list[list[float]] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if n is None:
            try:
                n = int(stripped)
            except ValueError:
                raise MatrixParseError(f"expected the matrix order, got {stripped!r}", lineno, 1) from None
            if n < 1:
                raise MatrixParseError(f"matrix order must be positive, got {n}", lineno, 1)
            continue
        if len(rows) == n:
            raise MatrixParseError(f"extra data after {n} rows", lineno, 1)
        row = []
        for match in re.finditer(r"\S+", raw):
            tok, col = match.group(), match.start() + 1
            try:
                x = float(tok)
            except ValueError:
                raise MatrixParseError(f"not a number: {tok!r}", lineno, col) from None
            if not math.isfinite(x):
                raise MatrixParseError(f"entry must be finite: {tok!r}", lineno, col)
            if x < 0:
                raise MatrixParseError(f"negative entry {tok!r}", lineno, col)
            row.append(x)
        if len(row) != n:
            raise MatrixParseError(f"expected {n} entries, found {len(row)}", lineno, None)
        rows.append(row)
    if n is None:
        raise MatrixParseError("empty input")
    if len(rows) != n:
        raise MatrixParseError(f"expected {n} rows, found {len(rows)}")
    return NonnegMatrix(np.array(rows))


def _fmt_entry(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def format_matrix(a) -> str:
    E = as_matrix(a).entries
    lines = [str(E.shape[0])]
    lines += [" ".join(_fmt_entry(x) for x in row) for row in E]
    return "\n".join(lines) + "\n"
