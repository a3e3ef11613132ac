import numpy as np
from hypothesis import strategies as st

from specbound.graphs import Graph
from specbound.matrix import NonnegMatrix

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def nonneg_matrices(draw, min_n=1, max_n=6, dyadic=True):
    """Nonnegative matrices with positive row sums.

    Dyadic entries (k/8) keep row sums exact under any permutation.
    """
    n = draw(st.integers(min_n, max_n))
    if dyadic:
        elem = st.integers(0, 24).map(lambda k: k / 8)
    else:
        elem = st.one_of(st.just(0.0), st.floats(0.01, 10.0, allow_nan=False))
    rows = draw(st.lists(st.lists(elem, min_size=n, max_size=n), min_size=n, max_size=n))
    A = np.array(rows, dtype=float)
    for i in range(n):
        if A[i].sum() == 0:
            A[i, draw(st.integers(0, n - 1))] = 1.0
    return NonnegMatrix(A)


@st.composite
def irreducible_matrices(draw, min_n=2, max_n=6, dyadic=True):
    A = draw(nonneg_matrices(min_n=min_n, max_n=max_n, dyadic=dyadic)).entries.copy()
    n = A.shape[0]
    perm = draw(st.permutations(range(n)))
    for i in range(n):
        u, v = perm[i], perm[(i + 1) % n]
        if A[u, v] == 0:
            A[u, v] = 1.0
    return NonnegMatrix(A)


@st.composite
def graphs(draw, min_n=2, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, k in zip(pairs, keep) if k]
    if connected:
        # a random spanning tree guarantees connectivity
        order = draw(st.permutations(range(n)))
        for idx in range(1, n):
            parent = order[draw(st.integers(0, idx - 1))]
            e = (min(order[idx], parent), max(order[idx], parent))
            if e not in edges:
                edges.append(e)
    return Graph(n, tuple(edges))
