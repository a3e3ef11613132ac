import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from specbound.errors import (
    Disconnected,
    DuplicateEdge,
    IsolatedVertex,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
)
from specbound.fixtures import A1, A2_PRIME
from specbound.graphs import (
    Graph,
    GraphMatrixKind as K,
    apsp,
    build_matrix,
    complete_graph,
    cycle,
    format_edge_list,
    is_connected,
    parse_edge_list,
    path,
    reciprocal_stats,
    star,
    wheel,
)
from specbound.matrix import avg_two_row_sums, is_irreducible, row_sums

STAR4 = "4 3\n1 2\n1 3\n1 4\n"


def test_parse_star():
    G = parse_edge_list("# K_{1,3}\n" + STAR4)
    assert G == star(4)
    assert list(G.degrees) == [3, 1, 1, 1]


def test_parse_accepts_reversed_pairs():
    assert parse_edge_list("3 2\n2 1\n3 2\n") == path(3)


@pytest.mark.parametrize("text, exc, line", [
    ("3 2\n1 2\n", MalformedLine, 2),
    ("3 1\n1 2\n2 3\n", MalformedLine, 3),
    ("3 1\n1 4\n", VertexOutOfRange, 2),
    ("3 1\n0 2\n", VertexOutOfRange, 2),
    ("3 1\n2 2\n", SelfLoop, 2),
    ("3 2\n1 2\n2 1\n", DuplicateEdge, 3),
    ("3 1\n1 x\n", MalformedLine, 2),
    ("3 1\n1 2 3\n", MalformedLine, 2),
    ("", MalformedLine, 1),
    ("3\n", MalformedLine, 1),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_round_trip():
    for G in (star(5), wheel(6), cycle(4), Graph(3, ())):
        assert parse_edge_list(format_edge_list(G)) == G


def test_apsp_examples():
    d = apsp(path(3))
    assert d.dist.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert list(d.transmissions) == [3, 2, 3]
    assert d.diameter == 2
    d = apsp(complete_graph(4))
    assert d.diameter == 1 and list(d.transmissions) == [3, 3, 3, 3]
    d = apsp(star(4))
    assert list(d.transmissions) == [3, 5, 5, 5] and d.diameter == 2
    d = apsp(Graph(3, ((0, 1),)))
    assert not d.connected and d.dist[0, 2] == np.inf


def test_build_matrix_examples():
    assert build_matrix(star(4), K.DISTANCE) == A1
    assert build_matrix(star(4), K.ADJACENCY) == A2_PRIME
    J_I = np.ones((4, 4)) - np.eye(4)
    assert build_matrix(complete_graph(4), K.DISTANCE).entries.tolist() == J_I.tolist()
    assert build_matrix(complete_graph(4), K.RECIPROCAL).entries.tolist() == J_I.tolist()
    Q = build_matrix(star(4), K.SIGNLESS_LAPLACIAN).entries
    assert list(np.diag(Q)) == [3, 1, 1, 1]
    DQ = build_matrix(star(4), K.DISTANCE_SIGNLESS_LAPLACIAN).entries
    assert list(np.diag(DQ)) == [3, 5, 5, 5]
    R = build_matrix(path(3), K.RECIPROCAL).entries
    assert R[0, 2] == 0.5


def test_build_matrix_preconditions():
    G = Graph(3, ((0, 1),))
    with pytest.raises(IsolatedVertex) as exc:
        build_matrix(G, K.ADJACENCY)
    assert exc.value.vertex == 2
    for kind in (K.DISTANCE, K.DISTANCE_SIGNLESS_LAPLACIAN, K.RECIPROCAL):
        with pytest.raises(Disconnected):
            build_matrix(G, kind)
    # no isolated vertex but two components: adjacency is fine, reducible
    G = Graph(4, ((0, 1), (2, 3)))
    assert not is_irreducible(build_matrix(G, K.ADJACENCY))


def test_reciprocal_stats_examples():
    R, rmax, rmin = reciprocal_stats(star(4))
    assert list(R) == [3, 2, 2, 2] and (rmax, rmin) == (3, 2)
    R, rmax, rmin = reciprocal_stats(path(3))
    assert list(R) == [1.5, 2, 1.5]


def test_wheel_shape():
    W = wheel(6)
    assert list(W.degrees) == [5, 3, 3, 3, 3, 3]
    assert len(W.edges) == 10


@given(graphs(connected=True))
def test_row_sums_are_degrees_and_transmissions(G):
    d = apsp(G)
    assert list(row_sums(build_matrix(G, K.ADJACENCY))) == list(G.degrees)
    assert list(row_sums(build_matrix(G, K.DISTANCE))) == list(d.transmissions)
    assert list(row_sums(build_matrix(G, K.SIGNLESS_LAPLACIAN))) == list(2 * G.degrees)
    assert list(row_sums(build_matrix(G, K.DISTANCE_SIGNLESS_LAPLACIAN))) == list(2 * d.transmissions)


@given(graphs(connected=True))
def test_adjacency_avg2_is_average_neighbour_degree(G):
    m = avg_two_row_sums(build_matrix(G, K.ADJACENCY))
    d = G.degrees
    for v in range(G.n):
        assert m[v] == pytest.approx(np.mean([d[w] for w in G.adjacency[v]]), rel=1e-12)


@given(graphs(connected=True))
def test_graph_matrices_symmetric(G):
    for kind in K:
        assert build_matrix(G, kind).is_symmetric()


@given(graphs())
def test_connectivity_iff_irreducible(G):
    if any(not nb for nb in G.adjacency):
        assert not is_connected(G) or G.n == 1
        return
    assert is_connected(G) == is_irreducible(build_matrix(G, K.ADJACENCY))


@given(graphs(connected=True))
def test_distances_are_a_metric(G):
    D = apsp(G).dist
    assert np.all(D == D.T) and np.all(np.diag(D) == 0)
    n = G.n
    for k in range(n):
        assert np.all(D <= D[:, [k]] + D[[k], :])
    for u, v in G.edges:
        assert D[u, v] == 1
