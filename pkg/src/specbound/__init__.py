"""Spectral radius bounds for nonnegative matrices from average 2-row sums."""

from .bounds import (
    EqualityCertificate,
    LowerBoundValue,
    UpperBoundCurve,
    best_l,
    duan_phi_curve,
    duan_psi,
    lower_certificate,
    phi_curve,
    psi,
    symmetric_certificate_form,
    upper_certificate,
)
from .graph_bounds import adjacency_upper_simple, graph_bound, stated_equality_predicate
from .graphs import Graph, GraphMatrixKind, apsp, build_matrix, parse_edge_list, reciprocal_stats
from .matrix import (
    NonnegMatrix,
    Profile,
    SpectralEstimate,
    avg_two_row_sums,
    is_irreducible,
    parse_matrix,
    profile,
    row_sums,
    scc_blocks,
    spectral_radius,
)

__version__ = "0.1.0"
