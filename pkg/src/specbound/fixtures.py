"""Worked example matrices, with the values printed alongside them (4 decimals)."""

import numpy as np

from .matrix import NonnegMatrix

A1 = NonnegMatrix(np.array([
    [0, 1, 1, 1],
    [1, 0, 2, 2],
    [1, 2, 0, 2],
    [1, 2, 2, 0],
], dtype=float))

A1_PRIME = NonnegMatrix(np.array([
    [0, 2, 2, 1],
    [2, 0, 2, 1],
    [2, 2, 0, 1],
    [1, 1, 1, 0],
], dtype=float))

A2 = NonnegMatrix(np.array([
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [1, 1, 1, 0],
], dtype=float))

A2_PRIME = NonnegMatrix(np.array([
    [0, 1, 1, 1],
    [1, 0, 0, 0],
    [1, 0, 0, 0],
    [1, 0, 0, 0],
], dtype=float))

A3 = NonnegMatrix(np.array([
    [0, 2, 2, 4],
    [2, 0, 2, 2],
    [2, 2, 0, 2],
    [1.9, 1.9, 1.9, 0],
]))

A3_PRIME = NonnegMatrix(np.array([
    [0, 1.9, 1.9, 1.9],
    [2, 0, 2, 2],
    [2, 2, 0, 2],
    [4, 2, 2, 0],
]))

J4 = NonnegMatrix(np.ones((4, 4)))

MATRICES = {
    "A1": A1,
    "A1'": A1_PRIME,
    "A2": A2,
    "A2'": A2_PRIME,
    "A3": A3,
    "A3'": A3_PRIME,
}

# (matrix, quantity, printed value); quantity names are the keys built in
# specbound.examples_check
PRINTED_VALUES = [
    ("A1", "m", (5, 23 / 5, 23 / 5, 23 / 5)),
    ("A1", "M", 0), ("A1", "N", 2), ("A1", "b", 5 / 3),
    ("A1", "phi", (5, 4.7647, 4.9230, 5.0757)),
    ("A1", "S", 0), ("A1", "T", 1), ("A1", "c", 3 / 5),
    ("A1", "psi", 4.6458),
    ("A1", "rho", 4.6458),
    ("A1'", "r", (5, 5, 5, 3)),
    ("A1'", "M", 0), ("A1'", "N", 2),
    ("A1'", "Phi", (5, 5, 5, 4.7720)),
    ("A1'", "S", 0), ("A1'", "T", 1),
    ("A1'", "Psi", 4.1623),
    ("A1'", "rho", 4.6458),
    ("A2", "m", (3, 3, 3, 1)),
    ("A2", "M", 0), ("A2", "N", 1), ("A2", "b", 3),
    ("A2", "phi", (3, 3, 3, 3.6904)),
    ("A2", "rho", 1.732),
    ("A2'", "r", (3, 1, 1, 1)),
    ("A2'", "M", 0), ("A2'", "N", 1),
    ("A2'", "Phi", (3, 1.732, 2.236, 2.6458)),
    ("A2'", "rho", 1.732),
    ("A3", "r", (8, 6, 6, 5.7)),
    ("A3", "S", 0), ("A3", "T", 1.9),
    ("A3", "Psi", 6.3665),
    ("A3'", "m", (20 / 3, 197 / 30, 197 / 30, 5.85)),
    ("A3'", "S", 0), ("A3'", "T", 1.9), ("A3'", "c", 0.7125),
    ("A3'", "psi", 6.2506),
]

# pairs related by a permutation similarity: spectral radii agree exactly
SIMILAR_PAIRS = [("A1", "A1'"), ("A2", "A2'"), ("A3", "A3'")]
