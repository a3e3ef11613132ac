"""The exact root-isolation oracle, checked against closed forms."""

import math
from fractions import Fraction

import numpy as np
import pytest

from specbound.oracle import charpoly, largest_real_root, oracle_spectral_radius


def test_charpoly_of_known_matrices():
    assert charpoly([[2.0]]) == [1, -2]
    # [[0,1],[1,0]] -> x^2 - 1
    assert charpoly([[0, 1], [1, 0]]) == [1, 0, -1]
    # J_3 -> x^3 - 3x^2
    assert charpoly(np.ones((3, 3))) == [1, -3, 0, 0]


def test_charpoly_coefficients_are_trace_and_determinant():
    A = [[1, 2, 0], [0.5, 3, 1], [2, 0, 0.25]]
    p = charpoly(A)
    assert p[1] == -Fraction(1) - 3 - Fraction(1, 4)
    det = Fraction(str(np.linalg.det(A)))
    assert abs(float(-p[3] - det)) < 1e-12


@pytest.mark.parametrize("matrix, expected", [
    ([[0, 1, 1, 1], [1, 0, 2, 2], [1, 2, 0, 2], [1, 2, 2, 0]], 2 + math.sqrt(7)),
    ([[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1], [1, 1, 1, 0]], math.sqrt(3)),
    (np.ones((4, 4)), 4.0),
    ([[1, 0], [0, 1]], 1.0),
    ([[1, 1], [0, 1]], 1.0),
    ([[0, 0], [0, 0]], 0.0),
    ([[7]], 7.0),
])
def test_oracle_closed_forms(matrix, expected):
    assert oracle_spectral_radius(matrix) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_largest_root_picks_the_top_of_several():
    # (x-1)(x-2)(x-3)
    p = [Fraction(1), Fraction(-6), Fraction(11), Fraction(-6)]
    assert largest_real_root(p, Fraction(0), Fraction(4)) == pytest.approx(3.0, abs=1e-13)
    # double root at the top: (x-2)^2 (x-1)
    p = [Fraction(1), Fraction(-5), Fraction(8), Fraction(-4)]
    assert largest_real_root(p, Fraction(0), Fraction(3)) == pytest.approx(2.0, abs=1e-13)


def test_oracle_agrees_with_dense_eigensolver():
    rng = np.random.default_rng(7)
    for _ in range(25):
        n = int(rng.integers(2, 6))
        A = rng.random((n, n)) * (rng.random((n, n)) < 0.7)
        A[np.arange(n), (np.arange(n) + 1) % n] += 0.5
        expected = max(abs(np.linalg.eigvals(A)))
        assert oracle_spectral_radius(A) == pytest.approx(expected, rel=1e-10)
