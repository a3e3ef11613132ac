"""Exact small-n spectral radius oracle.

Builds the characteristic polynomial in rational arithmetic
(Faddeev-LeVerrier) and isolates its largest real root with Sturm
sequences. Shares no code with the power-iteration path in
:mod:`specbound.matrix`, so the two can be used to check each other.
"""

from __future__ import annotations

from fractions import Fraction

Poly = list  # coefficients, highest degree first


def _to_fraction_matrix(a) -> list[list[Fraction]]:
    return [[Fraction(float(x)) for x in row] for row in a]


def charpoly(a) -> Poly:
    """Coefficients of det(xI - A), highest degree first, as Fractions."""
    A = _to_fraction_matrix(a)
    n = len(A)
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = [[sum((A[i][t] * Mk[t][j] for t in range(n)), Fraction(0)) for j in range(n)]
              for i in range(n)]
        for i in range(n):
            AM[i][i] += c_prev
        Mk = AM
        tr = sum((sum((A[i][t] * Mk[t][i] for t in range(n)), Fraction(0)) for i in range(n)),
                 Fraction(0))
        c_prev = -tr / k
        coeffs.append(c_prev)
    return coeffs


def _strip(p: Poly) -> Poly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _deriv(p: Poly) -> Poly:
    d = len(p) - 1
    return _strip([c * (d - i) for i, c in enumerate(p[:-1])]) or [Fraction(0)]


def _rem(p: Poly, q: Poly) -> Poly:
    p = list(p)
    while len(p) >= len(q) and any(p):
        f = p[0] / q[0]
        for i in range(len(q)):
            p[i] -= f * q[i]
        p = p[1:]
    return _strip(p) if p else [Fraction(0)]


def _divide(p: Poly, q: Poly) -> Poly:
    p = list(p)
    out = []
    while len(p) >= len(q):
        f = p[0] / q[0]
        out.append(f)
        for i in range(len(q)):
            p[i] -= f * q[i]
        p = p[1:]
    return out


def _gcd(p: Poly, q: Poly) -> Poly:
    while any(q):
        p, q = q, _rem(p, q)
    return [c / p[0] for c in p]


def _evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, _deriv(p)]
    while True:
        r = _rem(chain[-2], chain[-1])
        if not any(r):
            return chain
        chain.append([-c for c in r])


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = [v for v in (_evaluate(q, x) for q in chain) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def largest_real_root(p: Poly, lo: Fraction, hi: Fraction, tol: float = 1e-14) -> float:
    """Largest real root of ``p`` in ``[lo, hi]``; ``p`` must have one there."""
    p = _strip(p)
    g = _gcd(p, _deriv(p)) if len(p) > 2 else [Fraction(1)]
    q = _divide(p, g) if len(g) > 1 else p
    if _evaluate(q, hi) == 0:
        return float(hi)
    chain = sturm_chain(q)
    # open the interval slightly so the left end is not itself a root
    width = hi - lo
    lo = lo - (width if width > 0 else Fraction(1)) / 1024
    while _evaluate(q, lo) == 0:
        lo -= Fraction(1, 4096)
    v_hi = _sign_changes(chain, hi)
    if _sign_changes(chain, lo) - v_hi < 1:
        raise ValueError("no real root in the bracketing interval")
    eps = Fraction(tol) * max(Fraction(1), abs(hi))
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if _evaluate(q, mid) == 0:
            if _sign_changes(chain, mid) - v_hi == 0:
                return float(mid)
            mid += (hi - lo) / 7
        if _sign_changes(chain, mid) - v_hi >= 1:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def oracle_spectral_radius(a, tol: float = 1e-14) -> float:
    """Spectral radius of a nonnegative matrix, by exact root isolation.

    The Perron root is the largest real eigenvalue and lies between the
    smallest and largest row sums, so that interval brackets it.
    """
    A = _to_fraction_matrix(a)
    rows = [sum(r, Fraction(0)) for r in A]
    lo, hi = min(rows), max(rows)
    return largest_real_root(charpoly(a), lo, hi, tol)
