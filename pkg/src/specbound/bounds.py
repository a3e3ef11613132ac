"""Spectral radius bounds from average 2-row sums and from plain row sums.

Upper curve, for x sorted descending (x = m for the avg2 family, x = r
for the row-sum family) and K = N*b (resp. K = N):

    phi_l = (x_l + M - K + sqrt((x_l - M + K)^2 + 4K sum_{i<l}(x_i - x_l))) / 2

Lower value, with K = T*c (resp. K = T):

    psi_n = (x_n + S - K + sqrt((x_n - S + K)^2 + 4K sum_{i<n}(x_i - x_n))) / 2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotSymmetric, RefusedReducible, ZeroOffDiagonal
from .matrix import Profile, as_matrix, descending_order, is_irreducible, profile

CERT_RTOL = 1e-9


@dataclass(frozen=True)
class UpperBoundCurve:
    values: tuple[float, ...]
    best_l: int  # 1-based
    best_value: float
    kind: str = "avg2"  # "avg2" | "rowsum"
    flag: str | None = None  # "zero-off-diagonal" | "order-one"


@dataclass(frozen=True)
class LowerBoundValue:
    value: float
    kind: str = "avg2"


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None  # first violating (i,) or (i, k), 1-based


@dataclass(frozen=True)
class EqualityCertificate:
    verdict: bool
    reason: str  # all-m-equal | conditions-t | all-r-equal | refused-reducible | fails
    t: int | None = None
    condition_log: tuple[ConditionCheck, ...] = field(default_factory=tuple)


def close(x: float, y: float, rtol: float = CERT_RTOL) -> bool:
    return abs(x - y) <= rtol * max(abs(x), abs(y))


# --- closed forms ----------------------------------------------------------

def _tail_gap(x: np.ndarray, l: int) -> float:
    # sum_{i<l} (x_i - x_l); termwise so it is never negative
    return float(np.sum(x[: l - 1] - x[l - 1]))


def _quadratic_root(xl: float, diag: float, K: float, gap: float) -> float:
    base = xl - diag + K
    disc = math.sqrt(base * base + 4.0 * K * gap)
    if base >= 0.0:
        # (disc - base)/2 rewritten to avoid cancellation
        denom = disc + base
        return xl + (2.0 * K * gap / denom if denom > 0.0 else 0.0)
    return xl + (disc - base) / 2.0


def upper_values(x_sorted, M: float, K: float) -> np.ndarray:
    """phi_1..phi_n for descending ``x_sorted`` with diagonal cap M and K = N*b."""
    x = np.asarray(x_sorted, dtype=float)
    return np.array([_quadratic_root(x[l - 1], M, K, _tail_gap(x, l)) for l in range(1, len(x) + 1)])


def weakened_upper_values(x_sorted, M: float, K: float) -> np.ndarray:
    """Same curve with the tail sum replaced by (l-1)(x_1 - x_l); never smaller."""
    x = np.asarray(x_sorted, dtype=float)
    return np.array([_quadratic_root(x[l - 1], M, K, (l - 1) * float(x[0] - x[l - 1]))
                     for l in range(1, len(x) + 1)])


def lower_value(x_sorted, S: float, K: float) -> float:
    """psi_n for descending ``x_sorted`` with diagonal floor S and K = T*c."""
    x = np.asarray(x_sorted, dtype=float)
    return _quadratic_root(x[-1], S, K, _tail_gap(x, len(x)))


def crossing_criterion(x_sorted, M: float, K: float, l: int) -> float:
    """sum_{i<=l} x_i - l(Kl + M - K). Nonnegative means phi_l >= phi_{l+1}."""
    x = np.asarray(x_sorted, dtype=float)
    return float(np.sum(x[:l])) - l * (K * l + M - K)


def crossing_index(x_sorted, M: float, K: float) -> int | None:
    """Smallest l in 2..n with a negative crossing criterion, or None."""
    n = len(x_sorted)
    for l in range(2, n + 1):
        if crossing_criterion(x_sorted, M, K, l) < 0:
            return l
    return None


def curve_from(values: np.ndarray, best: int, kind: str, flag: str | None = None) -> UpperBoundCurve:
    vals = tuple(float(v) for v in values)
    return UpperBoundCurve(values=vals, best_l=best, best_value=vals[best - 1], kind=kind, flag=flag)


# --- matrix-level operations -----------------------------------------------

def _degenerate_flag(prof: Profile) -> str | None:
    if prof.n == 1:
        return "order-one"
    if prof.N == 0:
        return "zero-off-diagonal"
    return None


def _is_extremal(A, prof: Profile) -> bool:
    E = as_matrix(A).entries
    off = ~np.eye(prof.n, dtype=bool)
    return bool(np.all(np.diag(E) == prof.M) and np.all(E[off] == prof.N))


def phi_curve(A, prof: Profile | None = None) -> UpperBoundCurve:
    A = as_matrix(A)
    prof = prof or profile(A)
    m = prof.sorted_avg2
    flag = _degenerate_flag(prof)
    if flag:
        return curve_from(m[:1], 1, "avg2", flag)
    values = upper_values(m, prof.M, prof.N * prof.b)
    return curve_from(values, best_l(A, prof), "avg2")


def best_l(A, prof: Profile | None = None) -> int:
    """Analytic minimizing index of the avg2 upper curve."""
    A = as_matrix(A)
    prof = prof or profile(A)
    if prof.n == 1:
        return 1
    if prof.N == 0:
        raise ZeroOffDiagonal()
    if _is_extremal(A, prof):
        return 1
    l = crossing_index(prof.sorted_avg2, prof.M, prof.N * prof.b)
    return 1 if l is None else l


def psi(A, prof: Profile | None = None) -> LowerBoundValue:
    prof = prof or profile(A)
    m = prof.sorted_avg2
    K = (prof.T or 0.0) * prof.c
    return LowerBoundValue(lower_value(m, prof.S, K), "avg2")


def _sorted_rows(prof: Profile) -> np.ndarray:
    r = np.array(prof.row_sums)
    return r[list(descending_order(r))]


def duan_phi_curve(A, prof: Profile | None = None) -> UpperBoundCurve:
    A = as_matrix(A)
    prof = prof or profile(A)
    r = _sorted_rows(prof)
    flag = _degenerate_flag(prof)
    if flag:
        return curve_from(r[:1], 1, "rowsum", flag)
    values = upper_values(r, prof.M, prof.N)
    offdiag_equal = _is_extremal(A, prof)
    l = None if offdiag_equal else crossing_index(r, prof.M, prof.N)
    return curve_from(values, 1 if l is None else l, "rowsum")


def duan_psi(A, prof: Profile | None = None) -> LowerBoundValue:
    prof = prof or profile(A)
    r = _sorted_rows(prof)
    return LowerBoundValue(lower_value(r, prof.S, prof.T or 0.0), "rowsum")


# --- equality certificates -------------------------------------------------

def _strict_set(prof: Profile) -> list[int]:
    # rows whose m exceeds the minimum: these are exactly rows 1..t-1 once
    # m_t = ... = m_n holds, whatever order ties were sorted in
    m_min = min(prof.avg2)
    return [i for i in prof.order if not close(prof.avg2[i], m_min)]


def _check_conditions(A, prof: Profile, diag_target: float, off_target: float,
                      ratio_target: float, l: int) -> EqualityCertificate:
    E = as_matrix(A).entries
    r = prof.row_sums
    head = _strict_set(prof)
    t = len(head) + 1
    log = [ConditionCheck("t<=l", t <= l, None if t <= l else (t,))]

    bad = next((k for k in head if not close(E[k, k], diag_target)), None)
    log.append(ConditionCheck("(i) diagonal", bad is None, None if bad is None else (bad + 1,)))

    m_min = min(prof.avg2)
    tail = [j for j in range(prof.n) if j not in head]
    bad = next((j for j in tail if not close(prof.avg2[j], m_min)), None)
    log.append(ConditionCheck("(ii) tail avg2 equal", bad is None, None if bad is None else (bad + 1,)))

    bad_pair = None
    for k in head:
        for i in range(prof.n):
            if i == k:
                continue
            if not (close(E[i, k], off_target) and close(r[k] / r[i], ratio_target)):
                bad_pair = (i + 1, k + 1)
                break
        if bad_pair:
            break
    log.append(ConditionCheck("(iii) off-diagonal and ratio", bad_pair is None, bad_pair))

    if all(c.passed for c in log):
        return EqualityCertificate(True, "conditions-t", t, tuple(log))
    return EqualityCertificate(False, "fails", None, tuple(log))


def upper_certificate(A, l: int, prof: Profile | None = None) -> EqualityCertificate:
    """Structural test for rho(A) == phi_l; never evaluates rho."""
    A = as_matrix(A)
    if not 1 <= l <= A.n:
        raise ValueError(f"l must be in 1..{A.n}, got {l}")
    if not is_irreducible(A):
        return EqualityCertificate(False, "refused-reducible")
    prof = prof or profile(A)
    if close(max(prof.avg2), min(prof.avg2)):
        return EqualityCertificate(True, "all-m-equal")
    return _check_conditions(A, prof, prof.M, prof.N, prof.b, l)


def lower_certificate(A, prof: Profile | None = None) -> EqualityCertificate:
    """Structural test for rho(A) == psi_n; never evaluates rho."""
    A = as_matrix(A)
    if not is_irreducible(A):
        return EqualityCertificate(False, "refused-reducible")
    prof = prof or profile(A)
    if close(max(prof.avg2), min(prof.avg2)):
        return EqualityCertificate(True, "all-m-equal")
    if not prof.T:
        return EqualityCertificate(False, "fails", None, (ConditionCheck("T>0", False),))
    cert = _check_conditions(A, prof, prof.S, prof.T, prof.c, A.n)
    return EqualityCertificate(cert.verdict, cert.reason, cert.t,
                               (ConditionCheck("T>0", True),) + cert.condition_log)


@dataclass(frozen=True)
class SymmetricForm:
    first_row: bool  # leading entry hits the diagonal extreme, its off-diagonals the off-diagonal extreme
    rest_row_sums_equal: bool
    rest_avg2_equal: bool
    constant_matrix: bool  # diagonal all equal to the extreme and off-diagonal all equal too
    leading_index: int  # 1-based index of the m-largest row

    @property
    def holds(self) -> bool:
        return self.first_row and self.rest_row_sums_equal and self.rest_avg2_equal


def symmetric_certificate_form(A, direction: str = "upper") -> SymmetricForm:
    """Condition report for symmetric A, t = 2 form, rows taken in m-descending order."""
    A = as_matrix(A)
    if not A.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    if not is_irreducible(A):
        raise RefusedReducible()
    prof = profile(A)
    E = A.entries
    if direction == "upper":
        d, o = prof.M, prof.N
    elif direction == "lower":
        d, o = prof.S, prof.T
    else:
        raise ValueError(f"direction must be 'upper' or 'lower', got {direction!r}")
    p, rest = prof.order[0], list(prof.order[1:])
    if o is None:
        return SymmetricForm(True, True, True, True, p + 1)
    first = close(E[p, p], d) and all(close(E[p, j], o) and close(E[j, p], o) for j in rest)
    r = prof.row_sums
    rows_eq = all(close(r[j], r[rest[0]]) for j in rest)
    m_eq = all(close(prof.avg2[j], prof.avg2[rest[0]]) for j in rest)
    off = ~np.eye(A.n, dtype=bool)
    constant = bool(all(close(x, d) for x in np.diag(E)) and all(close(x, o) for x in E[off]))
    return SymmetricForm(first, rows_eq, m_eq, constant, p + 1)
