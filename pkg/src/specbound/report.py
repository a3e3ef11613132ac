"""Bound reports and their JSON / CSV renderings.

Floats are rendered with 12 significant digits, so a rendered report is a
fixed point of ``render(parse(render(r)))``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from . import bounds
from .bounds import EqualityCertificate
from .graph_bounds import GraphBoundReport
from .matrix import as_matrix, is_irreducible, profile, spectral_radius

SIG_DIGITS = 12


def round_sig(x):
    """Round floats (recursively) to 12 significant digits."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return float(f"{x:.{SIG_DIGITS}g}")
    if isinstance(x, dict):
        return {k: round_sig(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [round_sig(v) for v in x]
    return float(f"{float(x):.{SIG_DIGITS}g}")


def certificate_dict(cert: EqualityCertificate) -> dict:
    return {
        "verdict": cert.verdict,
        "reason": cert.reason,
        "t": cert.t,
        "conditions": [
            {"name": c.name, "passed": c.passed, "witness": list(c.witness) if c.witness else None}
            for c in cert.condition_log
        ],
    }


@dataclass(frozen=True)
class BoundReport:
    source: str
    n: int
    row_sums: list
    avg2: list
    M: float
    N: float | None
    S: float
    T: float | None
    b: float
    c: float
    phi: list
    best_l: int
    psi: float
    duan_phi: list
    duan_best_l: int
    duan_psi: float
    rho: float
    rho_iterations: int
    rho_residual: float
    rho_method: str
    upper_certificate: dict
    lower_certificate: dict
    gaps: dict
    flags: dict

    def to_dict(self) -> dict:
        return round_sig(asdict(self))

    @classmethod
    def from_dict(cls, d: dict) -> BoundReport:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


def matrix_report(A, tol: float = 1e-12, source: str = "matrix", max_iters: int | None = None) -> BoundReport:
    A = as_matrix(A)
    prof = profile(A)
    phi = bounds.phi_curve(A, prof)
    low = bounds.psi(A, prof)
    dphi = bounds.duan_phi_curve(A, prof)
    dlow = bounds.duan_psi(A, prof)
    est = spectral_radius(A, tol, max_iters)
    rho = est.rho
    reducible = not is_irreducible(A)
    return BoundReport(
        source=source,
        n=A.n,
        row_sums=list(prof.row_sums),
        avg2=list(prof.avg2),
        M=prof.M, N=prof.N, S=prof.S, T=prof.T, b=prof.b, c=prof.c,
        phi=list(phi.values),
        best_l=phi.best_l,
        psi=low.value,
        duan_phi=list(dphi.values),
        duan_best_l=dphi.best_l,
        duan_psi=dlow.value,
        rho=rho,
        rho_iterations=est.iterations,
        rho_residual=est.residual,
        rho_method=est.method,
        upper_certificate=certificate_dict(bounds.upper_certificate(A, phi.best_l, prof)),
        lower_certificate=certificate_dict(bounds.lower_certificate(A, prof)),
        gaps={
            "phi": [v - rho for v in phi.values],
            "psi": low.value - rho,
            "duan_phi": [v - rho for v in dphi.values],
            "duan_psi": dlow.value - rho,
        },
        flags={
            "reducible": reducible,
            "zero_off_diagonal": phi.flag == "zero-off-diagonal",
            "order_one": phi.flag == "order-one",
        },
    )


def render_json(d: dict) -> str:
    return json.dumps(round_sig(d), indent=2) + "\n"


def render_csv(d: dict) -> str:
    """Flatten a report dict into ``field,index,value`` rows."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["field", "index", "value"])

    def emit(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                emit(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list):
            for i, v in enumerate(value, start=1):
                if isinstance(v, (dict, list)):
                    emit(f"{prefix}[{i}]", v)
                else:
                    w.writerow([prefix, i, v])
        else:
            w.writerow([prefix, "", value])

    emit("", round_sig(d))
    return buf.getvalue()


def graph_report_dict(rep: GraphBoundReport) -> dict:
    pred = rep.stated_predicate
    rho = rep.rho.rho
    d = {
        "kind": rep.kind.value,
        "direction": rep.direction,
        "stated_theorem": rep.stated_theorem,
        "note": None if rep.stated_theorem else "general-theorem instantiation, not a stated theorem",
        "parameters": dict(rep.parameters),
    }
    if rep.curve is not None:
        d["curve"] = list(rep.curve.values)
        d["best_l"] = rep.curve.best_l
        d["bound"] = rep.curve.best_value
        d["gaps"] = [v - rho for v in rep.curve.values]
    else:
        d["value"] = rep.lower.value
        d["bound"] = rep.lower.value
        d["gap"] = rep.lower.value - rho
    d["rho"] = rho
    d["rho_iterations"] = rep.rho.iterations
    d["rho_method"] = rep.rho.method
    d["stated_predicate"] = {
        "holds": pred.holds,
        "branch": pred.branch,
        "reading": "index 1 = vertex with the extreme degree/transmission/R value",
        "vertex": pred.vertex,
        "witness": None if pred.witness is None else {"vertex_value": pred.witness[0],
                                                      "others": list(pred.witness[1])},
        "m_sorted_reading": pred.m_sorted_reading,
    }
    d["general_certificate"] = certificate_dict(rep.general_certificate)
    return d
