"""Error-versus-order sweeps of the full and truncated rules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import error_model as em
from . import oracle
from .error_model import LerchParams
from .lerch import truncated_sum


@dataclass(frozen=True)
class SweepRow:
    n: int
    kn: int
    err_full: float
    err_trunc: float
    estimate: float


def error_sweep(params: LerchParams, n_values, truncated: bool = True, reference: complex | None = None) -> list[SweepRow]:
    """Measured error of Phi_n (and Phi_{k_n}) against an oracle, next to the estimate E_n."""
    if params.z == 0:
        return [SweepRow(int(n), 0, 0.0, 0.0, 0.0) for n in n_values]
    if reference is None:
        reference = oracle.reference(params.z, params.s, params.a, tol=1e-15).value
    rows = []
    for n in n_values:
        n = int(n)
        full = truncated_sum(params, n)
        kn = em.truncation_at(params, n) if truncated else n
        trunc = truncated_sum(params, n, kn) if truncated else full
        rows.append(
            SweepRow(n, kn, abs(full - reference), abs(trunc - reference) if truncated else float("nan"),
                     em.big_e_n(params, n + params.s / 2.0))
        )
    return rows


def fit_truncated_decay(rows: list[SweepRow], floor: float = 1e-13) -> tuple[float, float, float]:
    """Least-squares fit of ln(err_trunc) against k_n**(2/3).

    Only rows with err_trunc above ``floor`` enter the fit.  Returns
    ``(slope, intercept, r_squared)``.
    """
    pts = [(r.kn ** (2.0 / 3.0), np.log(r.err_trunc)) for r in rows if r.err_trunc > floor]
    if len(pts) < 3:
        raise ValueError("need at least three points above the floor")
    x, y = np.array(pts).T
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    r2 = 1.0 - np.sum(resid**2) / np.sum((y - y.mean()) ** 2)
    return float(slope), float(intercept), float(r2)
