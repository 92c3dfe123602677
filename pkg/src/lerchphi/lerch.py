"""Lerch transcendent Phi(z, s, a) by the truncated Gauss-Laguerre rule.

With t = a x the integral representation becomes

    Phi(z, s, a) = 1 / (Gamma(s) a**s) * int_0^inf t**(s-1) e**-t f_z(t) dt,
    f_z(t) = 1 / (1 - z e**(-t/a)),

so the generalized Laguerre weight with alpha = s - 1 carries the whole
singular/decaying part and f_z is bounded.  :func:`evaluate` sizes the rule
from the a priori estimate in :mod:`lerchphi.error_model`, then sums only the
first k_n nodes; the remaining weights are below the tolerance.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import error_model as em
from .errors import DomainError, InvalidParameterError
from .error_model import LerchParams, SizingPlan
from .gammafn import clgamma, lgamma
from .quadrature import gauss_laguerre, gauss_laguerre_truncated

TOL_MIN = 1e-15
TOL_MAX = 1e-1
IM_A_RATIO_WARN = 10.0


class LerchWarning(UserWarning):
    """Result computed, but outside the regime where the estimate is trustworthy."""


@dataclass(frozen=True)
class Evaluation:
    value: complex
    n: int
    kn: int
    est_error: float
    f_evals: int
    plan: SizingPlan | None = None
    flags: tuple[str, ...] = ()
    experimental: bool = False

    @property
    def real(self) -> float:
        return self.value.real


@dataclass(frozen=True)
class ComplexLerchParams:
    z: complex
    s: complex
    a: complex

    def __post_init__(self):
        for name in ("z", "s", "a"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.z.imag == 0.0 and self.z.real >= 1.0:
            raise DomainError(f"z = {self.z} lies on the branch cut [1, inf)")
        if self.s.real <= 0.0:
            raise DomainError(f"Re(s) must be > 0, got {self.s}")
        if self.a.real <= 0.0:
            raise DomainError(f"Re(a) must be > 0, got {self.a}")


def f_z(t, z: complex, a: float):
    """The bounded factor 1 / (1 - z e**(-t/a)); vectorized over t."""
    return 1.0 / (1.0 - complex(z) * np.exp(-np.asarray(t, dtype=float) / a))


def _prefactor(s: float, a: float) -> float:
    return math.exp(-lgamma(s) - s * math.log(a))


def _check_tol(tol_E: float) -> tuple[float, tuple[str, ...]]:
    if not (tol_E > 0.0) or tol_E > TOL_MAX:
        raise InvalidParameterError(f"tolerance must lie in (0, {TOL_MAX}], got {tol_E}")
    if tol_E < TOL_MIN:
        warnings.warn(f"tolerance {tol_E:g} clamped to {TOL_MIN:g}", LerchWarning, stacklevel=3)
        return TOL_MIN, ("tolerance-clamped",)
    return tol_E, ()


def truncated_sum(params: LerchParams, n: int, k: int | None = None) -> complex:
    """Phi_k = (1 / (Gamma(s) a**s)) * sum_{j <= k} w_j f_z(t_j) of the n-point rule (k = n if omitted)."""
    rule = gauss_laguerre(params.s - 1.0, n) if k is None else gauss_laguerre_truncated(params.s - 1.0, n, k)
    terms = rule.weights * f_z(rule.nodes, params.z, params.a)
    return complex(_prefactor(params.s, params.a) * np.sum(terms))


def evaluate(params: LerchParams, tol_E: float = 1e-14, safety: int = em.DEFAULT_SAFETY) -> Evaluation:
    """Phi(z, s, a) to absolute accuracy ~tol_E.

    >>> ev = evaluate(LerchParams(-1.0, 1.0, 1.0), 1e-12)
    >>> abs(ev.value - math.log(2)) < 1e-12
    True
    """
    if not isinstance(params, LerchParams):
        raise TypeError("params must be a LerchParams")
    tol_E, flags = _check_tol(tol_E)
    if params.z == 0:
        return Evaluation(complex(params.a ** -params.s), 0, 0, 0.0, 0, None, flags)
    p = em.plan(params, tol_E, safety)
    value = truncated_sum(params, p.n, p.kn)
    est = 2.0 * em.big_e_n(params, p.n + params.s / 2.0)
    return Evaluation(value, p.n, p.kn, est, p.kn, p, flags)


def lerch_phi(z: complex, s: float, a: float, tol: float = 1e-14) -> complex:
    """Convenience: value of Phi(z, s, a)."""
    return evaluate(LerchParams(z, s, a), tol).value


def _rescale(ev: Evaluation, factor: complex) -> Evaluation:
    return Evaluation(ev.value * factor, ev.n, ev.kn, ev.est_error * abs(factor), ev.f_evals, ev.plan, ev.flags)


def polylog(s: float, z: complex, tol_E: float = 1e-14) -> Evaluation:
    """Li_s(z) = z Phi(z, s, 1); the inner tolerance is tightened by max(|z|, 1)."""
    z = complex(z)
    if z == 0:
        return Evaluation(0j, 0, 0, 0.0, 0)
    inner = min(tol_E / max(abs(z), 1.0), TOL_MAX)
    return _rescale(evaluate(LerchParams(z, s, 1.0), inner), z)


def dirichlet_beta(s: float, tol_E: float = 1e-14) -> Evaluation:
    """beta(s) = 2**-s Phi(-1, s, 1/2)."""
    inner = min(tol_E * 2.0**s, TOL_MAX)
    return _rescale(evaluate(LerchParams(-1.0, s, 0.5), inner), 2.0**-s)


def dirichlet_eta(s: float, tol_E: float = 1e-14) -> Evaluation:
    """eta(s) = Phi(-1, s, 1)."""
    return evaluate(LerchParams(-1.0, s, 1.0), tol_E)


def evaluate_complex(params: ComplexLerchParams, n: int) -> Evaluation:
    """Full n-point rule for complex s and a (Re s > 0, Re a > 0).

    Substituting x = t / Re(a) leaves the Laguerre weight t**(Re s - 1) e**-t and
    moves the imaginary parts into the unimodular factor
    exp(i (Im(s) ln t - Im(a)/Re(a) t)), which oscillates without bound as
    t -> 0 when Im(s) != 0.  No a priori sizing exists here; ``est_error`` is NaN.
    """
    if not isinstance(params, ComplexLerchParams):
        raise TypeError("params must be a ComplexLerchParams")
    z, s, a = params.z, params.s, params.a
    flags = []
    if s.imag != 0.0:
        flags.append("oscillatory-s")
    if abs(a.imag) / a.real > IM_A_RATIO_WARN:
        flags.append("oscillatory-a")
    if flags:
        warnings.warn(
            f"Laguerre rule may be inadequate for s = {s}, a = {a} ({', '.join(flags)})",
            LerchWarning,
            stacklevel=2,
        )
    ar, ai = a.real, a.imag
    rule = gauss_laguerre(s.real - 1.0, n)
    t = rule.nodes
    osc = np.exp(1j * (s.imag * np.log(t) - (ai / ar) * t))
    h = osc / (1.0 - z * np.exp(-t / ar))
    pref = cmath.exp(-1j * s.imag * math.log(ar) - s.real * math.log(ar) - clgamma(s))
    value = complex(pref * np.sum(rule.weights * h))
    return Evaluation(value, n, n, math.nan, n, None, tuple(flags), experimental=True)
