"""Reference values of Phi(z, s, a) that share nothing with the Laguerre path.

Three routes, each with its own accuracy estimate:

* ``series_direct``: compensated summation of sum z**j / (j + a)**s for |z| < 1.
* ``series_alternating``: z = -r, accelerated with a shifted Chebyshev weighting
  of the partial moments (the Cohen-Rodriguez Villegas-Zagier construction,
  rescaled so it also covers 1 < r <= 1.5 where the plain series diverges).
* ``adaptive_quadrature``: globally adaptive 30-point Gauss-Legendre panels on
  the original integral, with a power substitution near x = 0 for s < 1.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.polynomial import legendre
from scipy.special import gammaincc

from .error_model import kz
from .errors import DomainError, InvalidParameterError, NoConvergenceError
from .gammafn import clgamma, lgamma

EPS = np.finfo(float).eps
AGREEMENT_TOL = 1e-11
_GL_X, _GL_W = legendre.leggauss(30)
_GL_X15, _GL_W15 = legendre.leggauss(15)


class Method(str, Enum):
    DIRECT = "direct-series"
    ALTERNATING = "accelerated-series"
    QUADRATURE = "adaptive-quadrature"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class OracleResult:
    value: complex
    method: Method
    est_accuracy: float

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "est_accuracy", float(self.est_accuracy))


def _check_params(z, s, a):
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise DomainError(f"z = {z} lies on the branch cut [1, inf)")
    if not (s > 0 and a > 0):
        raise DomainError(f"need s > 0 and a > 0, got s={s}, a={a}")
    return z, float(s), float(a)


def closed_form(z, s: float, a: float) -> OracleResult:
    """Phi(0, s, a) = a**-s."""
    if complex(z) != 0:
        raise InvalidParameterError("closed form only available at z = 0")
    return OracleResult(complex(a**-s), Method.CLOSED_FORM, 0.0)


def series_direct(z, s: float, a: float, tol: float = 1e-15, max_terms: int = 1_000_000) -> OracleResult:
    """sum_{j>=0} z**j / (j + a)**s until the geometric tail bound drops below tol."""
    z, s, a = _check_params(z, s, a)
    r = abs(z)
    if r >= 1.0:
        raise InvalidParameterError(f"direct series needs |z| < 1, got |z| = {r}")
    if z == 0:
        return closed_form(z, s, a)
    re, im = [], []
    zj = 1.0 + 0j
    abs_sum = 0.0
    for j in range(max_terms):
        term = zj / (j + a) ** s
        re.append(term.real)
        im.append(term.imag)
        abs_sum += abs(term)
        zj *= z
        # every later term is bounded by |z|**k / (j + 1 + a)**s
        tail = abs(zj) / ((j + 1 + a) ** s * (1.0 - r))
        if tail < tol:
            break
    else:
        raise NoConvergenceError(f"direct series for |z| = {r} not converged after {max_terms} terms")
    value = complex(math.fsum(re), math.fsum(im))
    # z**j by repeated multiplication carries ~j ulps of relative error
    rounding = 2.0 * EPS * sum(abs(x) * k for k, x in enumerate(re[:64])) + 4.0 * EPS * abs_sum
    return OracleResult(value, Method.DIRECT, tail + rounding)


def series_alternating(zneg_mag: float, s: float, a: float, tol: float = 1e-15, max_degree: int = 80) -> OracleResult:
    """Phi(-r, s, a) for 0 < r <= 1.5.

    1/(k + a)**s are the moments of a positive measure on [0, 1], so
    Phi(-r, s, a) = int dnu(y) / (1 + r y).  Replacing 1/(1 + r y) by the
    polynomial (P(-1/r) - P(y)) / ((1 + r y) P(-1/r)) with P(y) = T_d(1 - 2y)
    leaves a remainder bounded by b_0 / T_d(1 + 2/r).
    """
    r = float(zneg_mag)
    _check_params(-r, s, a)
    if not 0.0 < r <= 1.5:
        raise InvalidParameterError(f"accelerated series needs 0 < r <= 1.5, got {r}")
    b0 = a**-s
    lam = 1.0 + 2.0 / r
    degree = None
    for d in range(1, max_degree + 1):
        if b0 / math.cosh(d * math.acosh(lam)) < 0.1 * tol:
            degree = d
            break
    if degree is None:
        raise NoConvergenceError(f"accelerated series for r = {r} needs degree > {max_degree}")
    py = _shifted_chebyshev_coefficients(degree)
    # extended precision: the coefficients grow like 5.8**d while the sum is O(1)
    ld = np.longdouble
    y0 = ld(-1) / ld(r)
    # synthetic division: P(y) - P(y0) = (y - y0) D(y)
    dcoef = np.zeros(degree, dtype=ld)
    dcoef[-1] = ld(py[-1])
    for k in range(degree - 1, 0, -1):
        dcoef[k - 1] = ld(py[k]) + y0 * dcoef[k]
    p_y0 = np.cosh(ld(degree) * np.arccosh(ld(1) + ld(2) / ld(r)))
    b = (np.arange(degree, dtype=ld) + ld(a)) ** ld(-s)
    terms = dcoef * b
    value = float(-np.sum(terms) / (ld(r) * p_y0))
    trunc = b0 / float(p_y0)
    ld_eps = float(np.finfo(ld).eps)
    rounding = 4.0 * ld_eps * float(np.sum(np.abs(terms)) / (ld(r) * p_y0)) + 2.0 * EPS * abs(value)
    return OracleResult(complex(value), Method.ALTERNATING, trunc + rounding)


def _shifted_chebyshev_coefficients(degree: int) -> list[int]:
    """Exact integer monomial coefficients of T_degree(1 - 2y), lowest order first."""
    prev, cur = [1], [1, -2]
    if degree == 0:
        return prev
    for _ in range(degree - 1):
        nxt = [0] * (len(cur) + 1)
        for k, c in enumerate(cur):
            nxt[k] += 2 * c
            nxt[k + 1] -= 4 * c
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return cur


@dataclass(order=True)
class _Panel:
    neg_err: float
    lo: float = field(compare=False)
    hi: float = field(compare=False)
    value: complex = field(compare=False)


def adaptive_quadrature(
    z, s, a, tol: float = 1e-14, max_panels: int = 40_000, cutoff_factor: float = 1.0
) -> OracleResult:
    """Brute-force integration of x**(s-1) e**(-a x) / (1 - z e**-x) / Gamma(s) on [0, T].

    T is chosen so the neglected tail, at most
    K_z Gamma(Re s, Re(a) T) / (Re(a)**Re(s) |Gamma(s)|), stays below tol / 2.
    For 0 < s < 1 (real) the substitution x = u**(1/s) removes the endpoint
    singularity: x**(s-1) dx = du / s.  Complex s and a (positive real parts)
    are accepted for checking the experimental complex evaluator.
    ``cutoff_factor`` stretches T (used to check the tail bound).
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise DomainError(f"z = {z} lies on the branch cut [1, inf)")
    s_c, a_c = complex(s), complex(a)
    if not (s_c.real > 0 and a_c.real > 0):
        raise DomainError(f"need Re(s) > 0 and Re(a) > 0, got s={s}, a={a}")
    if tol < 1e-16:
        raise InvalidParameterError("adaptive quadrature cannot certify below 1e-16")
    sig, ar = s_c.real, a_c.real
    real_params = s_c.imag == 0.0 and a_c.imag == 0.0
    log_gamma_s = complex(lgamma(sig)) if s_c.imag == 0.0 else clgamma(s_c)
    scale = complex(np.exp(-log_gamma_s)) if not real_params else math.exp(-log_gamma_s.real)
    # |x**(s-1) e**(-a x) / Gamma(s)| = x**(sig-1) e**(-ar x) / |Gamma(s)|
    tail_scale = kz(z) * math.exp(lgamma(sig) - log_gamma_s.real) * ar**-sig
    upper = 1.0
    while tail_scale * gammaincc(sig, ar * upper) >= tol / 2.0:
        upper *= 1.25
        if upper > 1e6:
            raise NoConvergenceError("tail cut-off did not converge")
    upper *= cutoff_factor
    tail = tail_scale * gammaincc(sig, ar * upper)
    s_val = s_c.real if real_params else s_c
    a_val = a_c.real if real_params else a_c

    if real_params and sig < 1.0:
        inv_s = 1.0 / sig

        def integrand(u):
            x = u**inv_s
            return np.exp(-a_val * x) / (1.0 - z * np.exp(-x)) * (scale / sig)

        lo, hi = 0.0, upper**sig
    else:

        def integrand(x):
            return x ** (s_val - 1.0) * np.exp(-a_val * x) / (1.0 - z * np.exp(-x)) * scale

        lo, hi = 0.0, upper

    def rule(x, w, p, q):
        half = 0.5 * (q - p)
        return half * np.dot(w, integrand(half * x + 0.5 * (p + q)))

    def panel(p, q):
        fine = rule(_GL_X, _GL_W, p, q)
        coarse = rule(_GL_X15, _GL_W15, p, q)
        return _Panel(-abs(fine - coarse), p, q, fine)

    edges = np.linspace(lo, hi, 17)
    heap = [panel(p, q) for p, q in itertools.pairwise(edges)]
    heapq.heapify(heap)
    err = -sum(pn.neg_err for pn in heap)
    total = sum(pn.value for pn in heap)
    for _ in range(max_panels):
        # below ~50 ulps of the integral the panel differences are pure roundoff
        if err < max(tol / 2.0, 50.0 * EPS * abs(total)):
            break
        worst = heapq.heappop(heap)
        mid = 0.5 * (worst.lo + worst.hi)
        left, right = panel(worst.lo, mid), panel(mid, worst.hi)
        heapq.heappush(heap, left)
        heapq.heappush(heap, right)
        err += worst.neg_err - left.neg_err - right.neg_err
        total += left.value + right.value - worst.value
    else:
        raise NoConvergenceError(f"adaptive quadrature exhausted {max_panels} panel splits")
    heap.sort(key=lambda pn: pn.lo)
    vals = [pn.value for pn in heap]
    value = complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    abs_total = sum(abs(v) for v in vals)
    est = err + tail + 8.0 * EPS * abs_total
    return OracleResult(value, Method.QUADRATURE, est)


def applicable_methods(z, s: float, a: float) -> list[Method]:
    z = complex(z)
    if z == 0:
        return [Method.CLOSED_FORM, Method.DIRECT, Method.QUADRATURE]
    methods = []
    if abs(z) <= 0.9:
        methods.append(Method.DIRECT)
    if z.imag == 0.0 and -1.5 <= z.real < 0.0:
        methods.append(Method.ALTERNATING)
    methods.append(Method.QUADRATURE)
    return methods


def run(method: Method, z, s: float, a: float, tol: float = 1e-14) -> OracleResult:
    if method is Method.CLOSED_FORM:
        return closed_form(z, s, a)
    if method is Method.DIRECT:
        return series_direct(z, s, a, min(tol, 1e-15))
    if method is Method.ALTERNATING:
        return series_alternating(-complex(z).real, s, a, min(tol, 1e-15))
    return adaptive_quadrature(z, s, a, tol)


def reference(z, s: float, a: float, tol: float = 1e-14) -> OracleResult:
    """Most accurate applicable reference value (series first, quadrature as fallback)."""
    return run(applicable_methods(z, s, a)[0], z, s, a, tol)


@dataclass
class CrossReport:
    z: complex
    s: float
    a: float
    results: dict[Method, OracleResult]
    deviations: dict[tuple[Method, Method], float]
    failures: dict[Method, str]

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values(), default=0.0)

    @property
    def ok(self) -> bool:
        return not self.failures and self.max_deviation <= AGREEMENT_TOL


def cross_validate(z, s: float, a: float, tol: float = 1e-14) -> CrossReport:
    """Run every applicable oracle and compare them pairwise."""
    z, s, a = _check_params(z, s, a)
    results, failures = {}, {}
    for method in applicable_methods(z, s, a):
        try:
            results[method] = run(method, z, s, a, tol)
        except (NoConvergenceError, InvalidParameterError) as exc:
            failures[method] = str(exc)
    deviations = {
        (m1, m2): abs(results[m1].value - results[m2].value)
        for m1, m2 in itertools.combinations(results, 2)
    }
    return CrossReport(z, s, a, results, deviations, failures)
