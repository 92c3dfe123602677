"""A priori error model and sizing for the Gauss-Laguerre evaluation of Phi(z, s, a).

The quadrature error of the n-point rule applied to

    I(z) = int_0^inf t**(s-1) e**-t / (1 - z e**(-t/a)) dt

is governed by the pole t0 = a*(ln|z| + i arg z) of the integrand closest to
the real axis.  Writing R0 = exp(Re sqrt(-t0)) and m = n + s/2 the integral
error behaves like

    eps_n = C * R0**(-4 sqrt(m)),   C = 4 pi a**s |z|**-a |ln|z| + i arg z|**(s-1),

and the Lerch-level error like eps_n / (Gamma(s) a**s).  Everything here is
cheap closed-form arithmetic; no nodes are touched.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameterError, SizingOverflowError
from .gammafn import lgamma
from .quadrature import N_MAX

DEFAULT_SAFETY = 2


@dataclass(frozen=True)
class LerchParams:
    """Real-parameter Lerch arguments; z complex off the cut [1, inf), s > 0, a > 0."""

    z: complex
    s: float
    a: float

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "a", float(self.a))
        if not (cmath.isfinite(z) and math.isfinite(self.s) and math.isfinite(self.a)):
            raise DomainError("z, s and a must be finite")
        if z.imag == 0.0 and z.real >= 1.0:
            raise DomainError(f"z = {z} lies on the branch cut [1, inf)")
        if self.s <= 0.0:
            raise DomainError(f"s must be > 0, got {self.s}")
        if self.a <= 0.0:
            raise DomainError(f"a must be > 0, got {self.a}")


@dataclass(frozen=True)
class SizingPlan:
    """Everything the algorithm fixes before computing nodes."""

    kz: float
    t0: complex
    r0: float
    eps_target: float
    m: float
    n: int
    gn: float
    kn: int
    c_amp: float


def log0(z: complex) -> complex:
    """ln|z| + i arg z with arg in (-pi, pi]."""
    return complex(math.log(abs(z)), _arg(z))


def _arg(z: complex) -> float:
    # cmath.phase returns -pi for (-x, -0.0); pin the negative real axis to +pi
    if z.imag == 0.0 and z.real < 0.0:
        return math.pi
    return cmath.phase(z)


def pole(z: complex, a: float, k: int = 0) -> complex:
    """The k-th pole t_k = a (ln|z| + i (arg z + 2 k pi)) of 1/(1 - z e**(-t/a))."""
    z = complex(z)
    if z == 0:
        raise InvalidParameterError("z = 0: the integrand has no poles")
    return a * complex(math.log(abs(z)), _arg(z) + 2.0 * k * math.pi)


def r_zero(t0: complex) -> float:
    """Parameter R of the parabola Re sqrt(-w) = ln R passing through t0."""
    t0 = complex(t0)
    if t0.imag == 0.0 and t0.real >= 0.0:
        raise InvalidParameterError(f"t0 = {t0} lies on [0, inf)")
    return math.exp(cmath.sqrt(-t0).real)


def kz(z: complex) -> float:
    """Uniform bound on |1/(1 - z e**(-t/a))| for t >= 0.

    The minimum of |1 - z x|**2 over x in [0, 1] sits at x = 0, at the vertex
    x = Re z / |z|**2, or at x = 1, depending on where the vertex falls.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise InvalidParameterError(f"z = {z} lies on the branch cut [1, inf)")
    if z.real <= 0.0:
        return 1.0
    if z.real <= abs(z) ** 2:
        return abs(z) / abs(z.imag)
    return 1.0 / abs(1.0 - z)


def amplitude(params: LerchParams) -> float:
    """C = 4 pi a**s |z|**-a |ln_0 z|**(s-1)."""
    z, s, a = params.z, params.s, params.a
    if z == 0:
        raise InvalidParameterError("z = 0 has no error amplitude")
    return 4.0 * math.pi * math.exp(
        s * math.log(a) - a * math.log(abs(z)) + (s - 1.0) * math.log(abs(log0(z)))
    )


def _decay_rate(params: LerchParams) -> float:
    # Re sqrt(-t0) = ln R0
    return cmath.sqrt(-pole(params.z, params.a, 0)).real


def epsilon_n(params: LerchParams, m: float) -> float:
    """Integral-level error estimate for the rule with m = n + s/2."""
    if not m > 0:
        raise InvalidParameterError(f"m must be > 0, got {m}")
    if math.isinf(m):
        return 0.0
    return amplitude(params) * math.exp(-4.0 * math.sqrt(m) * _decay_rate(params))


def big_e_n(params: LerchParams, m: float) -> float:
    """Lerch-level error estimate epsilon_n / (Gamma(s) a**s)."""
    return epsilon_n(params, m) * math.exp(-lgamma(params.s) - params.s * math.log(params.a))


def integral_tolerance(params: LerchParams, tol_E: float) -> float:
    """eps = a**s Gamma(s) tol_E / 2: the integral tolerance that leaves room for truncation."""
    return math.exp(params.s * math.log(params.a) + lgamma(params.s)) * tol_E / 2.0


def solve_n(params: LerchParams, tol_E: float) -> tuple[float, int, float]:
    """Smallest order whose estimate reaches the integral tolerance.

    Returns ``(m, n, eps_target)``.
    """
    if not tol_E > 0:
        raise InvalidParameterError(f"tolerance must be > 0, got {tol_E}")
    s = params.s
    eps_target = integral_tolerance(params, tol_E)
    c_amp = amplitude(params)
    if c_amp <= eps_target:
        return s / 2.0 + 1.0, 1, eps_target
    sqrt_m = math.log(c_amp / eps_target) / (4.0 * _decay_rate(params))
    m = sqrt_m * sqrt_m
    n_real = math.ceil(m - s / 2.0)
    if n_real > N_MAX:
        raise SizingOverflowError(
            f"tolerance {tol_E:g} needs n = {n_real} > N_MAX = {N_MAX} nodes "
            f"(z = {params.z} is too close to the cut [1, inf))"
        )
    return m, max(1, int(n_real)), eps_target


def gn_threshold(s: float, eps_target: float, kz_value: float) -> float:
    """Node position past which the weight tail drops below eps_target / kz.

    Asymptotic root of x**(s-1) e**-x = eps/K; exact for s = 1.  Floored at 1.
    """
    g = -math.log(eps_target / kz_value)
    if s != 1.0:
        g += (s - 1.0) * math.log(abs(1.0 - s))
    return max(g, 1.0)


def solve_kn(m: float, n: int, gn: float, safety: int = DEFAULT_SAFETY) -> int:
    """Number of nodes to keep, from x_k ~ k**2 pi**2 / (4 m) = gn plus ``safety`` extra."""
    if safety not in (0, 1, 2, 3):
        raise InvalidParameterError(f"safety must be in 0..3, got {safety}")
    k_raw = math.ceil(2.0 / math.pi * math.sqrt(m * gn))
    return max(1, min(n, k_raw + safety))


def kn_decay_diagnostic(m: float, r0: float) -> tuple[float, float]:
    """Predicted k_n ~ (4/pi) m**(3/4) sqrt(ln R0) and the rate d = (2 pi ln R0)**(2/3)."""
    if not m > 0 or not r0 > 1:
        raise InvalidParameterError("need m > 0 and r0 > 1")
    lr = math.log(r0)
    return 4.0 / math.pi * m**0.75 * math.sqrt(lr), (2.0 * math.pi * lr) ** (2.0 / 3.0)


def plan(params: LerchParams, tol_E: float, safety: int = DEFAULT_SAFETY) -> SizingPlan:
    """Sizing for tolerance ``tol_E`` on Phi: K_z, t0, R0, then n, then k_n."""
    k = kz(params.z)
    t0 = pole(params.z, params.a, 0)
    r0 = r_zero(t0)
    m, n, eps = solve_n(params, tol_E)
    gn = gn_threshold(params.s, eps, k)
    kn = solve_kn(m, n, gn, safety)
    return SizingPlan(kz=k, t0=t0, r0=r0, eps_target=eps, m=m, n=n, gn=gn, kn=kn, c_amp=amplitude(params))


def truncation_at(params: LerchParams, n: int, safety: int = DEFAULT_SAFETY) -> int:
    """k_n for a given order n, using that order's own estimate as the tolerance."""
    m = n + params.s / 2.0
    eps = epsilon_n(params, m)
    return solve_kn(m, n, gn_threshold(params.s, eps, kz(params.z)), safety)
