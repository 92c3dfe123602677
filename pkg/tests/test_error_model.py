import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lerchphi import error_model as em
from lerchphi.error_model import LerchParams
from lerchphi.errors import DomainError, InvalidParameterError, SizingOverflowError

finite = dict(allow_nan=False, allow_infinity=False)
z_strategy = st.builds(complex, st.floats(-6, 6, **finite), st.floats(-6, 6, **finite)).filter(
    lambda z: abs(z) > 1e-3 and not (abs(z.imag) < 1e-9 and z.real > 0.9)
)


class TestParams:
    @pytest.mark.parametrize("z", [1.0, 1.5, 100.0, 1 + 0j])
    def test_cut(self, z):
        with pytest.raises(DomainError):
            LerchParams(z, 1.0, 1.0)

    @pytest.mark.parametrize("s, a", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
    def test_s_a(self, s, a):
        with pytest.raises(DomainError):
            LerchParams(-1.0, s, a)

    def test_off_axis_above_one_is_fine(self):
        LerchParams(1.5 + 1e-3j, 1.0, 1.0)


class TestPole:
    def test_first_quadrant(self):
        t0 = em.pole(math.sqrt(2) * cmath.exp(1j * math.pi / 4), 1.0, 0)
        assert t0.real == pytest.approx(0.5 * math.log(2), rel=1e-14)
        assert t0.imag == pytest.approx(math.pi / 4, rel=1e-14)

    def test_minus_one(self):
        assert em.pole(-1.0, 1.0, 0) == pytest.approx(1j * math.pi, rel=1e-15)

    def test_half(self):
        assert em.pole(0.5, 1.0, 0) == pytest.approx(-math.log(2), rel=1e-15)

    def test_negative_zero_imag(self):
        assert em.pole(complex(-2.0, -0.0), 1.0, 0).imag == pytest.approx(math.pi)

    def test_zero(self):
        with pytest.raises(InvalidParameterError):
            em.pole(0.0, 1.0)

    def test_solves_denominator(self):
        z, a = 2 - 3j, 1.7
        for k in (-2, 0, 3):
            assert abs(1 - z * cmath.exp(-em.pole(z, a, k) / a)) < 1e-14

    @settings(max_examples=200, deadline=None)
    @given(z=z_strategy, a=st.floats(0.1, 5.0), k=st.integers(-4, 4).filter(bool))
    def test_principal_pole_has_smallest_parabola(self, z, a, k):
        assume(abs(abs(cmath.phase(z)) - math.pi) > 1e-9)
        assert em.r_zero(em.pole(z, a, k)) > em.r_zero(em.pole(z, a, 0))

    @pytest.mark.parametrize("r", [0.3, 1.0, 2.5])
    def test_conjugate_pair_on_negative_axis(self, r):
        t0, tm1 = em.pole(-r, 1.3, 0), em.pole(-r, 1.3, -1)
        assert tm1 == pytest.approx(t0.conjugate(), rel=1e-15)
        assert em.r_zero(tm1) == pytest.approx(em.r_zero(t0), rel=1e-15)


class TestRZero:
    def test_i_pi(self):
        assert em.r_zero(1j * math.pi) == pytest.approx(math.exp(math.sqrt(math.pi / 2)), rel=1e-14)
        assert em.r_zero(1j * math.pi) == pytest.approx(3.50193, abs=1e-5)

    def test_negative_real(self):
        assert em.r_zero(-0.693147) == pytest.approx(math.exp(math.sqrt(0.693147)), rel=1e-14)
        assert em.r_zero(-0.693147) == pytest.approx(2.29918, abs=1e-5)

    def test_minus_one(self):
        assert em.r_zero(-1.0) == pytest.approx(math.e, rel=1e-15)

    @pytest.mark.parametrize("t0", [0.0, 2.0])
    def test_rejects_positive_axis(self, t0):
        with pytest.raises(InvalidParameterError):
            em.r_zero(t0)

    def test_lies_on_parabola(self):
        # w = y**2 / (4 ln(R)**2) - ln(R)**2 + i y
        t0 = 0.3 + 1.1j
        lr = math.log(em.r_zero(t0))
        y = t0.imag
        assert y * y / (4 * lr * lr) - lr * lr == pytest.approx(t0.real, rel=1e-13)


class TestKz:
    def test_cases(self):
        assert em.kz(-1.0) == 1.0
        assert em.kz(0.5) == pytest.approx(2.0, rel=1e-15)
        assert em.kz(1 + 1j) == pytest.approx(math.sqrt(2), rel=1e-15)

    def test_cut(self):
        with pytest.raises(InvalidParameterError):
            em.kz(1.0)

    @settings(max_examples=300, deadline=None)
    @given(z=z_strategy, t=st.floats(0.0, 50.0), a=st.floats(0.2, 4.0))
    def test_is_a_bound(self, z, t, a):
        assert abs(1 / (1 - z * math.exp(-t / a))) <= em.kz(z) * (1 + 1e-12)

    def test_attained(self):
        # the bound is the max over x = e**(-t/a) in [0, 1], so a fine grid gets close
        x = np.linspace(0, 1, 200001)
        for z in (-2 + 1j, 0.4 + 0.1j, 0.5 + 0.9j, 3 + 3j):
            assert np.max(1 / np.abs(1 - z * x)) == pytest.approx(em.kz(z), rel=1e-6)

    def test_boundary_circle(self):
        theta = np.linspace(0.01, 2 * np.pi - 0.01, 100)
        for z in 0.5 + 0.5 * np.exp(1j * theta):
            assert abs(z) / abs(z.imag) == pytest.approx(1 / abs(1 - z), rel=1e-10)


class TestEstimates:
    def test_epsilon_minus_one(self):
        oracle = float(4 * mpmath.pi * mpmath.exp(-4 * mpmath.sqrt(10) * mpmath.re(mpmath.sqrt(-1j * mpmath.pi))))
        p = LerchParams(-1.0, 1.0, 1.0)
        assert em.epsilon_n(p, 10.0) == pytest.approx(oracle, rel=1e-13)
        assert em.epsilon_n(p, 10.0) == pytest.approx(1.63e-6, rel=0.01)
        assert em.epsilon_n(p, math.inf) == 0.0

    def test_big_e_ratio(self):
        for z, s, a in [(-1.0, 1.0, 1.0), (-1.0, 2.0, 1.0), (0.3 + 2j, 0.4, 2.5)]:
            p = LerchParams(z, s, a)
            assert em.big_e_n(p, 17.3) == pytest.approx(em.epsilon_n(p, 17.3) / (math.gamma(s) * a**s), rel=1e-13)

    def test_big_e_s2(self):
        p = LerchParams(-1.0, 2.0, 1.0)
        assert em.big_e_n(p, 10.0) == pytest.approx(em.epsilon_n(p, 10.0), rel=1e-14)

    def test_epsilon_needs_positive_m(self):
        with pytest.raises(InvalidParameterError):
            em.epsilon_n(LerchParams(-1.0, 1.0, 1.0), 0.0)

    @settings(max_examples=100, deadline=None)
    @given(z=z_strategy, s=st.floats(0.05, 6.0), a=st.floats(0.1, 5.0), m=st.floats(0.5, 500.0))
    def test_monotone_in_m(self, z, s, a, m):
        p = LerchParams(z, s, a)
        assert em.epsilon_n(p, m * 1.01) < em.epsilon_n(p, m)


class TestSolveN:
    @pytest.mark.parametrize(
        "z, s, a, tol, published_n",
        [(-0.5, 1.5, 1.0, 1e-10, 25), (-1.0, 0.5, 0.5, 1e-10, 51), (-1.0, 0.5, 1.0, 1e-14, 47)],
    )
    def test_published_rows(self, z, s, a, tol, published_n):
        _, n, _ = em.solve_n(LerchParams(z, s, a), tol)
        assert abs(n - published_n) <= 2

    def test_target(self):
        p = LerchParams(-1.0, 0.5, 1.0)
        _, _, eps = em.solve_n(p, 1e-10)
        assert eps == pytest.approx(math.gamma(0.5) * 1e-10 / 2, rel=1e-14)

    @settings(max_examples=150, deadline=None)
    @given(z=z_strategy, s=st.floats(0.05, 6.0), a=st.floats(0.1, 5.0), tol=st.sampled_from([1e-6, 1e-10, 1e-14]))
    def test_round_trip(self, z, s, a, tol):
        p = LerchParams(z, s, a)
        try:
            m, n, eps = em.solve_n(p, tol)
        except SizingOverflowError:
            return
        if n == 1 and em.amplitude(p) <= eps:
            return
        assert em.epsilon_n(p, m) == pytest.approx(eps, rel=1e-9)
        assert em.epsilon_n(p, n + s / 2) <= eps * (1 + 1e-12)
        if n > 1:
            assert em.epsilon_n(p, n - 1 + s / 2) > eps

    def test_trivially_easy(self):
        # amplitude below target: one node suffices
        p = LerchParams(-100.0, 0.5, 3.0)
        assert em.amplitude(p) < 1e-5
        m, n, _ = em.solve_n(p, 1e-1)
        assert n == 1 and m == pytest.approx(1.25)

    def test_overflow_near_cut(self):
        with pytest.raises(SizingOverflowError):
            em.solve_n(LerchParams(0.999999 + 1e-9j, 0.5, 1.0), 1e-14)

    def test_bad_tolerance(self):
        with pytest.raises(InvalidParameterError):
            em.solve_n(LerchParams(-1.0, 1.0, 1.0), 0.0)


class TestThreshold:
    def test_s1(self):
        assert em.gn_threshold(1.0, 1e-12, 1.0) == pytest.approx(12 * math.log(10), rel=1e-14)

    def test_s2(self):
        assert em.gn_threshold(2.0, 1e-12, 1.0) == pytest.approx(27.631, abs=1e-3)

    def test_half(self):
        expected = -math.log(5e-11) - 0.5 * math.log(0.5)
        assert em.gn_threshold(0.5, 1e-10, 2.0) == pytest.approx(expected, rel=1e-14)
        assert em.gn_threshold(0.5, 1e-10, 2.0) == pytest.approx(24.07, abs=0.01)

    def test_floor(self):
        assert em.gn_threshold(1.0, 10.0, 1.0) == 1.0

    @pytest.mark.parametrize("delta", [1e-8, -1e-8])
    def test_continuous_at_one(self, delta):
        assert abs(em.gn_threshold(1 + delta, 1e-10, 1.3) - em.gn_threshold(1.0, 1e-10, 1.3)) <= 1e-6

    def test_asymptotic_root(self):
        # g solves x**(s-1) e**-x = eps/K up to the Lambert-W asymptotics; check the residual is modest
        for s in (0.3, 2.5, 4.0):
            g = em.gn_threshold(s, 1e-12, 1.0)
            lhs = (s - 1) * math.log(g) - g
            assert abs(lhs - math.log(1e-12)) < 0.25 * g


class TestKn:
    def test_table1_row1(self):
        p = em.plan(LerchParams(-0.5, 1.5, 1.0), 1e-10)
        assert abs(p.kn - 18) <= 3

    def test_cap(self):
        p = em.plan(LerchParams(-8.0, 4.0, 3.0), 1e-10)
        assert p.n == 11 and p.kn == 11

    def test_first_node(self):
        assert em.solve_kn(100.0, 1000, math.pi**2 / 400, safety=0) == 1

    def test_safety(self):
        assert em.solve_kn(100.0, 1000, 20.0, 0) + 2 == em.solve_kn(100.0, 1000, 20.0)
        with pytest.raises(InvalidParameterError):
            em.solve_kn(100.0, 1000, 20.0, 5)

    def test_decay_diagnostic(self):
        kn, d = em.kn_decay_diagnostic(100.0, math.e)
        assert kn == pytest.approx(4 / math.pi * 100**0.75, rel=1e-14)
        assert kn == pytest.approx(40.26, abs=0.01)
        assert d == pytest.approx((2 * math.pi) ** (2 / 3), rel=1e-14)
        kn, _ = em.kn_decay_diagnostic(256.0, 3.5034)
        assert kn == pytest.approx(91.2, abs=0.1)

    def test_decay_degenerate(self):
        kn, d = em.kn_decay_diagnostic(50.0, 1.0 + 1e-12)
        assert kn < 1e-4 and d < 1e-6


def test_plan_fields():
    p = em.plan(LerchParams(5j, 1.5, 2.5), 1e-10)
    assert p.kn <= p.n
    assert p.r0 == pytest.approx(math.exp(cmath.sqrt(-p.t0).real))
    assert p.eps_target == pytest.approx(2.5**1.5 * math.gamma(1.5) * 1e-10 / 2)
    assert p.n == max(1, math.ceil(p.m - 1.5 / 2))
