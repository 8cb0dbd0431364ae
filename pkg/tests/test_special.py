import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate
from scipy.special import gamma as sp_gamma

import oracle_values as ov
from zetaexplicit.errors import BranchCutError, DomainError, PoleError
from zetaexplicit.special import (
    LI_2,
    PrecisionBudget,
    constants,
    dirichlet_l,
    exp_integral_ei,
    hurwitz_zeta,
    laurent_at_one,
    li,
    li2,
    li_of_power,
    zeta,
    zeta_derivative,
    zeta_jet,
)


def test_classical_values():
    assert zeta(2.0) == pytest.approx(math.pi**2 / 6, abs=1e-14)
    assert zeta(0.0) == pytest.approx(-0.5, abs=1e-14)
    assert abs(zeta(-2.0)) < 1e-14
    assert abs(zeta(-4.0)) < 1e-14
    assert zeta(4.0) == pytest.approx(math.pi**4 / 90, abs=1e-14)


def test_zeta_half_and_liouville_coefficient():
    assert zeta(0.5).real == pytest.approx(-1.4603545088095868, abs=1e-12)
    assert 1 / zeta(0.5).real == pytest.approx(-0.684765, abs=5e-7)


@pytest.mark.parametrize("s,expected", ov.ZETA)
def test_zeta_against_mpmath(s, expected):
    assert abs(complex(zeta(complex(s))) - expected) <= 1e-12 * max(1, abs(expected))


@pytest.mark.parametrize("order,expected", ov.ZETA_DERIVS)
def test_derivatives_against_mpmath(order, expected):
    assert abs(zeta_derivative(ov.DERIV_POINT, order) - expected) <= 1e-11


def test_derivative_cross_check_cauchy_circle():
    s0, r, n = 0.3 + 5j, 0.2, 128
    w = np.exp(2j * np.pi * np.arange(n) / n)
    vals = np.asarray(zeta(s0 + r * w))
    for k in range(1, 5):
        cauchy = math.factorial(k) * np.mean(vals * w**-k) / r**k
        assert abs(zeta_derivative(s0, k) - cauchy) < 1e-9


def test_log_two_pi_ratio():
    assert zeta_derivative(0.0, 1).real / zeta(0.0).real == pytest.approx(1.837877, abs=5e-7)
    assert -zeta_derivative(0.0, 1).real / zeta(0.0).real == pytest.approx(-math.log(2 * math.pi), abs=1e-10)


@pytest.mark.parametrize("k", range(1, 6))
def test_zeta_prime_at_trivial_zeros(k):
    expected = (-1) ** k * math.factorial(2 * k) / (2 * (2 * math.pi) ** (2 * k)) * zeta(2.0 * k + 1).real
    assert abs(zeta_derivative(-2.0 * k, 1).real - expected) <= 1e-10 * max(1, abs(expected))


def test_first_zero_is_simple():
    d = zeta_derivative(ov.RHO1, 1)
    assert abs(d) > 0.1
    assert abs(d - ov.ZETA_PRIME_RHO1) < 1e-11


def test_functional_equation_random_grid(rng):
    s = rng.uniform(0.01, 0.99, 100) + 1j * rng.uniform(-50, 50, 100)
    lhs = np.asarray(zeta(s))
    rhs = 2**s * np.pi ** (s - 1) * np.asarray(zeta(1 - s)) * np.sin(np.pi * s / 2) * sp_gamma(1 - s)
    assert np.max(np.abs(lhs - rhs)) <= 1e-10


@given(st.floats(-30, 30), st.floats(-60, 60))
def test_conjugate_symmetry_exact(a, b):
    s = complex(a, b)
    if abs(s - 1) < 1e-3:
        return
    assert zeta(s.conjugate()) == complex(zeta(s)).conjugate()


@pytest.mark.parametrize("direction", [1, 1j, -1, -1j])
def test_laurent_at_pole(direction):
    s = 1 + 1e-4 * direction
    # the residual left after the constant and linear Laurent terms
    assert abs((s - 1) * zeta(s) - 1 - constants().euler_gamma * (s - 1)) <= 1e-8


def test_pole_and_budget_errors():
    with pytest.raises(PoleError):
        zeta(1.0)
    tight = PrecisionBudget(target_abs_error=1e-14, max_terms=40)
    from zetaexplicit.errors import PrecisionError

    with pytest.raises(PrecisionError):
        zeta(0.5 + 3000j, tight)


def test_jet_matches_derivatives():
    j = zeta_jet(np.array([2.0 + 1j, -1.5 + 0.3j]), 3)
    for k in range(4):
        for i, s in enumerate([2.0 + 1j, -1.5 + 0.3j]):
            expect = zeta(s) if k == 0 else zeta_derivative(s, k)
            assert abs(j.derivative(k)[i] - expect) < 1e-11


@pytest.mark.parametrize("s,a,expected", ov.HURWITZ)
def test_hurwitz(s, a, expected):
    assert abs(hurwitz_zeta(s, a) - expected) <= 1e-11 * max(1, abs(expected))


def test_hurwitz_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(-1.5 + 2j, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 1.5)
    assert hurwitz_zeta(3.0, 1.0) == pytest.approx(zeta(3.0).real, abs=1e-14)


def test_dirichlet_l_values():
    assert dirichlet_l(2.0, [0, 1, -1]).real == pytest.approx(ov.L_MOD3_AT_2, abs=1e-13)
    assert abs(dirichlet_l(0.5, [0, 1, 0, -1]) - ov.L_MOD4_AT_HALF) < 1e-12
    assert abs(dirichlet_l(0.5 + 3j, [0, 1, 1j, -1j, -1]) - ov.L_MOD5_COMPLEX) < 1e-12


@pytest.mark.parametrize("z,expected", ov.EI)
def test_ei_against_mpmath(z, expected):
    assert abs(exp_integral_ei(z) - expected) <= 1e-12 * max(1, abs(expected))


def test_ei_branch_cut_and_origin():
    with pytest.raises(BranchCutError):
        exp_integral_ei(-2.0 + 0j)
    with pytest.raises(DomainError):
        exp_integral_ei(0j)
    assert issubclass(BranchCutError, DomainError)


@pytest.mark.parametrize("x,expected", ov.LI)
def test_li(x, expected):
    assert li(x) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_li_offset_and_power():
    assert LI_2 == pytest.approx(ov.LI2, abs=1e-14)
    assert LI_2 == pytest.approx(1.04516, abs=5e-6)
    x = 37.0
    quad, _ = integrate.quad(lambda t: 1 / math.log(t), 2, x, epsabs=1e-13)
    assert (li_of_power(x, 1).real - quad) == pytest.approx(LI_2, abs=1e-11)
    assert li2(x) == pytest.approx(quad, abs=1e-11)
    assert exp_integral_ei(math.log(2)).real == pytest.approx(LI_2, abs=1e-15)


def test_li_of_power_reflection():
    v = li_of_power(100.0, ov.RHO1)
    assert abs(v - ov.LI_RHO1_X100) < 1e-12
    assert li_of_power(100.0, ov.RHO1.conjugate()) == v.conjugate()
    with pytest.raises(DomainError):
        li_of_power(1.0, ov.RHO1)


def test_constants():
    k = constants()
    assert k.euler_gamma == pytest.approx(ov.EULER_GAMMA, abs=1e-12)
    assert k.stieltjes_1 == pytest.approx(ov.STIELTJES_1, abs=1e-12)
    assert k.stieltjes_2 == pytest.approx(ov.STIELTJES_2, abs=1e-12)
    assert k.glaisher_log == pytest.approx(ov.GLAISHER_LOG, abs=1e-12)
    assert k.gibbs_g == pytest.approx(ov.GIBBS_G, abs=1e-13)
    # printed decimals
    assert k.euler_gamma == pytest.approx(0.57721566, abs=5e-9)
    assert k.stieltjes_1 == pytest.approx(-0.072816, abs=5e-7)
    assert k.stieltjes_2 == pytest.approx(-0.00969, abs=5e-6)
    assert math.exp(k.glaisher_log) == pytest.approx(1.282427, abs=5e-7)


def test_laurent_coefficients_radius_independent():
    a = laurent_at_one(4, radius=1.0)
    b = laurent_at_one(4, radius=0.5)
    assert np.allclose(a, b, atol=1e-12)
