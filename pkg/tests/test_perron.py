import math

import numpy as np
import pytest
from scipy.special import exp1, expi

from zetaexplicit.arith import AFI, arith_table, summatory_midpoint
from zetaexplicit.errors import ContractError, DomainError, SingularityError
from zetaexplicit.formulas import descriptor
from zetaexplicit.perron import (
    QuadratureConfig,
    RectangleContour,
    integral_vs_T_profile,
    integrand,
    integrate_line,
    integrate_rectangle,
    nudge_rectangle,
    residue_sum_inside,
    residue_vs_rectangle,
)
from zetaexplicit.special import zeta, zeta_derivative

PSI = AFI.LAMBDA_VON_MANGOLDT


def test_integrand_examples():
    z2 = math.pi**2 / 6
    assert integrand(AFI.MU, 2.0, 1.0) == pytest.approx(3 / math.pi**2, rel=1e-14)
    assert integrand(PSI, 2.0, 1.0) == pytest.approx(-zeta_derivative(2.0, 1).real / z2 / 2, rel=1e-13)
    assert integrand(AFI.SQUAREFREE_INDICATOR, 2.0, 1.0) == pytest.approx(z2 / (math.pi**4 / 90) / 2, rel=1e-13)
    s = np.array([2 + 1j, 3 - 4j])
    assert np.allclose(integrand(AFI.MU, s, 5.0), 5.0**s / s / np.asarray(zeta(s)), rtol=1e-14)


def test_singular_points_rejected():
    with pytest.raises(SingularityError):
        integrand(PSI, 0.0, 10.0)
    with pytest.raises(SingularityError):
        integrand(PSI, 1.0, 10.0)
    with pytest.raises(SingularityError):
        integrand(AFI.MU, -2.0, 10.0)


def test_abscissa_contract():
    with pytest.raises(DomainError):
        integrate_line(PSI, 10.0, 1.0, 20.0)
    with pytest.raises(DomainError):
        integrate_line(PSI, 10.0, 2.0, -1.0)
    with pytest.raises(DomainError):
        RectangleContour(1.0, 2.0, 10.0)
    with pytest.raises(DomainError):
        QuadratureConfig(abs_tol=1e-12)


def test_horizontal_sides_are_conjugate():
    sides = integrate_rectangle(PSI, 10.0, RectangleContour(2.0, -1.0, 15.0))
    assert abs(sides.I4 - sides.I2.conjugate()) < 1e-9
    assert abs(sides.I1.imag) < 1e-9 and abs(sides.I3.imag) < 1e-9


def test_empty_rectangle_total_vanishes():
    # no poles of -zeta'/zeta x^s / s with 1.2 < Re s < 2
    sides = integrate_rectangle(PSI, 10.0, RectangleContour(2.0, 1.2, 30.0))
    assert abs(sides.total) < 1e-8


def test_same_poles_same_total():
    a = integrate_rectangle(PSI, 10.0, RectangleContour(2.0, -1.0, 15.0)).total
    b = integrate_rectangle(PSI, 10.0, RectangleContour(2.0, -1.0, 20.0)).total
    assert abs(a - b) < 1e-6


@pytest.mark.parametrize("fid", [PSI, AFI.MU, AFI.SQUAREFREE_INDICATOR, AFI.PHI, AFI.LIOUVILLE, AFI.TWO_POW_NU])
@pytest.mark.parametrize("x", [10.5, 32.0, 47.5])
def test_residue_theorem_T100(fid, x):
    cmp = residue_vs_rectangle(fid, x, RectangleContour(descriptor(fid).c_min + 1, -1.0, 100.0))
    assert cmp.ok
    assert cmp.difference <= 1e-9 * max(1.0, abs(cmp.residue_sum))


@pytest.mark.parametrize("fid", list(AFI))
def test_residue_theorem_all_ids(fid):
    cmp = residue_vs_rectangle(fid, 20.5, RectangleContour(descriptor(fid).c_min + 1, -1.0, 30.0))
    assert cmp.ok, (cmp.difference, cmp.tolerance)
    assert cmp.difference <= 1e-9 * max(1.0, abs(cmp.residue_sum))


def test_nudges_recorded():
    # zeta(2s) vanishes at s = -1: the left side moves out by one step
    r = nudge_rectangle(AFI.SQUAREFREE_INDICATOR, RectangleContour(2.0, -1.0, 100.0))
    assert r.a == pytest.approx(-1.05) and r.nudges == ("a -1 -> -1.05",)
    assert nudge_rectangle(PSI, RectangleContour(2.0, -1.0, 100.0)).nudges == ()
    # a side through a zero ordinate moves up
    r = nudge_rectangle(PSI, RectangleContour(2.0, -1.0, 14.134725141734694))
    assert r.T > 14.1348


def test_residue_sum_refuses_boundary_poles():
    with pytest.raises(ContractError):
        residue_sum_inside(PSI, 10.0, RectangleContour(2.0, -2.0, 50.0))


def test_profile():
    single = integral_vs_T_profile(PSI, 10.5, 2.0, [20.0])
    assert single.shape == (1,)
    assert single[0] == pytest.approx(integrate_line(PSI, 10.5, 2.0, 20.0).value.real, abs=1e-9)
    grid = [40.0, 10.0, 20.0]
    prof = integral_vs_T_profile(PSI, 10.5, 2.0, grid)
    for T, v in zip(grid, prof):
        assert v == pytest.approx(integrate_line(PSI, 10.5, 2.0, T).value.real, abs=1e-8)
    with pytest.raises(DomainError):
        integral_vs_T_profile(PSI, 10.5, 2.0, [0.0])


def test_line_integral_tends_to_midpoint():
    # far from a jump the truncation error ~ x^c / (T |log(x / n)|) is small at T = 400
    v = integrate_line(PSI, 10.5, 1.5, 400.0).value.real
    assert abs(v - summatory_midpoint(PSI, 10.5)) < 0.05


def _termwise_line_integral(fid, x, c, T, n_max):
    """sum_n a(n) (1 / 2 pi i) int_{c-iT}^{c+iT} (x/n)^s / s ds, each term in closed form via Ei / E1."""
    a = np.asarray(arith_table(fid, n_max), dtype=float)[1:]
    L = np.log(x / np.arange(1, n_max + 1))
    wp, wm = c + 1j * T, c - 1j * T
    out = np.empty(n_max, dtype=complex)
    pos = L > 0
    # antiderivative of e^{wL} / w is Ei(wL) for L > 0 and -E1(-wL) for L < 0 (no branch crossing)
    out[pos] = expi(L[pos] * wp) - expi(L[pos] * wm)
    out[~pos] = exp1(-L[~pos] * wm) - exp1(-L[~pos] * wp)
    return float(np.sum(a * (out / (2j * math.pi)).real))


def test_truncated_line_integral_matches_termwise_oracle():
    # lambda sigma at x = 10.5, c = 2.1: the truncation error at T = 200 is still ~0.68
    T = 200.0
    quad = integral_vs_T_profile(AFI.LIOUVILLE_SIGMA, 10.5, 2.1, [T])[0]
    oracle = _termwise_line_integral(AFI.LIOUVILLE_SIGMA, 10.5, 2.1, T, 10**5)
    assert abs(quad - oracle) < 1e-4
    assert abs(quad - 15) > 0.6
    psi = integral_vs_T_profile(PSI, 10.5, 1.1, [T])[0]
    assert abs(psi - _termwise_line_integral(PSI, 10.5, 1.1, T, 10**5)) < 1e-3
