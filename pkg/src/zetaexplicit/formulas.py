"""Explicit formulas: summatory functions as sums of residues.

For every arithmetic function the residues of ``F(s) x^s / s`` split into

* a smooth part from the poles at fixed points (``SmoothTerm`` list),
* one family of terms per nontrivial zeta zero (``zero_term``), possibly
  living at a shifted site such as rho/2 or rho + 1,
* a family at the trivial zeros -2k (``real_zero_term``), which either
  vanishes, converges, or diverges.

Zero terms are computed in closed form (the F/G expressions, transcribed) and
can be cross-checked against the generic Laurent route in
:mod:`zetaexplicit.series` and against numeric circle residues.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import quad_vec

from .arith import AFI, ArithmeticFunctionId, resolve_id
from .errors import AccuracyError, DomainError, SimplicityError
from .series import DirichletSeries, ZetaFactor, eval_log_terms
from .special import constants, exp_integral_ei, zeta, zeta_jet
from .zeros import ZeroCatalog, default_zeta_catalog

Coeffs = list  # list of arrays, coefficient of (log x)^j


@dataclass(frozen=True)
class SmoothTerm:
    coefficient: float
    x_exponent: float
    log_power: int = 0


@dataclass(frozen=True)
class ZeroSite:
    """Where the residue attached to a zero rho sits: s = scale * rho + shift."""

    scale: float
    shift: float
    order: int = 1

    def at(self, rho):
        return self.scale * np.asarray(rho, dtype=complex) + self.shift


@dataclass(frozen=True)
class FormulaDescriptor:
    id: ArithmeticFunctionId
    dirichlet_factors: DirichletSeries
    c_min: float
    smooth_terms: tuple[SmoothTerm, ...]
    zero_sites: tuple[ZeroSite, ...]
    real_zero_behavior: str  # "vanishes" | "convergent" | "divergent"
    real_zero_site: Callable[[int], float] = field(compare=False, default=lambda k: -2.0 * k)
    zero_rule: Callable = field(compare=False, default=None)
    real_rule: Callable | None = field(compare=False, default=None)
    closed_form_zero_term: bool = True

    @property
    def zero_site_map(self) -> tuple[ZeroSite, ...]:
        return self.zero_sites

    def smooth_sites(self) -> dict[float, int]:
        """Pole site -> order (1 + highest log power)."""
        out: dict[float, int] = {}
        for t in self.smooth_terms:
            out[t.x_exponent] = max(out.get(t.x_exponent, 0), t.log_power + 1)
        return out


# zeta values used by the closed forms -----------------------------------------------


def _zd(w, K: int) -> list[np.ndarray]:
    """[zeta(w), zeta'(w), ..., zeta^(K)(w)]."""
    jet = zeta_jet(np.asarray(w, dtype=complex), K)
    return [jet.derivative(k) for k in range(K + 1)]


@lru_cache(maxsize=None)
def _k(w: float, k: int = 0) -> float:
    return float(_zd(complex(w), k)[k].real)


def _zeta_prime_at(rho) -> np.ndarray:
    zp = _zd(rho, 1)[1]
    bad = np.abs(zp) < 1e-12
    if np.any(bad):
        raise SimplicityError(f"zeta'(rho) below 1e-12 at rho = {np.asarray(rho)[bad][0]}")
    return zp


# closed-form zero terms ---------------------------------------------------------------
# Each rule maps an array of zeros rho to [(site, [c0, c1, ...]), ...] such that
# the term is sum over entries of x^site * sum_j c_j log(x)^j.


def _simple(site_fn, numer_fn):
    def rule(rho):
        zp = _zeta_prime_at(rho)
        return [(site_fn(rho), [numer_fn(rho) / zp])]

    return rule


def _z(w):
    return np.asarray(zeta(np.asarray(w, dtype=complex)))


def _rule_lambda_tau(s):
    _, z1, z2 = _zd(s, 2)
    Z2, Z2p = _zd(2 * s, 1)
    F1 = -Z2 * (s * Z2 * z2 + z1 * (Z2 - 4 * s * Z2p))
    F2 = s * Z2**2 * z1
    G = s**2 * z1**3
    return [(s, [F1 / G, F2 / G])]


def _rule_lambda_two_nu(s):
    _, z1, z2 = _zd(s, 2)
    Z2, Z2p = _zd(2 * s, 1)
    F1 = -s * Z2 * z2 - z1 * (Z2 - 2 * s * Z2p)
    F2 = s * Z2 * z1
    G = s**2 * z1**3
    return [(s, [F1 / G, F2 / G])]


def _rule_lambda_tau_sq_arg(s):
    _, z1, z2, z3 = _zd(s, 3)
    Z2, Z2p, Z2pp = _zd(2 * s, 2)
    F1 = (
        3 * s**2 * Z2**2 * z2**2
        + 2 * z1**2 * (Z2 * (4 * s**2 * Z2pp + Z2) + 4 * s**2 * Z2p**2 - 4 * s * Z2 * Z2p)
        - s * Z2 * z1 * (s * Z2 * z3 - 3 * z2 * (Z2 - 4 * s * Z2p))
    )
    F2 = -s * Z2 * z1 * (3 * s * Z2 * z2 + 2 * z1 * (Z2 - 4 * s * Z2p))
    F3 = s**2 * Z2**2 * z1**2
    G = 2 * s**3 * z1**5
    return [(s, [F1 / G, F2 / G, F3 / G])]


def printed_lambda_tau_squared_terms(s):
    """The printed order-4 F/G functions for sum lambda(n) tau(n)^2.

    They were generated with numerator zeta(2s)^2 x^s / s, whereas the
    Dirichlet series is zeta(2s)^3 / zeta(s)^4; they are kept for reference
    and tests only (they equal the residue of zeta(2s)^2 x^s / (s zeta(s)^4)).
    """
    _, z1, z2, z3, z4 = _zd(s, 4)
    Z2, Z2p, Z2pp, Z2ppp = _zd(2 * s, 3)
    inner = Z2 * (4 * s**2 * Z2pp + Z2) + 4 * s**2 * Z2p**2 - 4 * s * Z2 * Z2p
    d = Z2 - 4 * s * Z2p
    F1 = (
        -15 * s**3 * Z2**2 * z2**3
        - s * z1**2 * (12 * z2 * inner + s * Z2 * (s * Z2 * z4 - 4 * z3 * d))
        + 5 * s**2 * Z2 * z1 * z2 * (2 * s * Z2 * z3 - 3 * z2 * d)
        - 2
        * z1**3
        * (
            -12 * s * Z2p * (2 * s**2 * Z2pp + Z2)
            + 12 * s**2 * Z2p**2
            + Z2 * (-8 * s**3 * Z2ppp + 12 * s**2 * Z2pp + 3 * Z2)
        )
    )
    F2 = s * z1 * (15 * s**2 * Z2**2 * z2**2 + 6 * z1**2 * inner - 4 * s * Z2 * z1 * (s * Z2 * z3 - 3 * z2 * d))
    F3 = -3 * s**2 * Z2 * z1**2 * (2 * s * Z2 * z2 + z1 * d)
    F4 = s**3 * Z2**2 * z1**3
    G = 6 * s**4 * z1**7
    return [(s, [F1 / G, F2 / G, F3 / G, F4 / G])]


def _rule_lambda_sigma(s):
    z1 = _zeta_prime_at(s)
    F1 = _z(2 * s) * _z(2 * s - 2) / (s * _z(s - 1) * z1)
    F2 = _z(2 * s) * _z(2 * s + 2) / ((s + 1) * _z(s + 1) * z1)
    return [(s, [F1]), (s + 1, [F2])]


def _rule_lambda_sigma_squared(s):
    _, z1, z2 = _zd(s, 2)
    Z2, Z2p = _zd(2 * s, 1)
    zm1, zm1p = _zd(s - 1, 1)
    zp1, zp1p = _zd(s + 1, 1)
    Zm2, Zm2p = _zd(2 * s - 2, 1)
    Zp2, Zp2p = _zd(2 * s + 2, 1)
    F1 = Z2 * _z(2 * s - 4) * Zm2 / (s * _z(s - 2) * zm1**2 * z1)
    F2 = Z2 * Zp2 * _z(2 * s + 4) / ((s + 2) * zp1**2 * _z(s + 2) * z1)
    F3 = -(s + 1) * zm1 * Z2 * zp1 * Zm2 * Zp2 * z2 - z1 * (
        (s + 1) * Z2 * zp1 * Zm2 * Zp2 * zm1p
        + zm1
        * (
            (s + 1) * Z2 * Zm2 * Zp2 * zp1p
            + zp1
            * (
                Zp2 * (Zm2 * (Z2 - 2 * (s + 1) * Z2p) - 2 * (s + 1) * Z2 * Zm2p)
                - 2 * (s + 1) * Z2 * Zm2 * Zp2p
            )
        )
    )
    F4 = (s + 1) * zm1 * Z2 * zp1 * Zm2 * Zp2 * z1
    G = (s + 1) ** 2 * zm1**2 * zp1**2 * z1**3
    return [(s, [F1]), (s + 2, [F2]), (s + 1, [F3 / G, F4 / G])]


def _lambda_sigma_tau_f1(s):
    z1 = _zd(s, 1)[1]
    return _z(s - 1) ** 2 * _z(s + 1) ** 2 / (
        (s + 1) * _z((s - 1) / 2) ** 2 * _z((s + 1) / 2) ** 2 * z1
    )


def _rule_lambda_sigma_tau(s):
    _, z1, z2 = _zd(s, 2)
    Z2, Z2p = _zd(2 * s, 1)
    zm1, zm1p = _zd(s - 1, 1)
    zp1, zp1p = _zd(s + 1, 1)
    Zm2, Zm2p = _zd(2 * s - 2, 1)
    Zm1, Zm1p = _zd(2 * s - 1, 1)
    Zp2, Zp2p = _zd(2 * s + 2, 1)
    Zp1, Zp1p = _zd(2 * s + 1, 1)
    F1 = _lambda_sigma_tau_f1(s)
    F2 = -Z2 * Zm2 * (
        s * zm1 * Z2 * Zm2 * Zm1 * z2
        + z1
        * (
            2 * s * Z2 * Zm2 * Zm1 * zm1p
            + zm1 * (Z2 * (Zm2 * (Zm1 + 2 * s * Zm1p) - 4 * s * Zm1 * Zm2p) - 4 * s * Zm2 * Zm1 * Z2p)
        )
    )
    F3 = s * zm1 * Z2**2 * Zm2**2 * Zm1 * z1
    G1 = s**2 * zm1**3 * Zm1**2 * z1**3
    F4 = Z2 * Zp2 * (
        -(s + 1) * Z2 * zp1 * Zp2 * Zp1 * z2
        - z1
        * (
            Z2
            * (
                2 * (s + 1) * Zp2 * Zp1 * zp1p
                + zp1 * (Zp2 * (Zp1 + 2 * (s + 1) * Zp1p) - 4 * (s + 1) * Zp1 * Zp2p)
            )
            - 4 * (s + 1) * zp1 * Zp2 * Zp1 * Z2p
        )
    )
    F5 = (s + 1) * Z2**2 * zp1 * Zp2**2 * Zp1 * z1
    G2 = (s + 1) ** 2 * zp1**3 * Zp1**2 * z1**3
    return [((1 + s) / 2, [F1]), (s, [F2 / G1, F3 / G1]), (s + 1, [F4 / G2, F5 / G2])]


# real-zero rules for the divergent cases------------------------------------------------


def _real_lambda_two_nu(k):
    return [(-2.0 * k, [-_k(-4 * k, 1) / (k * _k(-2 * k, 1) ** 2)])]


def _real_lambda_tau_sq_arg(k):
    return [(-2.0 * k, [-2 * _k(-4 * k, 1) ** 2 / (k * _k(-2 * k, 1) ** 3)])]


def _real_lambda_tau_squared(k):
    return [(-2.0 * k, [-4 * _k(-4 * k, 1) ** 3 / (k * _k(-2 * k, 1) ** 4)])]


def _real_lambda_sigma_tau(k):
    s = np.asarray([-2.0 * k], dtype=complex)
    return [((1 - 2 * k) / 2, [complex(_lambda_sigma_tau_f1(s)[0]).real])]


# descriptor table --------------------------------------------------------------------


def _F(*factors, constant=1.0) -> DirichletSeries:
    return DirichletSeries(tuple(ZetaFactor(*f) for f in factors), constant)


def _build() -> dict[ArithmeticFunctionId, FormulaDescriptor]:
    C = constants()
    g, g1, g2 = C.euler_gamma, C.stieltjes_1, C.stieltjes_2
    pi = math.pi
    log2pi = math.log(2 * pi)
    zp2, zpp2, zppp2 = _k(2, 1), _k(2, 2), _k(2, 3)
    z3, zp3, z5 = _k(3), _k(3, 1), _k(5)
    h, hp, hpp = _k(0.5), _k(0.5, 1), _k(0.5, 2)
    zm_half, zpm_half = _k(-0.5), _k(-0.5, 1)
    z32, zp32 = _k(1.5), _k(1.5, 1)
    zm32, z52 = _k(-1.5), _k(2.5)
    logA = C.glaisher_log

    d: dict[ArithmeticFunctionId, FormulaDescriptor] = {}

    def add(fid, series, c_min, smooth, sites, behavior, rule, real_site=None, real_rule=None, closed=True):
        d[fid] = FormulaDescriptor(
            id=fid,
            dirichlet_factors=series,
            c_min=c_min,
            smooth_terms=tuple(SmoothTerm(*t) for t in smooth),
            zero_sites=tuple(ZeroSite(*z) for z in sites),
            real_zero_behavior=behavior,
            real_zero_site=real_site or (lambda k: -2.0 * k),
            zero_rule=rule,
            real_rule=real_rule,
            closed_form_zero_term=closed,
        )

    R = [(1.0, 0.0, 1)]

    add(AFI.LAMBDA_VON_MANGOLDT, _F((1, 0, 1, 1), (1, 0, -1), constant=-1.0), 1.0,
        [(1.0, 1.0), (-log2pi, 0.0)], R, "convergent",
        lambda r: [(r, [-1 / r])])
    add(AFI.MU, _F((1, 0, -1)), 1.0, [(-2.0, 0.0)], R, "convergent",
        _simple(lambda r: r, lambda r: 1 / r))
    add(AFI.SQUAREFREE_INDICATOR, _F((1, 0, 1), (2, 0, -1)), 1.0,
        [(1.0, 0.0), (6 / pi**2, 1.0)], [(0.5, 0.0, 1)], "convergent",
        _simple(lambda r: r / 2, lambda r: _z(r / 2) / r), real_site=lambda k: -1.0 * k)
    add(AFI.PHI, _F((1, -1, 1), (1, 0, -1)), 2.0, [(1 / 6, 0.0), (3 / pi**2, 2.0)], R,
        "convergent", _simple(lambda r: r, lambda r: _z(r - 1) / r))
    add(AFI.LIOUVILLE, _F((2, 0, 1), (1, 0, -1)), 1.0, [(1.0, 0.0), (1 / h, 0.5)], R,
        "vanishes", _simple(lambda r: r, lambda r: _z(2 * r) / r))
    add(AFI.TWO_POW_NU, _F((1, 0, 2), (2, 0, -1)), 1.0,
        [(-0.5, 0.0), (6 * (-12 * zp2 + 2 * g * pi**2 - pi**2) / pi**4, 1.0), (6 / pi**2, 1.0, 1)],
        [(0.5, 0.0, 1)], "convergent", _simple(lambda r: r / 2, lambda r: _z(r / 2) ** 2 / r),
        real_site=lambda k: -1.0 * k)
    add(AFI.SIGMA_OF_SQUARE, _F((1, 0, 1), (1, -1, 1), (1, -2, 1), (2, -2, -1)), 3.0,
        [(1 / 48, 0.0), (-1 / 12, 1.0), (-1 / 4, 2.0), (5 * z3 / pi**2, 3.0)],
        [(0.5, 1.0, 1)], "vanishes",
        _simple(lambda r: r / 2 + 1,
                lambda r: _z(r / 2 + 1) * _z(r / 2) * _z(r / 2 - 1) / (2 * (r / 2 + 1))),
        real_site=lambda k: -1.0 * k)
    add(AFI.SIGMA_SQUARED, _F((1, 0, 1), (1, -1, 2), (1, -2, 1), (2, -2, -1)), 3.0,
        [(-1 / 576, 0.0), (1 / 24, 1.0),
         ((12 * zp2 / pi**2 - 4 * g + 1 - 2 * log2pi) / 8, 2.0), (-1 / 4, 2.0, 1),
         (5 * z3 / 6, 3.0)],
        [(0.5, 1.0, 1)], "vanishes",
        _simple(lambda r: r / 2 + 1,
                lambda r: _z(r / 2 + 1) * _z(r / 2) ** 2 * _z(r / 2 - 1) / (2 * (r / 2 + 1))),
        real_site=lambda k: -1.0 * k)
    add(AFI.TAU_OF_SQUARE, _F((1, 0, 3), (2, 0, -1)), 1.0,
        [(0.25, 0.0),
         (6 * (pi**4 * (-3 * g1 + 3 * g**2 - 3 * g + 1) + 144 * zp2**2
               - 12 * pi**2 * (zpp2 + 3 * g * zp2 - zp2)) / pi**6, 1.0),
         ((6 * (3 * g - 1) * pi**2 - 72 * zp2) / pi**4, 1.0, 1),
         (3 / pi**2, 1.0, 2)],
        [(0.5, 0.0, 1)], "convergent", _simple(lambda r: r / 2, lambda r: _z(r / 2) ** 3 / r),
        real_site=lambda k: -1.0 * k)
    a2_tau2 = 6 / pi**8 * (
        -4 * pi**4 * ((3 - 12 * g1) * zp2 + 2 * zppp2 - 3 * zpp2 + 18 * g**2 * zp2 - 12 * g * (zp2 - zpp2))
        + pi**6 * (4 * g1 + g * (4 - 12 * g1) + 2 * g2 + 4 * g**3 - 6 * g**2 - 1)
        - 1728 * zp2**3
        + 144 * pi**2 * zp2 * (2 * zpp2 + 4 * g * zp2 - zp2)
    )
    add(AFI.TAU_SQUARED, _F((1, 0, 4), (2, 0, -1)), 1.0,
        [(-0.125, 0.0), (a2_tau2, 1.0),
         (6 * (pi**4 * (-4 * g1 + 6 * g**2 - 4 * g + 1) + 144 * zp2**2
               - 12 * pi**2 * (zpp2 + 4 * g * zp2 - zp2)) / pi**6, 1.0, 1),
         ((3 * (4 * g - 1) * pi**2 - 36 * zp2) / pi**4, 1.0, 2),
         (1 / pi**2, 1.0, 3)],
        [(0.5, 0.0, 1)], "convergent", _simple(lambda r: r / 2, lambda r: _z(r / 2) ** 4 / r),
        real_site=lambda k: -1.0 * k)
    add(AFI.SIGMA_TAU, _F((1, 0, 2), (1, -1, 2), (2, -1, -1)), 2.0,
        [(-1 / 48, 0.0), (0.5, 1.0),
         (pi**2 * (24 * z3 * zp2 + pi**2 * (4 * g * z3 - z3 - 4 * zp3)) / (144 * z3**2), 2.0),
         (pi**4 / (72 * z3), 2.0, 1)],
        [(0.5, 0.5, 1)], "convergent",
        _simple(lambda r: (r + 1) / 2,
                lambda r: _z((r + 1) / 2) ** 2 * _z((r - 1) / 2) ** 2 / (2 * ((r + 1) / 2))),
        real_site=lambda k: (1.0 - 2 * k) / 2)
    add(AFI.LIOUVILLE_TAU, _F((2, 0, 2), (1, 0, -2)), 1.0,
        [(1.0, 0.0), ((2 * g * h - h - hp) / h**3, 0.5), (1 / (2 * h**2), 0.5, 1)],
        [(1.0, 0.0, 2)], "vanishes", _rule_lambda_tau)
    add(AFI.LIOUVILLE_TWO_POW_NU, _F((2, 0, 1), (1, 0, -2)), 1.0,
        [(-2.0, 0.0), (1 / h**2, 0.5)], [(1.0, 0.0, 2)], "divergent", _rule_lambda_two_nu,
        real_rule=_real_lambda_two_nu)
    add(AFI.LIOUVILLE_TAU_OF_SQUARE, _F((2, 0, 2), (1, 0, -3)), 1.0,
        [(-2.0, 0.0), ((4 * g * h - 2 * h - 3 * hp) / (2 * h**4), 0.5), (1 / (2 * h**3), 0.5, 1)],
        [(1.0, 0.0, 3)], "divergent", _rule_lambda_tau_sq_arg, real_rule=_real_lambda_tau_sq_arg)
    a2_lt2 = (1 / (2 * h**6)) * (
        (2 - 6 * g1) * h**2 - 6 * g * h * (h + 2 * hp) + h * (4 * hp - hpp) + 6 * g**2 * h**2 + 5 * hp**2
    )
    add(AFI.LIOUVILLE_TAU_SQUARED, _F((2, 0, 3), (1, 0, -4)), 1.0,
        [(-2.0, 0.0), (a2_lt2, 0.5), (-(-3 * g * h + h + 2 * hp) / (2 * h**5), 0.5, 1),
         (1 / (8 * h**4), 0.5, 2)],
        [(1.0, 0.0, 4)], "divergent", None, real_rule=_real_lambda_tau_squared, closed=False)
    add(AFI.LIOUVILLE_SIGMA, _F((2, 0, 1), (2, -2, 1), (1, 0, -1), (1, -1, -1)), 2.0,
        [(-1 / (12 * zm_half * h), 0.5), (z3 / (3 * h * z32), 1.5)],
        [(1.0, 0.0, 1), (1.0, 1.0, 1)], "vanishes", _rule_lambda_sigma)
    add(AFI.LIOUVILLE_SIGMA_SQUARED,
        _F((2, 0, 1), (2, -2, 1), (2, -4, 1), (1, 0, -1), (1, -2, -1), (1, -1, -2)), 3.0,
        [(-1 / (1440 * zm32 * zm_half**2 * h), 0.5),
         (-z3 / (36 * zm_half * h**2 * z32), 1.5),
         (z3 * z5 / (5 * h * z32**2 * z52), 2.5)],
        [(1.0, 0.0, 1), (1.0, 2.0, 1), (1.0, 1.0, 2)], "vanishes", _rule_lambda_sigma_squared)
    a1_lst = (
        zm_half * (h * (-24 * logA + 3 + log2pi) + hp) + h * zpm_half - 2 * g * h * zm_half
    ) / (72 * zm_half**3 * h**3)
    a3_lst = (2 * z3 / (3 * pi**4 * h**3 * z32**3)) * (
        -18 * h * z32 * z3 * zp2
        + pi**2 * (6 * g * h * z32 * z3 - 3 * z32 * z3 * hp - h * (3 * z3 * zp32 + z32 * (z3 - 6 * zp3)))
    )
    add(AFI.LIOUVILLE_SIGMA_TAU,
        _F((2, 0, 2), (2, -2, 2), (2, -1, -1), (1, 0, -2), (1, -1, -2)), 2.0,
        [(a1_lst, 0.5), (-1 / (144 * zm_half**2 * h**2), 0.5, 1), (a3_lst, 1.5),
         (z3**2 / (pi**2 * h**2 * z32**2), 1.5, 1)],
        [(0.5, 0.5, 1), (1.0, 0.0, 2), (1.0, 1.0, 2)], "divergent", _rule_lambda_sigma_tau,
        real_site=lambda k: (1.0 - 2 * k) / 2, real_rule=_real_lambda_sigma_tau)
    add(AFI.GCD_SUM, _F((1, -1, 2), (1, 0, -1)), 2.0,
        [(-1 / 72, 0.0), (3 * ((4 * g - 1) * pi**2 - 12 * zp2) / (2 * pi**4), 2.0),
         (3 / pi**2, 2.0, 1)],
        R, "convergent", _simple(lambda r: r, lambda r: _z(r - 1) ** 2 / r))
    add(AFI.SQUARE_FULL_INDICATOR, _F((2, 0, 1), (3, 0, 1), (6, 0, -1)), 0.5,
        [(-0.5, 0.0), (_k(2 / 3) / _k(2), 1 / 3), (z32 / z3, 0.5)],
        [(1 / 6, 0.0, 1)], "convergent",
        _simple(lambda r: r / 6, lambda r: _z(r / 2) * _z(r / 3) / r),
        real_site=lambda k: -k / 3.0)
    return d


@lru_cache(maxsize=1)
def _descriptors() -> dict[ArithmeticFunctionId, FormulaDescriptor]:
    return _build()


def descriptor(fid) -> FormulaDescriptor:
    return _descriptors()[resolve_id(fid)]


def all_descriptors() -> list[FormulaDescriptor]:
    return list(_descriptors().values())


# term evaluation ----------------------------------------------------------------------


def laurent_zero_terms(fid, rho) -> list[tuple[np.ndarray, Coeffs]]:
    """Zero terms by Laurent expansion of F(s)/s at every mapped site."""
    desc = descriptor(fid)
    rho = np.atleast_1d(np.asarray(rho, dtype=complex))
    out = []
    for site in desc.zero_sites:
        s0 = site.at(rho)
        out.append((s0, desc.dirichlet_factors.residue_coefficients(s0, zero_points=[rho])))
    return out


def zero_term_coefficients(fid, rho) -> list[tuple[np.ndarray, Coeffs]]:
    """Closed-form coefficients for the zeros ``rho`` (array)."""
    desc = descriptor(fid)
    rho = np.atleast_1d(np.asarray(rho, dtype=complex))
    _zeta_prime_at(rho)
    if not desc.closed_form_zero_term:
        return laurent_zero_terms(fid, rho)
    return [(np.asarray(s, dtype=complex), [np.asarray(c, dtype=complex) for c in cs]) for s, cs in desc.zero_rule(rho)]


def _sum_terms(parts, x) -> np.ndarray:
    """sum over sites, result shape rho.shape + x.shape."""
    total = None
    for site, coeffs in parts:
        v = eval_log_terms(site, coeffs, x)
        total = v if total is None else total + v
    return total


def zero_term(fid, rho, x):
    """Contribution of the single zero rho (no conjugate doubling)."""
    rho_arr = np.atleast_1d(np.asarray(rho, dtype=complex))
    x_arr = np.asarray(x, dtype=float)
    v = _sum_terms(zero_term_coefficients(fid, rho_arr), x_arr)
    if np.ndim(rho) == 0:
        v = v[0]
        return complex(v) if np.ndim(x) == 0 else v
    return v


def real_zero_coefficients(fid, k: int) -> list[tuple[float, list[float]]]:
    desc = descriptor(fid)
    if desc.real_rule is not None:
        return desc.real_rule(k)
    rho = np.array([-2.0 * k], dtype=complex)
    parts = desc.zero_rule(rho)
    return [(float(np.real(s[0])), [float(np.real(np.asarray(c)[0])) for c in cs]) for s, cs in parts]


def real_zero_term(fid, k: int, x):
    """Term attached to the trivial zero -2k (exactly 0 when the family vanishes)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    desc = descriptor(fid)
    x_arr = np.asarray(x, dtype=float)
    if desc.real_zero_behavior == "vanishes":
        return 0.0 if x_arr.ndim == 0 else np.zeros(x_arr.shape)
    total = np.zeros(x_arr.shape)
    for site, coeffs in real_zero_coefficients(fid, k):
        lx = np.log(x_arr)
        total = total + x_arr**site * sum(c * lx**j for j, c in enumerate(coeffs))
    return float(total) if x_arr.ndim == 0 else total


def smooth_part(fid, x):
    desc = descriptor(fid)
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0):
        raise DomainError("x must be positive")
    lx = np.log(x_arr)
    total = np.zeros(x_arr.shape)
    for t in desc.smooth_terms:
        total = total + t.coefficient * x_arr**t.x_exponent * lx**t.log_power
    return float(total) if x_arr.ndim == 0 else total


def smooth_terms_at(fid, site: float) -> list[SmoothTerm]:
    return [t for t in descriptor(fid).smooth_terms if t.x_exponent == site]


@dataclass(frozen=True)
class ApproximationResult:
    """Components of an approximation; arrays when x was an array.

    ``total = smooth + zero_sum + real_zero_sum`` always holds.  Divergent
    real-zero families are left out (``real_zero_sum`` = 0) and their partial
    sum is reported in ``excluded_real_zero_sum``.
    """

    x: np.ndarray | float
    smooth: np.ndarray | float
    zero_sum: np.ndarray | float
    real_zero_sum: np.ndarray | float
    total: np.ndarray | float
    per_term: np.ndarray | None = None  # 2 Re of each zero's contribution, shape (N,) + x.shape
    excluded_real_zero_sum: np.ndarray | float | None = None
    warnings: tuple[str, ...] = ()


_COEF_CACHE: dict = {}


def _cached_coefficients(fid, ordinates: np.ndarray):
    key = (resolve_id(fid), ordinates.size, hash(ordinates.tobytes()))
    if key not in _COEF_CACHE:
        if len(_COEF_CACHE) > 256:
            _COEF_CACHE.clear()
        _COEF_CACHE[key] = zero_term_coefficients(fid, 0.5 + 1j * ordinates)
    return _COEF_CACHE[key]


def zero_sum(fid, x, N: int, catalog: ZeroCatalog | None = None, per_term: bool = False, chunk: int = 256):
    """2 Re sum_{k <= N} zero_term(rho_k, x)."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if N <= 0:
        return np.zeros(x_arr.shape), (np.zeros((0,) + x_arr.shape) if per_term else None)
    catalog = catalog or default_zeta_catalog()
    if N > len(catalog):
        raise DomainError(f"requested {N} zeros, catalog has {len(catalog)}")
    t = catalog.ordinates[:N]
    parts = _cached_coefficients(fid, t)
    total = np.zeros(x_arr.shape)
    terms = [] if per_term else None
    for i in range(0, N, chunk):
        sl = slice(i, i + chunk)
        sub = [(site[sl], [c[sl] for c in coeffs]) for site, coeffs in parts]
        v = 2 * _sum_terms(sub, x_arr).real
        total += v.sum(axis=0)
        if per_term:
            terms.append(v)
    return total, (np.concatenate(terms) if per_term else None)


def real_zero_sum(fid, x, M: int):
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    total = np.zeros(x_arr.shape)
    for k in range(1, M + 1):
        total = total + real_zero_term(fid, k, x_arr)
    return total


def approximate(fid, x, N: int = 0, M: int = 0, catalog: ZeroCatalog | None = None,
                per_term: bool = False) -> ApproximationResult:
    """Smooth part + 2 Re(sum over N zeros) + M real-zero terms."""
    desc = descriptor(fid)
    scalar = np.ndim(x) == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    sm = np.atleast_1d(smooth_part(fid, x_arr))
    zs, terms = zero_sum(fid, x_arr, N, catalog, per_term)
    rz = real_zero_sum(fid, x_arr, M)
    excluded = None
    notes: tuple[str, ...] = ()
    if M > 0 and desc.real_zero_behavior == "divergent":
        msg = f"{desc.id.value}: the real-zero series diverges; its {M} terms are excluded from total"
        warnings.warn(msg, stacklevel=2)
        excluded, rz, notes = rz, np.zeros_like(rz), (msg,)
    total = sm + zs + rz
    if scalar:
        one = lambda a: None if a is None else float(a[0])
        return ApproximationResult(float(x_arr[0]), one(sm), one(zs), one(rz), one(total),
                                   None if terms is None else terms[:, 0], one(excluded), notes)
    return ApproximationResult(x_arr, sm, zs, rz, total, terms, excluded, notes)


# Riemann - von Mangoldt prime counting -------------------------------------------------


def tail_integral(x):
    """int_x^inf dt / ((t^3 - t) log t), via t = x/u on (0, 1].

    The transformed integrand u / ((x^2 - u^2) log(x/u)) is bounded by
    1 / ((x^2 - 1) log x) on the interval, so the adaptive rule's error
    estimate (requested below 1e-13) is reliable.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 2):
        raise DomainError("tail_integral needs x >= 2")

    def f(u):
        if u == 0.0:
            return np.zeros_like(x_arr)
        return u / ((x_arr * x_arr - u * u) * np.log(x_arr / u))

    val, err = quad_vec(f, 0.0, 1.0, epsabs=1e-13, epsrel=1e-12)
    if err > 1e-10:
        raise AccuracyError(f"tail integral error estimate {err:.3g}")
    return float(val[0]) if np.ndim(x) == 0 else val


def rvm_f(x, N: int, catalog: ZeroCatalog | None = None) -> np.ndarray:
    """li(x) - 2 Re sum li(x^rho) + tail - log 2 (principal-value li)."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 2):
        raise DomainError("rvm_f needs x >= 2")
    lx = np.log(x_arr)
    out = np.asarray(exp_integral_ei(lx.astype(complex))).real - math.log(2.0)
    out = out + tail_integral(x_arr)
    if N > 0:
        catalog = catalog or default_zeta_catalog()
        if N > len(catalog):
            raise DomainError(f"requested {N} zeros, catalog has {len(catalog)}")
        rho = 0.5 + 1j * catalog.ordinates[:N]
        for i in range(0, N, 200):
            z = np.multiply.outer(rho[i : i + 200], lx)
            out = out - 2 * np.asarray(exp_integral_ei(z)).real.sum(axis=0)
    return out


def rvm_pi(x, N: int, catalog: ZeroCatalog | None = None):
    """pi_0(x) ~ sum_n mu(n)/n f(x^(1/n)), over n with x^(1/n) >= 2."""
    from .arith import arith_value

    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 2):
        raise DomainError("rvm_pi needs x >= 2")
    total = np.zeros(x_arr.shape)
    n = 1
    while True:
        y = x_arr ** (1.0 / n)
        mask = y >= 2
        if not mask.any():
            break
        mu = arith_value(AFI.MU, n)
        if mu:
            total[mask] += mu / n * rvm_f(y[mask], N, catalog)
        n += 1
    return float(total[0]) if np.ndim(x) == 0 else total


def rvm_outer_terms(x: float) -> int:
    """Number of n with x^(1/n) >= 2."""
    return int(math.floor(math.log(x) / math.log(2.0)))


def zero_basis_function(t: float, x):
    """(sqrt(x) cos(t log x), sqrt(x) sin(t log x)), the shape each zero contributes."""
    x = np.asarray(x, dtype=float)
    r = np.sqrt(x)
    return r * np.cos(t * np.log(x)), r * np.sin(t * np.log(x))
