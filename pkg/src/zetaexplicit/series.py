"""Dirichlet series written as products of shifted zeta factors.

``F(s) = constant * prod_i zeta^{(d_i)}(alpha_i s + beta_i) ** power_i``

Besides plain evaluation (used by the Perron integrand) this module expands
``F(s)/s`` in a Laurent series about any point, tracking which factors vanish
or blow up there.  The residue of ``F(s) x^s / s`` then follows for every pole
order at once: with ``F(s)/s = sum_k C_k h^k`` and
``x^s = x^{s0} sum_j (log x)^j h^j / j!`` the residue is
``x^{s0} sum_j C_{-1-j} (log x)^j / j!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import ContractError
from .jets import Jet
from .special import laurent_at_one, zeta_jet

_DEGREE = 7


@dataclass(frozen=True)
class ZetaFactor:
    alpha: float = 1.0
    beta: float = 0.0
    power: int = 1
    derivative: int = 0  # 0 for zeta, 1 for zeta'

    def argument(self, s):
        return self.alpha * np.asarray(s, dtype=complex) + self.beta


@lru_cache(maxsize=1)
def _stieltjes_taylor() -> np.ndarray:
    # zeta(1 + u) - 1/u = sum c_n u^n
    return laurent_at_one(count=_DEGREE + 3)


def _is_neg_even(w: np.ndarray) -> np.ndarray:
    return (w.imag == 0) & (w.real < 0) & (np.mod(w.real, 2) == 0)


@dataclass
class Laurent:
    """sum_k coeffs[k] h^(valuation + k), per point."""

    valuation: int
    coeffs: Jet

    def __mul__(self, other: "Laurent") -> "Laurent":
        return Laurent(self.valuation + other.valuation, self.coeffs * other.coeffs)

    def power(self, n: int) -> "Laurent":
        return Laurent(self.valuation * n, self.coeffs**n)


def _factor_laurent(f: ZetaFactor, s0: np.ndarray, zero_points, degree: int) -> Laurent:
    w0 = f.argument(s0)
    at_pole = np.abs(w0 - 1) < 1e-12
    if at_pole.any():
        if not at_pole.all():
            raise ContractError("mixed pole / regular points in one batch")
        c = _stieltjes_taylor()
        coeffs = np.zeros((degree + 1,) + w0.shape, dtype=complex)
        a = f.alpha
        if f.derivative == 0:
            # zeta(1 + a h) = 1/(a h) + sum c_n a^n h^n
            coeffs[0] = 1 / a
            for n in range(degree):
                coeffs[n + 1] = c[n] * a**n
            lau = Laurent(-1, Jet(coeffs))
        else:
            # zeta'(1 + a h) = -1/(a h)^2 + sum n c_n (a h)^(n-1)
            coeffs[0] = -1 / a**2
            for n in range(1, degree):
                coeffs[n + 1] = n * c[n] * a ** (n - 1)
            lau = Laurent(-2, Jet(coeffs))
        return lau.power(f.power)

    jet = zeta_jet(w0, degree + 2)
    c = jet.c
    if f.derivative:
        c = np.stack([(j + 1) * c[j + 1] for j in range(degree + 1)])
    k = np.arange(c.shape[0]).reshape((-1,) + (1,) * w0.ndim)
    c = c * float(f.alpha) ** k
    zero = np.zeros(w0.shape, dtype=bool)
    if f.derivative == 0:
        zero = _is_neg_even(w0)
        for zp in zero_points:
            zero |= np.abs(w0 - zp) < 1e-8
    if zero.any():
        if not zero.all():
            raise ContractError("mixed zero / non-zero factor values in one batch")
        lau = Laurent(1, Jet(c[1 : degree + 2]))
    else:
        lau = Laurent(0, Jet(c[: degree + 1]))
    return lau.power(f.power)


@dataclass(frozen=True)
class DirichletSeries:
    factors: tuple[ZetaFactor, ...]
    constant: float = 1.0

    def value(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        out = np.full(s.shape, self.constant, dtype=complex)
        for f in self.factors:
            w = f.argument(s)
            jet = zeta_jet(w, f.derivative)
            v = jet.derivative(f.derivative)
            out = out * v**f.power
        return out

    def laurent(self, s0, zero_points=(), degree: int = _DEGREE) -> Laurent:
        """Laurent expansion of F(s)/s about every point of ``s0``."""
        s0 = np.atleast_1d(np.asarray(s0, dtype=complex))
        zero_points = [np.asarray(z, dtype=complex) for z in zero_points]
        total = Laurent(0, Jet.constant(self.constant, degree, s0.shape))
        for f in self.factors:
            total = total * _factor_laurent(f, s0, zero_points, degree)
        # 1/s
        if np.all(s0 == 0):
            inv = Laurent(-1, Jet.constant(1.0, degree, s0.shape))
        elif np.any(s0 == 0):
            raise ContractError("mixed s = 0 and s != 0 in one batch")
        else:
            inv = Laurent(0, Jet.variable(s0, degree).reciprocal())
        return total * inv

    def residue_coefficients(self, s0, zero_points=(), degree: int = _DEGREE) -> list[np.ndarray]:
        """coef_j with residue of F(s) x^s / s = x^{s0} sum_j coef_j (log x)^j."""
        lau = self.laurent(s0, zero_points, degree)
        order = -lau.valuation
        if order <= 0:
            return []
        if order > degree + 1:
            raise ContractError("pole order exceeds expansion degree")
        return [lau.coeffs.c[order - 1 - j] / factorial(j) for j in range(order)]

    def pole_order(self, s0, zero_points=()) -> int:
        return -self.laurent(s0, zero_points, 2).valuation


def eval_log_terms(site, coeffs, x) -> np.ndarray:
    """sum_j coeffs[j] x^site (log x)^j, broadcasting sites against x."""
    x = np.asarray(x, dtype=float)
    site = np.asarray(site, dtype=complex)
    lx = np.log(x)
    shape = np.broadcast_shapes(site.shape + (1,) * x.ndim, site.shape + x.shape)
    acc = np.zeros(shape, dtype=complex)
    xs = np.exp(np.multiply.outer(site, lx))
    for j, c in enumerate(coeffs):
        acc = acc + np.multiply.outer(np.asarray(c, dtype=complex), lx**j)
    return acc * xs
