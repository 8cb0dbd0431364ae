"""Residues of quotients A(s)/B(s) and of functions with known pole order.

Three routes:

* ``residue_closed_form`` - derivative formulas for denominator zeros of
  order 1, 2, 3, and the limit formula for a pole of the numerator.
* ``residue_series`` - any order, by dividing truncated Taylor series
  (``b_m + b_{m+1} h + ...`` into ``a_0 + a_1 h + ...``).
* ``residue_numeric_circle`` - trapezoid rule on a circle; the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable

import numpy as np

from .errors import AccuracyError, CapabilityError, DomainError, InconsistentOrderError
from .jets import Jet

DerivativeProvider = Callable[[complex, int], complex]


@dataclass(frozen=True)
class PoleSpec:
    location: complex
    order: int
    flavor: str = "denominator_zero"  # or "numerator_pole"

    def __post_init__(self):
        if self.order < 1:
            raise DomainError("pole order must be >= 1")
        if self.flavor not in ("denominator_zero", "numerator_pole"):
            raise DomainError(f"unknown pole flavor {self.flavor!r}")


@dataclass(frozen=True)
class Quotient:
    """A/B given through derivative providers ``(s, k) -> d^k/ds^k``.

    For a ``numerator_pole`` the numerator provider must return derivatives
    of the regularised product ``f(s) (s - s0)^n`` and ``denominator`` may be
    None.  ``*_max_order`` declares which derivatives exist.
    """

    numerator: DerivativeProvider
    denominator: DerivativeProvider | None = None
    numerator_max_order: int = 6
    denominator_max_order: int = 6


def _need(q: Quotient, a: int, b: int) -> None:
    if a > q.numerator_max_order:
        raise CapabilityError(f"numerator derivative of order {a} unavailable")
    if b and (q.denominator is None or b > q.denominator_max_order):
        raise CapabilityError(f"denominator derivative of order {b} unavailable")


def residue_closed_form(q: Quotient, pole: PoleSpec, zero_tol: float = 1e-12) -> complex:
    s0, m = pole.location, pole.order
    if pole.flavor == "numerator_pole":
        _need(q, m - 1, 0)
        return complex(q.numerator(s0, m - 1)) / factorial(m - 1)
    if m > 3:
        raise CapabilityError("closed forms exist for orders 1-3; use residue_series")
    _need(q, m - 1, 2 * m - 1)
    B = [complex(q.denominator(s0, k)) for k in range(2 * m)]
    A = [complex(q.numerator(s0, k)) for k in range(m)]
    scale = max(1.0, *(abs(b) for b in B[m:]))
    if abs(B[m]) <= zero_tol * scale:
        raise InconsistentOrderError(f"B^({m}) vanishes at {s0}: zero order exceeds {m}")
    for k in range(m):
        if abs(B[k]) > 1e-8 * scale:
            raise InconsistentOrderError(f"B^({k}) = {B[k]:.3g} is not zero at {s0}")
    if m == 1:
        return A[0] / B[1]
    if m == 2:
        return (6 * A[1] * B[2] - 2 * A[0] * B[3]) / (3 * B[2] ** 2)
    return (
        120 * B[3] ** 2 * A[2]
        - 60 * B[4] * B[3] * A[1]
        - 12 * A[0] * B[5] * B[3]
        + 15 * A[0] * B[4] ** 2
    ) / (40 * B[3] ** 3)


def residue_series(a_coeffs, b_coeffs, order: int):
    """Residue of A/B at a zero of B of the given order, from Taylor coefficients.

    ``a_coeffs[k]`` and ``b_coeffs[k]`` are the h^k coefficients (not
    derivatives); needs k < order for A and k < 2*order for B.  Works
    elementwise on arrays.
    """
    a = np.asarray(a_coeffs, dtype=complex)[:order]
    b = np.asarray(b_coeffs, dtype=complex)[order : 2 * order]
    if a.shape[0] < order or b.shape[0] < order:
        raise CapabilityError("not enough Taylor coefficients for this order")
    q = Jet(a) / Jet(b)
    return q.c[order - 1]


@dataclass(frozen=True)
class NumericResidue:
    value: complex
    error_estimate: float
    nodes: int
    radius: float


def residue_numeric_circle(
    f: Callable[[np.ndarray], np.ndarray],
    s0: complex,
    radius: float,
    nodes: int = 64,
    tol: float = 1e-11,
    max_nodes: int = 8192,
) -> NumericResidue:
    """(1 / 2 pi i) times the integral of f around |s - s0| = radius.

    ``f`` must accept an array of points.  The node count doubles until two
    successive estimates agree to ``tol`` (relative to max(1, |value|)).
    """
    if nodes < 64:
        raise DomainError("use at least 64 nodes")
    if radius <= 0:
        raise DomainError("radius must be positive")

    def trap(n: int) -> complex:
        w = np.exp(2j * np.pi * np.arange(n) / n)
        vals = np.asarray(f(s0 + radius * w), dtype=complex)
        return complex(radius * np.mean(vals * w))

    prev = trap(nodes)
    n = nodes
    while True:
        n *= 2
        cur = trap(n)
        err = abs(cur - prev)
        if err <= tol * max(1.0, abs(cur)):
            return NumericResidue(cur, err, n, radius)
        if n >= max_nodes:
            raise AccuracyError(f"circle residue at {s0} did not converge (last change {err:.3g})")
        prev = cur


def default_radius(s0: complex, singularities, cap: float = 0.25) -> float:
    """Half the distance to the nearest other singularity, capped."""
    pts = np.asarray(list(singularities), dtype=complex)
    if pts.size:
        d = np.abs(pts - s0)
        d = d[d > 1e-12]
        if d.size:
            return float(min(cap, 0.5 * d.min()))
    return cap
