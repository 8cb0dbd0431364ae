"""Gibbs constant, the square-wave demonstrator, and overshoot at jumps.

The overshoot of an approximation at a jump of size c is measured as
``d = ((y_max - y_min - c) / 2) / c`` with y_min the nearest local minimum
left of the jump and y_max the nearest local maximum right of it.  Extrema
are located on a fine grid and refined by golden-section search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .arith import AFI, arith_value, resolve_id
from .errors import DomainError, SearchError
from .formulas import approximate, rvm_pi
from .special import sine_integral
from .zeros import ZeroCatalog, default_zeta_catalog

RVM = "rvm"  # pseudo-id: prime counting via the Riemann - von Mangoldt formula


def gibbs_constant(panels: int = 64) -> float:
    """-1/2 + Si(pi)/pi."""
    return -0.5 + sine_integral(math.pi, panels=panels) / math.pi


def fourier_square_demo(n: int, x):
    """Partial sum with n odd harmonics of the square wave jumping 0 -> 1 at pi/2."""
    if n < 1:
        raise DomainError("n must be >= 1")
    x = np.asarray(x, dtype=float)
    k = 2 * np.arange(n) + 1
    u = np.multiply.outer(x - math.pi / 2, k)
    v = 0.5 + (2 / math.pi) * (np.sin(u) / k).sum(axis=-1)
    return float(v) if v.ndim == 0 else v


def first_peak(n: int) -> tuple[float, float]:
    """(x, y) of the first maximum right of the jump."""
    lo, mid, hi = math.pi / 2, math.pi / 2 + math.pi / (2 * n), math.pi / 2 + math.pi / n
    res = minimize_scalar(lambda t: -fourier_square_demo(n, t), bracket=(lo + 1e-3 * (mid - lo), mid, hi - 1e-3 * (hi - mid)),
                          method="golden", tol=1e-12)
    return float(res.x), float(-res.fun)


@dataclass(frozen=True)
class OvershootReport:
    x_jump: float
    jump_size: float
    y_min: float
    y_max: float
    x_min: float
    x_max: float
    window: float

    @property
    def d(self) -> float:
        return ((self.y_max - self.y_min - self.jump_size) / 2) / self.jump_size


def jump_size(fid, x_jump: float) -> float:
    n = int(round(x_jump))
    if abs(n - x_jump) > 1e-9:
        raise DomainError("jumps sit at integers")
    if fid == RVM:
        return float(arith_value(AFI.LAMBDA_VON_MANGOLDT, n) > 0 and _is_prime(n))
    fid = resolve_id(fid)
    return float(arith_value(fid, n))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(math.isqrt(n)) + 1))


def _evaluator(fid, N: int, catalog: ZeroCatalog):
    if fid == RVM:
        return lambda x: np.atleast_1d(rvm_pi(np.atleast_1d(x), N, catalog))
    return lambda x: approximate(fid, np.atleast_1d(x), N, 0, catalog).total


def _nearest_extremum(f, x_jump: float, direction: int, window: float, step: float, want_max: bool):
    offsets = np.arange(1, int(round(window / step)) + 1) * step
    xs = x_jump + direction * offsets
    ys = f(xs)
    g = -ys if want_max else ys
    for i in range(1, len(g) - 1):
        if g[i] <= g[i - 1] and g[i] <= g[i + 1]:
            a, b, c = sorted((xs[i - 1], xs[i], xs[i + 1]))
            sgn = -1.0 if want_max else 1.0
            res = minimize_scalar(lambda t: sgn * float(f(np.array([t]))[0]), bracket=(a, xs[i], c),
                                  method="golden", tol=1e-10)
            return float(res.x), float(sgn * res.fun)
    side = "left" if direction < 0 else "right"
    raise SearchError(f"no local {'max' if want_max else 'min'} within {window} {side} of {x_jump}")


def measure_overshoot(fid, x_jump: float, N: int, catalog: ZeroCatalog | None = None,
                      window: float | None = None, step: float = 1e-4) -> OvershootReport:
    """Nearest extrema of the N-zero approximation on both sides of a jump.

    ``fid`` is an arithmetic function id (its explicit formula) or ``"rvm"``
    for the prime-counting formula.  The default window is a few ripple
    wavelengths (pi x / t_N), kept inside the gap to the neighbouring jumps.
    """
    catalog = catalog or default_zeta_catalog()
    c = jump_size(fid, x_jump)
    if c == 0:
        raise DomainError(f"{x_jump} is not a jump point")
    if window is None:
        t_n = catalog.ordinates[N - 1] if N > 0 else 10.0
        window = min(0.45, 4 * math.pi * x_jump / t_n)
    f = _evaluator(fid, N, catalog)
    x_min, y_min = _nearest_extremum(f, x_jump, -1, window, step, want_max=False)
    x_max, y_max = _nearest_extremum(f, x_jump, +1, window, step, want_max=True)
    return OvershootReport(float(x_jump), c, y_min, y_max, x_min, x_max, window)
