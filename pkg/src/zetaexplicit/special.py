"""Riemann zeta with derivatives, exponential and logarithmic integrals.

Zeta is evaluated by Euler-Maclaurin summation carried out in truncated
Taylor arithmetic (:mod:`zetaexplicit.jets`), so every derivative up to the
requested order comes out of the same pass analytically.  Points with
``Re s < -1`` are reflected through the functional equation first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np
from scipy.special import bernoulli, expi

from . import jets
from .errors import BranchCutError, DomainError, PoleError, PrecisionError
from .jets import Jet

_P = 12  # Bernoulli correction order
_B2J = bernoulli(2 * (_P + 2))[0::2][1:]
_EM_COEF = np.array([_B2J[j - 1] / factorial(2 * j) for j in range(1, _P + 2)])
_STIRLING = np.array([_B2J[k - 1] / (2 * k * (2 * k - 1)) for k in range(1, 11)])
_LOG2PI = np.log(2 * np.pi)
_REFLECT_BELOW = -1.0
_CHUNK = 3_000_000


@dataclass(frozen=True)
class PrecisionBudget:
    """Target error (relative to max(1, |value|)) and a cap on the EM terms."""

    target_abs_error: float = 1e-13
    max_terms: int = 400_000


DEFAULT_BUDGET = PrecisionBudget()


def _terms_for(s0: np.ndarray) -> np.ndarray:
    n = np.maximum(32, np.ceil(0.6 * np.abs(s0))).astype(np.int64)
    # bucket to a geometric grid so that batches share a work matrix
    b = 32 * 2.0 ** (np.ceil(4 * np.log2(n / 32.0)) / 4)
    return np.ceil(b).astype(np.int64)


def _em_block(s0: np.ndarray, degree: int, alpha: float, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Euler-Maclaurin coefficients for a batch sharing the same N.

    Returns (coeffs with shape (degree+1, len(s0)), error estimate).
    """
    logn = np.log(np.arange(N, dtype=float) + alpha)
    powers = np.stack([(-logn) ** k / factorial(k) for k in range(degree + 1)])
    out = np.empty((degree + 1, s0.size), dtype=complex)
    rows = max(1, _CHUNK // N)
    for i in range(0, s0.size, rows):
        block = s0[i : i + rows]
        E = np.exp(-np.outer(block, logn))
        out[:, i : i + rows] = (E @ powers.T).T

    s = Jet.variable(s0, degree)
    a = N + alpha
    la = np.log(a)
    tail = jets.exp((1 - s) * la) / (s - 1) + 0.5 * jets.exp(-s * la)
    rising = s
    pw = jets.exp(-(s + 1) * la)
    inv_a2 = 1.0 / (a * a)
    est = np.zeros(s0.shape)
    for j in range(1, _P + 2):
        term = rising * pw * _EM_COEF[j - 1]
        if j == _P + 1:
            est = np.abs(term.c).max(axis=0)
            break
        tail = tail + term
        rising = rising * (s + (2 * j - 1)) * (s + 2 * j)
        pw = pw * inv_a2
    return out + tail.c, est


def _em_jet(s0: np.ndarray, degree: int, alpha: float, budget: PrecisionBudget) -> np.ndarray:
    coeffs = np.empty((degree + 1, s0.size), dtype=complex)
    if s0.size == 0:
        return coeffs
    Ns = _terms_for(s0)
    for N in np.unique(Ns):
        idx = np.nonzero(Ns == N)[0]
        todo = idx
        n_cur = int(N)
        while todo.size:
            if n_cur > budget.max_terms:
                raise PrecisionError(
                    f"zeta: budget {budget.target_abs_error:g} not reached with {budget.max_terms} terms"
                )
            c, est = _em_block(s0[todo], degree, alpha, n_cur)
            scale = np.maximum(1.0, np.abs(c[0]))
            ok = est <= budget.target_abs_error * scale
            coeffs[:, todo[ok]] = c[:, ok]
            todo = todo[~ok]
            n_cur *= 2
    return coeffs


def log_gamma_jet(z: Jet) -> Jet:
    """log Gamma on a jet whose base points have positive real part."""
    z0 = z.value
    if np.any(z0.real <= 0):
        raise DomainError("log_gamma_jet needs Re z > 0")
    shift = int(max(0, np.ceil(16 - np.abs(z0).min()))) if z0.size else 0
    w = z + shift
    rw = w.reciprocal()
    rw2 = rw * rw
    acc = (w - 0.5) * jets.log(w) - w + 0.5 * _LOG2PI
    p = rw
    for coef in _STIRLING:
        acc = acc + p * coef
        p = p * rw2
    for j in range(shift):
        acc = acc - jets.log(z + j)
    return acc


def _log_sin_half_pi(s: Jet) -> Jet:
    """log sin(pi s / 2) that stays finite for large |Im s| (branch is irrelevant)."""
    w = s * (np.pi / 2)
    up = w.value.imag >= 0
    sign = np.where(up, 1.0, -1.0)
    # sin w = e^{-i sign w} (1 - e^{2 i sign w}) / (-2 i sign)
    inner = 1 - jets.exp(w * (2j * sign))
    return w * (-1j * sign) + jets.log(inner) - np.log(-2j * sign)


def _reflected(s0: np.ndarray, degree: int, budget: PrecisionBudget) -> np.ndarray:
    s = Jet.variable(s0, degree)
    other = _zeta_coeffs(1 - s0, degree, budget)
    zeta_1ms = Jet(other).shift_scale(-1.0)
    loggam = log_gamma_jet(1 - s)
    base = s * np.log(2.0) + (s - 1) * np.log(np.pi) + loggam
    small = np.abs(s0.imag) <= 30
    out = np.empty((degree + 1, s0.size), dtype=complex)
    if small.any():
        sj, _ = jets.sincos(s[small] * (np.pi / 2))
        even = (s0[small].imag == 0) & (s0[small].real % 2 == 0)
        sj.c[0, even] = 0.0
        chi = jets.exp(base[small]) * sj
        out[:, small] = (chi * zeta_1ms[small]).c
    if (~small).any():
        big = ~small
        chi = jets.exp(base[big] + _log_sin_half_pi(s[big]))
        out[:, big] = (chi * zeta_1ms[big]).c
    return out


def _zeta_coeffs(s0: np.ndarray, degree: int, budget: PrecisionBudget) -> np.ndarray:
    s0 = np.asarray(s0, dtype=complex).ravel()
    if np.any(s0 == 1):
        raise PoleError("zeta has a pole at s = 1")
    flip = s0.imag < 0
    s_up = np.where(flip, np.conj(s0), s0)
    out = np.empty((degree + 1, s0.size), dtype=complex)
    direct = s_up.real >= _REFLECT_BELOW
    if direct.any():
        out[:, direct] = _em_jet(s_up[direct], degree, 1.0, budget)
    if (~direct).any():
        out[:, ~direct] = _reflected(s_up[~direct], degree, budget)
    out[:, flip] = np.conj(out[:, flip])
    return out


def zeta_jet(s, degree: int, budget: PrecisionBudget | None = None) -> Jet:
    """Taylor coefficients of zeta about each point of ``s`` up to ``degree``."""
    s = np.asarray(s, dtype=complex)
    c = _zeta_coeffs(s, degree, budget or DEFAULT_BUDGET)
    return Jet(c.reshape((degree + 1,) + s.shape))


def _unwrap(arr: np.ndarray, like):
    return complex(arr) if np.ndim(like) == 0 else arr


def zeta(s, budget: PrecisionBudget | None = None):
    """Riemann zeta at complex ``s`` (scalar or array)."""
    return _unwrap(zeta_jet(s, 0, budget).c[0], s)


def zeta_derivative(s, order: int = 1, budget: PrecisionBudget | None = None):
    """``order``-th derivative of zeta, ``order`` in 0..6."""
    if not 0 <= order <= 6:
        raise DomainError("derivative order must be in 0..6")
    return _unwrap(zeta_jet(s, order, budget).derivative(order), s)


def hurwitz_zeta(s, alpha: float, budget: PrecisionBudget | None = None):
    """Hurwitz zeta(s, alpha) for 0 < alpha <= 1 and Re s >= -1."""
    s = np.asarray(s, dtype=complex)
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    if np.any(s.real < _REFLECT_BELOW):
        raise DomainError("hurwitz_zeta is only implemented for Re s >= -1")
    if np.any(s == 1):
        raise PoleError("pole at s = 1")
    c = _em_jet(s.ravel(), 0, alpha, budget or DEFAULT_BUDGET)
    return _unwrap(c[0].reshape(s.shape), s)


def dirichlet_l(s, values, budget: PrecisionBudget | None = None):
    """L(s, chi) for a character given by its values ``chi(0..q-1)``."""
    values = np.asarray(values, dtype=complex)
    q = values.size
    s = np.asarray(s, dtype=complex)
    total = np.zeros(s.shape, dtype=complex)
    for a in range(1, q + 1):
        v = values[a % q]
        if v != 0:
            total = total + v * np.asarray(hurwitz_zeta(s, a / q, budget))
    return _unwrap(total * np.exp(-s * np.log(q)), s)


# exponential integral ---------------------------------------------------------------


def exp_integral_ei(z):
    """Ei(z) on the principal branch, cut along the negative real axis."""
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(z_arr == 0):
        raise DomainError("Ei has a logarithmic singularity at 0")
    if np.any((z_arr.imag == 0) & (z_arr.real < 0)):
        raise BranchCutError("Ei: argument on the negative real axis branch cut")
    out = expi(z_arr)
    if np.ndim(z) == 0:
        return complex(out[0])
    return out.reshape(np.shape(z))


def li(x):
    """Logarithmic integral, principal value from 0 (li(x) = Ei(log x))."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0) or np.any(x == 1):
        raise DomainError("li needs x > 0, x != 1")
    v = np.asarray(expi(np.log(x)))  # real principal value, also for 0 < x < 1
    return float(v) if v.ndim == 0 else v


def li2(x):
    """Offset logarithmic integral, integral from 2 to x."""
    return li(x) - LI_2


def li_of_power(x, rho):
    """li(x^rho) continued along the ray, i.e. Ei(rho log x)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 1):
        raise DomainError("li_of_power needs x > 1")
    rho = np.asarray(rho, dtype=complex)
    if np.any((rho.imag == 0) & (rho.real < 0)):
        raise BranchCutError("li_of_power: rho on the negative real axis")
    return exp_integral_ei(rho * np.log(x))


LI_2 = float(expi(np.log(2.0)))


# constants ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    stieltjes_1: float
    stieltjes_2: float
    glaisher_log: float
    gibbs_g: float


def laurent_at_one(count: int = 4, radius: float = 1.0, nodes: int = 256) -> np.ndarray:
    """c_0..c_{count-1} of zeta(s) - 1/(s-1) = sum c_n (s-1)^n, by circle quadrature."""
    theta = 2 * np.pi * np.arange(nodes) / nodes
    u = radius * np.exp(1j * theta)
    vals = np.asarray(zeta(1 + u)) - 1 / u
    return np.array(
        [np.mean(vals * np.exp(-1j * n * theta)).real / radius**n for n in range(count)]
    )


def sine_integral(x: float, panels: int = 64, order: int = 20) -> float:
    """Si(x) by composite Gauss-Legendre quadrature."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, x, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    t = mid + half * nodes
    return float(np.sum(half * weights * np.sinc(t / np.pi)))


@lru_cache(maxsize=1)
def constants() -> Constants:
    c = laurent_at_one()
    return Constants(
        euler_gamma=c[0],
        stieltjes_1=-c[1],
        stieltjes_2=2 * c[2],
        glaisher_log=1 / 12 - zeta_derivative(-1.0, 1).real,
        gibbs_g=-0.5 + sine_integral(np.pi) / np.pi,
    )
