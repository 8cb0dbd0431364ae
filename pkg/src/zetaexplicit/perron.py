"""Perron integrals of F(s) x^s / s along lines and rectangle boundaries.

Quadrature is a vectorised adaptive Gauss-Kronrod (7/15) scheme.  Initial
panels are sized from the oscillation scale of the integrand (x^{it} turns at
rate log x, each zeta factor at roughly alpha log(alpha |t|)), and panels whose
Kronrod/Gauss difference is too large are bisected, all at once per pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AccuracyError, ContractError, DomainError, SingularityError
from .formulas import descriptor, real_zero_coefficients, smooth_part, zero_term_coefficients
from .series import eval_log_terms
from .special import zeta
from .zeros import ZeroCatalog, default_zeta_catalog

# Gauss-Kronrod 7/15 on [-1, 1]
_XK = np.array([
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245, 0.405845151377397166906606412076961,
    0.586087235467691130294144845693013, 0.741531185599394439863864773280788,
    0.864864423359769072789712788640926, 0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.zeros(15)
_WG[1::2] = [
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
]

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-8
    max_subdivisions: int = 200000

    def __post_init__(self):
        if self.abs_tol < 1e-10:
            raise DomainError("abs_tol must be >= 1e-10")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be positive")


@dataclass(frozen=True)
class LineIntegral:
    value: complex
    error_estimate: float
    panels: int


@dataclass(frozen=True)
class SideIntegrals:
    I1: complex
    I2: complex
    I3: complex
    I4: complex
    error_estimate: float = 0.0

    @property
    def total(self) -> complex:
        return self.I1 + self.I2 + self.I3 + self.I4


@dataclass(frozen=True)
class RectangleContour:
    c: float
    a: float
    T: float
    nudges: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.a < self.c:
            raise DomainError("need a < c")
        if not self.T > 0:
            raise DomainError("need T > 0")

    def contains(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        return (s.real > self.a) & (s.real < self.c) & (np.abs(s.imag) < self.T)


class AccuracyFailure(AccuracyError):
    def __init__(self, message: str, best: complex, error: float):
        super().__init__(message)
        self.best = best
        self.error = error


# integrand ------------------------------------------------------------------------------


def integrand(fid, s, x):
    """F(s) x^s / s from the descriptor's zeta factors."""
    desc = descriptor(fid)
    s_arr = np.asarray(s, dtype=complex)
    if np.any(np.abs(s_arr) < 1e-6):
        raise SingularityError("integrand evaluated within 1e-6 of s = 0")
    for f in desc.dirichlet_factors.factors:
        w = f.argument(s_arr)
        if (f.power > 0 or f.derivative) and np.any(np.abs(w - 1) < 1e-6):
            raise SingularityError("integrand evaluated within 1e-6 of a zeta pole")
        if f.power < 0 and f.derivative == 0 and np.any(np.abs(np.asarray(zeta(w))) < 1e-12):
            raise SingularityError("integrand evaluated at a zero of a denominator factor")
    v = desc.dirichlet_factors.value(s_arr) * np.exp(s_arr * math.log(x)) / s_arr
    return complex(v) if np.ndim(s) == 0 else v


def _oscillation_step(fid, x: float, height: float) -> float:
    desc = descriptor(fid)
    alpha = max(abs(f.alpha) for f in desc.dirichlet_factors.factors)
    rate = math.log(max(x, 2.0)) + alpha * math.log(2.0 + alpha * abs(height))
    return min(0.5, 1.5 / rate)


def _adaptive(fun, lo: float, hi: float, h0: float, config: QuadratureConfig) -> LineIntegral:
    """int_lo^hi fun(t) dt for a vectorised complex fun."""
    if hi == lo:
        return LineIntegral(0j, 0.0, 0)
    sign = 1.0
    if hi < lo:
        lo, hi, sign = hi, lo, -1.0
    n0 = max(1, math.ceil((hi - lo) / h0))
    edges = np.linspace(lo, hi, n0 + 1)
    a, b = edges[:-1], edges[1:]
    length = hi - lo
    kept_lo, kept_val, kept_err = [], [], []
    panels = 0
    while a.size:
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        t = mid[:, None] + half[:, None] * _XK[None, :]
        v = np.asarray(fun(t.ravel()), dtype=complex).reshape(t.shape)
        K = half * (v @ _WK)
        G = half * (v @ _WG)
        err = np.abs(K - G)
        ok = err <= config.abs_tol * (b - a) / length
        kept_lo.append(a[ok])
        kept_val.append(K[ok])
        kept_err.append(err[ok])
        panels += a.size
        a, b = a[~ok], b[~ok]
        if a.size and panels + 2 * a.size > config.max_subdivisions:
            best = np.concatenate(kept_val).sum() + (half[~ok] * (v[~ok] @ _WK)).sum()
            e = float(np.concatenate(kept_err).sum() + err[~ok].sum())
            raise AccuracyFailure(f"quadrature tolerance not met (error ~ {e:.3g})", complex(sign * best), e)
        m = 0.5 * (a + b)
        a, b = np.concatenate([a, m]), np.concatenate([m, b])
    order = np.argsort(np.concatenate(kept_lo), kind="stable")
    vals = np.concatenate(kept_val)[order]
    total = complex(math.fsum(vals.real), math.fsum(vals.imag))
    return LineIntegral(sign * total, float(np.concatenate(kept_err).sum()), panels)


def _vertical(fid, x, sigma, t0, t1, config) -> LineIntegral:
    h0 = _oscillation_step(fid, x, max(abs(t0), abs(t1)))
    # ds = i dt
    res = _adaptive(lambda t: integrand(fid, sigma + 1j * t, x) * 1j, t0, t1, h0, config)
    return LineIntegral(res.value / _TWO_PI_I, res.error_estimate / (2 * math.pi), res.panels)


def _horizontal(fid, x, t, s0, s1, config) -> LineIntegral:
    h0 = min(0.25, _oscillation_step(fid, x, t))
    res = _adaptive(lambda u: integrand(fid, u + 1j * t, x), s0, s1, h0, config)
    return LineIntegral(res.value / _TWO_PI_I, res.error_estimate / (2 * math.pi), res.panels)


def _check_abscissa(fid, c: float) -> None:
    desc = descriptor(fid)
    if not c > desc.c_min:
        raise DomainError(f"c = {c} must exceed the abscissa {desc.c_min} for {desc.id.value}")


def integrate_line(fid, x: float, c: float, T: float, config: QuadratureConfig | None = None) -> LineIntegral:
    """(1 / 2 pi i) int_{c - iT}^{c + iT} F(s) x^s / s ds."""
    config = config or QuadratureConfig()
    _check_abscissa(fid, c)
    if T <= 0:
        raise DomainError("T must be positive")
    # by conjugate symmetry the two halves are conjugate for real series,
    # but both are integrated so that the result carries no assumption
    return _vertical(fid, x, c, -T, T, config)


def integral_vs_T_profile(fid, x: float, c: float, T_grid, config: QuadratureConfig | None = None) -> np.ndarray:
    """Real part of integrate_line for each T, accumulated segment by segment."""
    config = config or QuadratureConfig()
    _check_abscissa(fid, c)
    T_grid = np.asarray(T_grid, dtype=float)
    if np.any(T_grid <= 0):
        raise DomainError("T values must be positive")
    order = np.argsort(T_grid, kind="stable")
    out = np.empty(T_grid.shape)
    acc = 0j
    prev = 0.0
    for i in order:
        T = T_grid[i]
        if T > prev:
            acc += _vertical(fid, x, c, prev, T, config).value + _vertical(fid, x, c, -T, -prev, config).value
            prev = T
        out[i] = acc.real
    return out


def integrate_rectangle(fid, x: float, rect: RectangleContour, config: QuadratureConfig | None = None) -> SideIntegrals:
    """Counterclockwise: right side up, top leftward, left side down, bottom rightward."""
    config = config or QuadratureConfig()
    _check_abscissa(fid, rect.c)
    c, a, T = rect.c, rect.a, rect.T
    I1 = _vertical(fid, x, c, -T, T, config)
    I2 = _horizontal(fid, x, T, c, a, config)
    I3 = _vertical(fid, x, a, T, -T, config)
    I4 = _horizontal(fid, x, -T, a, c, config)
    err = I1.error_estimate + I2.error_estimate + I3.error_estimate + I4.error_estimate
    return SideIntegrals(I1.value, I2.value, I3.value, I4.value, err)


# poles inside a rectangle ------------------------------------------------------------


def _pole_sites(fid, rect: RectangleContour, catalog: ZeroCatalog, k_max: int = 200):
    """All candidate pole sites near the rectangle: (kind, site, payload)."""
    desc = descriptor(fid)
    sites = [("smooth", complex(s), None) for s in desc.smooth_sites()]
    for k in range(1, k_max + 1):
        s = desc.real_zero_site(k)
        if s < rect.a - 1:
            break
        sites.append(("real", complex(s), k))
    # denominator factors vanishing at trivial zeros: removable for some ids, but the
    # integrand cannot be evaluated there, so the contour must avoid them as well
    for f in desc.dirichlet_factors.factors:
        if f.power < 0 and f.derivative == 0:
            m = 1
            while (s := (-2 * m - f.beta) / f.alpha) >= rect.a - 1:
                if s <= rect.c:
                    sites.append(("removable", complex(s), None))
                m += 1
    for zs in desc.zero_sites:
        limit = (rect.T + 1) / abs(zs.scale)
        t = catalog.ordinates[catalog.ordinates < limit]
        for i, tk in enumerate(t):
            sites.append(("zero", complex(zs.at(0.5 + 1j * tk)), (zs, i)))
    return sites


def nudge_rectangle(fid, rect: RectangleContour, catalog: ZeroCatalog | None = None,
                    clearance: float = 1e-3, step: float = 0.05) -> RectangleContour:
    """Move sides outward by ``step`` until no pole site is within ``clearance``."""
    catalog = catalog or default_zeta_catalog()
    c, a, T = rect.c, rect.a, rect.T
    notes = list(rect.nudges)
    for _ in range(100):
        sites = np.array([s for _, s, _ in _pole_sites(fid, RectangleContour(c, a, T), catalog)])
        sites = np.concatenate([sites, sites.conj()])
        in_t = np.abs(sites.imag) <= T + clearance
        in_s = (sites.real >= a - clearance) & (sites.real <= c + clearance)
        moved = False
        if np.any(in_t & (np.abs(sites.real - a) < clearance)):
            notes.append(f"a {a:g} -> {a - step:g}")
            a -= step
            moved = True
        if np.any(in_t & (np.abs(sites.real - c) < clearance)):
            notes.append(f"c {c:g} -> {c + step:g}")
            c += step
            moved = True
        if np.any(in_s & (np.abs(np.abs(sites.imag) - T) < clearance)):
            notes.append(f"T {T:g} -> {T + step:g}")
            T += step
            moved = True
        if not moved:
            return RectangleContour(c, a, T, tuple(notes))
    raise ContractError("could not clear the rectangle sides of pole sites")


@dataclass(frozen=True)
class ResidueComparison:
    rectangle: RectangleContour
    sides: SideIntegrals
    residue_sum: float
    difference: float
    tolerance: float
    enclosed: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.difference <= self.tolerance

    @property
    def contour_total(self) -> complex:
        return self.sides.total


def residue_sum_inside(fid, x: float, rect: RectangleContour, catalog: ZeroCatalog | None = None,
                       clearance: float = 1e-3) -> tuple[float, tuple[str, ...]]:
    """Sum of residues of F(s) x^s / s inside the rectangle (conjugates included)."""
    catalog = catalog or default_zeta_catalog()
    desc = descriptor(fid)
    total = 0.0
    names: list[str] = []
    sites = _pole_sites(fid, rect, catalog)
    for _, s, _ in sites:
        for v in (s, s.conjugate()):
            if abs(v.real - rect.a) < clearance or abs(v.real - rect.c) < clearance or (
                abs(abs(v.imag) - rect.T) < clearance and rect.a <= v.real <= rect.c
            ):
                raise ContractError(f"pole site {v} within {clearance} of the rectangle boundary")
    lx = math.log(x)
    for kind, s, payload in sites:
        if kind == "smooth" and rect.contains(s):
            total += sum(t.coefficient * x**t.x_exponent * lx**t.log_power
                         for t in desc.smooth_terms if t.x_exponent == s.real)
            names.append(f"s={s.real:g}")
        elif kind == "real" and rect.contains(s) and desc.real_zero_behavior != "vanishes":
            for site, coeffs in real_zero_coefficients(fid, payload):
                if site == s.real:
                    total += x**site * sum(cj * lx**j for j, cj in enumerate(coeffs))
            names.append(f"trivial k={payload} (s={s.real:g})")
    # complex zeros: each site family is masked on its own
    t = catalog.ordinates
    limit = (rect.T + 1) / min(abs(z.scale) for z in desc.zero_sites)
    t = t[t < limit]
    if t.size:
        parts = zero_term_coefficients(fid, 0.5 + 1j * t)
        for site, coeffs in parts:
            inside = rect.contains(site)
            if inside.any():
                v = eval_log_terms(site[inside], [c_[inside] for c_ in coeffs], np.array([x]))[:, 0]
                total += float(2 * v.real.sum())
                names.append(f"{int(inside.sum())} zero pairs at sites like {complex(site[inside][0]):.4g}")
    return total, tuple(names)


def residue_vs_rectangle(fid, x: float, rect: RectangleContour, catalog: ZeroCatalog | None = None,
                         config: QuadratureConfig | None = None, tolerance: float | None = None,
                         nudge: bool = True) -> ResidueComparison:
    catalog = catalog or default_zeta_catalog()
    config = config or QuadratureConfig()
    if nudge:
        rect = nudge_rectangle(fid, rect, catalog)
    res, names = residue_sum_inside(fid, x, rect, catalog)
    sides = integrate_rectangle(fid, x, rect, config)
    if tolerance is None:
        tolerance = 1e-6 * max(1.0, abs(res)) + 10 * sides.error_estimate
    return ResidueComparison(rect, sides, res, abs(sides.total - res), tolerance, names)
