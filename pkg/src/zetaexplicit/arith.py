"""Arithmetic functions and their summatory step functions.

Tables are built from a smallest-prime-factor sieve; multiplicative functions
are assembled from their prime-power values in a few vectorised rounds (one
per distinct prime factor).  Single values use trial division, which gives an
independent route for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DomainError

INT64_SAFE = 2**62


class ArithmeticFunctionId(str, Enum):
    LAMBDA_VON_MANGOLDT = "Lambda_vonMangoldt"
    MU = "Mu"
    SQUAREFREE_INDICATOR = "SquarefreeIndicator"
    PHI = "Phi"
    LIOUVILLE = "Liouville"
    TWO_POW_NU = "TwoPowNu"
    SIGMA_OF_SQUARE = "SigmaOfSquare"
    SIGMA_SQUARED = "SigmaSquared"
    TAU_OF_SQUARE = "TauOfSquare"
    TAU_SQUARED = "TauSquared"
    SIGMA_TAU = "SigmaTau"
    LIOUVILLE_TAU = "LiouvilleTau"
    LIOUVILLE_TWO_POW_NU = "LiouvilleTwoPowNu"
    LIOUVILLE_TAU_OF_SQUARE = "LiouvilleTauOfSquare"
    LIOUVILLE_TAU_SQUARED = "LiouvilleTauSquared"
    LIOUVILLE_SIGMA = "LiouvilleSigma"
    LIOUVILLE_SIGMA_SQUARED = "LiouvilleSigmaSquared"
    LIOUVILLE_SIGMA_TAU = "LiouvilleSigmaTau"
    GCD_SUM = "GcdSum"
    SQUARE_FULL_INDICATOR = "SquareFullIndicator"


AFI = ArithmeticFunctionId

ALIASES = {
    "psi": AFI.LAMBDA_VON_MANGOLDT,
    "lambda": AFI.LAMBDA_VON_MANGOLDT,
    "mertens": AFI.MU,
    "mu": AFI.MU,
    "squarefree": AFI.SQUAREFREE_INDICATOR,
    "phi": AFI.PHI,
    "totient": AFI.PHI,
    "liouville": AFI.LIOUVILLE,
    "two-pow-nu": AFI.TWO_POW_NU,
    "sigma-of-square": AFI.SIGMA_OF_SQUARE,
    "sigma-squared": AFI.SIGMA_SQUARED,
    "tau-of-square": AFI.TAU_OF_SQUARE,
    "tau-squared": AFI.TAU_SQUARED,
    "sigma-tau": AFI.SIGMA_TAU,
    "liouville-tau": AFI.LIOUVILLE_TAU,
    "liouville-two-pow-nu": AFI.LIOUVILLE_TWO_POW_NU,
    "liouville-tau-of-square": AFI.LIOUVILLE_TAU_OF_SQUARE,
    "liouville-tau-squared": AFI.LIOUVILLE_TAU_SQUARED,
    "liouville-sigma": AFI.LIOUVILLE_SIGMA,
    "liouville-sigma-squared": AFI.LIOUVILLE_SIGMA_SQUARED,
    "liouville-sigma-tau": AFI.LIOUVILLE_SIGMA_TAU,
    "gcd-sum": AFI.GCD_SUM,
    "square-full": AFI.SQUARE_FULL_INDICATOR,
}


def resolve_id(name) -> ArithmeticFunctionId:
    """Accept an enum member, its value, or a CLI alias."""
    if isinstance(name, ArithmeticFunctionId):
        return name
    key = str(name)
    if key in ALIASES:
        return ALIASES[key]
    try:
        return ArithmeticFunctionId(key)
    except ValueError:
        for member in ArithmeticFunctionId:
            if member.name.lower() == key.lower().replace("-", "_"):
                return member
    raise DomainError(f"unknown arithmetic function id {name!r}")


# prime-power values --------------------------------------------------------------
# Each rule maps arrays (p, e, pe = p**e) to f(p**e).  Integer-valued throughout.


def _sigma(p, e, pe):
    return (pe * p - 1) // (p - 1)


def _sigma_sq(p, e, pe):
    # sigma(p^{2e}) = sigma(p^e) + p^{e+1} sigma(p^{e-1})
    return _sigma(p, e, pe) + pe * p * ((pe - 1) // (p - 1))


def _sign(e):
    return 1 - 2 * (e & 1)


_RULES = {
    AFI.MU: lambda p, e, pe: np.where(e == 1, -1, 0),
    AFI.SQUAREFREE_INDICATOR: lambda p, e, pe: np.where(e == 1, 1, 0),
    AFI.PHI: lambda p, e, pe: (pe // p) * (p - 1),
    AFI.LIOUVILLE: lambda p, e, pe: _sign(e),
    AFI.TWO_POW_NU: lambda p, e, pe: np.full_like(e, 2),
    AFI.SIGMA_OF_SQUARE: _sigma_sq,
    AFI.SIGMA_SQUARED: lambda p, e, pe: _sigma(p, e, pe) ** 2,
    AFI.TAU_OF_SQUARE: lambda p, e, pe: 2 * e + 1,
    AFI.TAU_SQUARED: lambda p, e, pe: (e + 1) ** 2,
    AFI.SIGMA_TAU: lambda p, e, pe: _sigma(p, e, pe) * (e + 1),
    AFI.LIOUVILLE_TAU: lambda p, e, pe: _sign(e) * (e + 1),
    AFI.LIOUVILLE_TWO_POW_NU: lambda p, e, pe: _sign(e) * 2,
    AFI.LIOUVILLE_TAU_OF_SQUARE: lambda p, e, pe: _sign(e) * (2 * e + 1),
    AFI.LIOUVILLE_TAU_SQUARED: lambda p, e, pe: _sign(e) * (e + 1) ** 2,
    AFI.LIOUVILLE_SIGMA: lambda p, e, pe: _sign(e) * _sigma(p, e, pe),
    AFI.LIOUVILLE_SIGMA_SQUARED: lambda p, e, pe: _sign(e) * _sigma(p, e, pe) ** 2,
    AFI.LIOUVILLE_SIGMA_TAU: lambda p, e, pe: _sign(e) * _sigma(p, e, pe) * (e + 1),
    AFI.GCD_SUM: lambda p, e, pe: (e + 1) * pe - e * (pe // p),
    AFI.SQUARE_FULL_INDICATOR: lambda p, e, pe: np.where(e >= 2, 1, 0),
}


# sieve ------------------------------------------------------------------------------


@lru_cache(maxsize=4)
def spf_sieve(n_max: int) -> np.ndarray:
    """Smallest prime factor of every n <= n_max (spf[0] = spf[1] = 0)."""
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, math.isqrt(n_max) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    idx = np.arange(n_max + 1, dtype=np.int64)
    mask = spf == 0
    spf[mask] = idx[mask]
    spf[:2] = 0
    return spf


@lru_cache(maxsize=4)
def _decomposition(n_max: int):
    """For n >= 2: smallest prime p, its exponent e, p**e and the cofactor."""
    spf = spf_sieve(n_max)
    n = np.arange(n_max + 1, dtype=np.int64)
    p = spf.copy()
    p[:2] = 2  # placeholder, never read for n < 2
    rest = n.copy()
    rest[0] = 1
    e = np.zeros_like(n)
    pe = np.ones_like(n)
    active = n >= 2
    while active.any():
        idx = np.nonzero(active)[0]
        pi = p[idx]
        divisible = rest[idx] % pi == 0
        keep = idx[divisible]
        rest[keep] //= p[keep]
        e[keep] += 1
        pe[keep] *= p[keep]
        active[idx[~divisible]] = False
    return p, e, pe, rest


@lru_cache(maxsize=64)
def _table_cached(fid: ArithmeticFunctionId, n_max: int) -> np.ndarray:
    p, e, pe, rest = _decomposition(n_max)
    if fid is AFI.LAMBDA_VON_MANGOLDT:
        out = np.zeros(n_max + 1)
        pp = (rest == 1) & (np.arange(n_max + 1) >= 2)
        out[pp] = np.log(p[pp].astype(float))
        return out
    local = np.asarray(_RULES[fid](p, e, pe), dtype=np.int64)
    out = np.zeros(n_max + 1, dtype=np.int64)
    if n_max >= 1:
        out[1] = 1
    # f(n) = f(p^e) f(rest); rest has fewer distinct primes, so rounds converge
    pending = np.arange(2, n_max + 1)
    done = np.zeros(n_max + 1, dtype=bool)
    done[:2] = True
    while pending.size:
        ready = done[rest[pending]]
        idx = pending[ready]
        out[idx] = local[idx] * out[rest[idx]]
        done[idx] = True
        pending = pending[~ready]
    return out


def arith_table(fid, n_max: int) -> np.ndarray:
    """a(0..n_max) as an array; a(0) = 0.  Integer dtype except for Lambda."""
    fid = resolve_id(fid)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    t = _table_cached(fid, int(n_max))
    t.flags.writeable = False
    return t


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise DomainError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def arith_value(fid, n: int):
    """a(n) by trial division."""
    fid = resolve_id(fid)
    if int(n) != n or n <= 0:
        raise DomainError("n must be a positive integer")
    n = int(n)
    fac = factorize(n)
    if fid is AFI.LAMBDA_VON_MANGOLDT:
        return math.log(next(iter(fac))) if len(fac) == 1 else 0.0
    value = 1
    rule = _RULES[fid]
    for p, e in fac.items():
        value *= int(rule(np.int64(p), np.int64(e), np.int64(p**e)))
    return value


# summatory functions -----------------------------------------------------------------


@dataclass(frozen=True)
class SummatoryTable:
    """Cumulative sums A(0..x_max) of one arithmetic function."""

    fid: ArithmeticFunctionId
    x_max: int
    values: np.ndarray  # values[n] = sum_{k <= n} a(k)

    def exact(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x > self.x_max):
            raise DomainError("x beyond table range")
        idx = np.floor(np.maximum(x, 0)).astype(np.int64)
        return self.values[idx]

    def midpoint(self, x):
        x = np.asarray(x, dtype=float)
        out = np.asarray(self.exact(x), dtype=float)
        integer = (x == np.floor(x)) & (x >= 1)
        if integer.any():
            k = x[integer].astype(np.int64)
            jump = self.values[k] - self.values[k - 1]
            out = out.copy()
            out[integer] -= np.asarray(jump, dtype=float) / 2
        return out if out.ndim else float(out)


@lru_cache(maxsize=64)
def summatory_table(fid, x_max: int) -> SummatoryTable:
    fid = resolve_id(fid)
    x_max = max(1, int(x_max))
    a = arith_table(fid, x_max)
    if fid is AFI.LAMBDA_VON_MANGOLDT:
        cum = np.cumsum(a.astype(np.longdouble)).astype(float)
    elif int(np.abs(a).max()) * (x_max + 1) < INT64_SAFE:
        cum = np.cumsum(a)
    else:
        cum = np.cumsum(a.astype(object))
    return SummatoryTable(fid, x_max, cum)


def summatory_exact(fid, x: float):
    """A(x) = sum_{n <= x} a(n) (x is floored; exact integers except Lambda)."""
    if x < 0:
        raise DomainError("x must be >= 0")
    fid = resolve_id(fid)
    if x < 1:
        return 0.0 if fid is AFI.LAMBDA_VON_MANGOLDT else 0
    v = summatory_table(fid, int(math.floor(x))).values[int(math.floor(x))]
    return float(v) if fid is AFI.LAMBDA_VON_MANGOLDT else int(v)


def summatory_midpoint(fid, x: float) -> float:
    """A(x) with the half-jump convention at integers, as in Perron's formula."""
    fid = resolve_id(fid)
    a = float(summatory_exact(fid, x))
    if x >= 1 and x == math.floor(x):
        a -= float(arith_value(fid, int(x))) / 2
    return a


def psi_exact_log(x: int) -> float:
    """psi(x) as log lcm(1..x), an independent route for Lambda sums."""
    return math.log(math.lcm(*range(1, int(x) + 1))) if x >= 2 else 0.0


def prime_count(x: float) -> int:
    if x < 2:
        return 0
    n = int(math.floor(x))
    spf = spf_sieve(n)
    return int(np.count_nonzero(spf[2:] == np.arange(2, n + 1)))


def primes_up_to(n: int) -> np.ndarray:
    spf = spf_sieve(max(2, int(n)))
    idx = np.arange(spf.size)
    return idx[(idx >= 2) & (spf == idx)]


def prime_count_in_ap(x: float, q: int, a: int) -> int:
    if q < 1:
        raise DomainError("modulus must be positive")
    if math.gcd(a, q) != 1:
        raise DomainError(f"gcd({a}, {q}) != 1")
    if x < 2:
        return 0
    p = primes_up_to(int(math.floor(x)))
    return int(np.count_nonzero(p % q == a % q))


def prime_count_midpoint(x: float) -> float:
    c = float(prime_count(x))
    if x >= 2 and x == math.floor(x) and prime_count(x) != prime_count(x - 1):
        c -= 0.5
    return c
