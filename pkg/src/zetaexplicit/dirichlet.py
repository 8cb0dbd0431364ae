"""Dirichlet characters and the L-zero approximation to pi(x; q, a).

Characters are built from the decomposition of the unit group (Z/q)^* into
cyclic factors, one generator per factor (the smallest primitive root of an
odd prime power; 3 for 4; -1 and 5 for 2^e, e >= 3), lifted by CRT.  A
character is stored as an integer exponent table: chi(a) = exp(2 pi i m_a / L).
Index 0 is the principal character; for cyclic groups index k sends the
generator to exp(2 pi i k / phi(q)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import factorize, prime_count
from .errors import CapacityError, DomainError
from .zeros import ZeroCatalog, default_l_catalog


def _primitive_root(m: int, p: int) -> int:
    """Smallest primitive root modulo m = p^e (p odd)."""
    phi = m // p * (p - 1)
    factors = list(factorize(phi))
    for g in range(2, m):
        if g % p and all(pow(g, phi // r, m) != 1 for r in factors):
            return g
    raise AssertionError("no primitive root")


def _components(q: int) -> list[tuple[int, int, int]]:
    """(modulus of the prime-power part, generator mod that part, order)."""
    out = []
    for p, e in sorted(factorize(q).items()):
        m = p**e
        if p == 2:
            if e == 2:
                out.append((m, 3, 2))
            elif e >= 3:
                out.append((m, m - 1, 2))
                out.append((m, 5, 2 ** (e - 2)))
        else:
            out.append((m, _primitive_root(m, p), m // p * (p - 1)))
    return out


def _crt_lift(q: int, m: int, g: int) -> int:
    """x = g mod m, x = 1 mod q/m."""
    r = q // m
    return (g * r * pow(r, -1, m) + m * pow(m, -1, r)) % q if r > 1 else g % q


@dataclass(frozen=True)
class CharacterTable:
    q: int
    orders: tuple[int, ...]
    generators: tuple[int, ...]
    L: int  # common denominator of the exponents
    exponents: np.ndarray  # (count, q) ints in [0, L), -1 off the units

    def __len__(self) -> int:
        return self.exponents.shape[0]

    @property
    def phi(self) -> int:
        return int(np.count_nonzero(self.exponents[0] >= 0))

    def values(self, index: int) -> np.ndarray:
        e = self.exponents[index]
        m = np.where(e >= 0, e, 0)
        v = np.exp(2j * np.pi * m / self.L)
        # quarter turns are snapped to exact 1, i, -1, -i
        quarter = (4 * m) % self.L == 0
        v = np.where(quarter, np.array([1, 1j, -1, -1j])[(4 * m // self.L) % 4], v)
        return np.where(e >= 0, v, 0)

    @property
    def characters(self) -> list[np.ndarray]:
        return [self.values(i) for i in range(len(self))]

    def is_principal(self, index: int) -> bool:
        e = self.exponents[index]
        return bool(np.all(e[e >= 0] == 0))

    def is_real(self, index: int) -> bool:
        e = self.exponents[index]
        return bool(np.all((2 * e[e >= 0]) % self.L == 0))

    def conjugate_index(self, index: int) -> int:
        e = self.exponents[index]
        target = np.where(e >= 0, (-e) % self.L, -1)
        for j in range(len(self)):
            if np.array_equal(self.exponents[j], target):
                return j
        raise AssertionError("conjugate missing")

    def conductor(self, index: int) -> int:
        v = self.values(index)
        for f in sorted(d for d in range(1, self.q + 1) if self.q % d == 0):
            seen: dict[int, complex] = {}
            ok = True
            for a in range(self.q):
                if v[a] == 0:
                    continue
                r = a % f
                if r in seen and abs(seen[r] - v[a]) > 1e-12:
                    ok = False
                    break
                seen[r] = v[a]
            if ok:
                return f
        return self.q


@lru_cache(maxsize=None)
def characters_mod(q: int) -> CharacterTable:
    if q < 1:
        raise DomainError("q must be >= 1")
    comps = _components(q)
    orders = tuple(o for _, _, o in comps)
    gens = tuple(_crt_lift(q, m, g) for m, g, _ in comps)
    L = math.lcm(*orders) if orders else 1
    # discrete logs: walk the product group
    logs = -np.ones((q, len(comps)), dtype=np.int64)
    logs[1 % q] = 0
    for digits in np.ndindex(*orders) if orders else [()]:
        a = 1 % q
        for g, k in zip(gens, digits):
            a = a * pow(g, int(k), q) % q
        logs[a] = digits
    count = int(np.prod(orders)) if orders else 1
    exps = -np.ones((count, q), dtype=np.int64)
    unit = logs[:, 0] >= 0 if comps else np.array([math.gcd(a, q) == 1 for a in range(q)])
    for idx in range(count):
        # mixed radix, first component least significant
        j, rem = [], idx
        for o in orders:
            j.append(rem % o)
            rem //= o
        m = np.zeros(q, dtype=np.int64)
        for i, o in enumerate(orders):
            m += logs[:, i] * j[i] * (L // o)
        exps[idx] = np.where(unit, m % L, -1)
    if not comps:  # q = 1, 2: only the principal character
        exps[0] = np.where(unit, 0, -1)
    return CharacterTable(q, orders, gens, L, exps)


def c_bias(q: int, a: int) -> int:
    """-1 + number of square roots of a modulo q."""
    if math.gcd(q, a) != 1:
        raise DomainError("need gcd(q, a) = 1")
    b = np.arange(q, dtype=np.int64)
    return -1 + int(np.count_nonzero((b * b - a) % q == 0))


def e_term(x, l_catalog: ZeroCatalog, N: int):
    """sum over N positive and N negative ordinates t of x^{it} / (1/2 + it)."""
    x_arr = np.asarray(x, dtype=float)
    if N == 0:
        return 0j if x_arr.ndim == 0 else np.zeros(x_arr.shape, dtype=complex)
    if N > len(l_catalog.ordinates) or N > len(l_catalog.negative_ordinates):
        raise CapacityError(f"need {N} zeros of each sign, catalog has "
                            f"{len(l_catalog.ordinates)}/{len(l_catalog.negative_ordinates)}")
    t = l_catalog.signed_ordinates(N)
    terms = np.exp(1j * np.multiply.outer(np.log(x_arr), t)) / (0.5 + 1j * t)
    v = terms.sum(axis=-1)
    return complex(v) if x_arr.ndim == 0 else v


_OFFSETS = {3: {1: -0.5, 2: -0.5}, 4: {1: -0.5, 3: -0.5}, 10: {1: -0.25, 3: 0.0, 7: -0.75, 9: -1.0}}


@dataclass(frozen=True)
class APApproxParams:
    q: int
    a: int
    N: int = 0
    offset: float | None = None  # None: the default empirical table

    def __post_init__(self):
        if math.gcd(self.q, self.a) != 1:
            raise DomainError("need gcd(q, a) = 1")

    @property
    def resolved_offset(self) -> float:
        if self.offset is not None:
            return self.offset
        return _OFFSETS.get(self.q, {}).get(self.a % self.q, 0.0)


def default_catalogs(q: int) -> dict[int, ZeroCatalog]:
    table = characters_mod(q)
    return {i: default_l_catalog(q, i) for i in range(1, len(table))}


def approximate_pi_ap(params: APApproxParams, x, catalogs: dict[int, ZeroCatalog] | None = None):
    """pi(x)/phi(q) + E(x, q, a) sqrt(x) / (phi(q) log x) + offset."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 3):
        raise DomainError("x must be >= 3")
    q, a = params.q, params.a % params.q
    table = characters_mod(q)
    phi = table.phi
    E = np.full(x_arr.shape, -float(c_bias(q, a)), dtype=complex)
    if params.N > 0:
        catalogs = catalogs if catalogs is not None else default_catalogs(q)
        for i in range(len(table)):
            if table.is_principal(i):
                continue
            if i not in catalogs:
                raise CapacityError(f"no zero catalog for character {i} mod {q}")
            E -= np.conj(table.values(i)[a]) * e_term(x_arr, catalogs[i], params.N)
    pi = np.array([prime_count(v) for v in x_arr], dtype=float)
    out = pi / phi + E.real * np.sqrt(x_arr) / (phi * np.log(x_arr)) + params.resolved_offset
    return float(out[0]) if np.ndim(x) == 0 else out
