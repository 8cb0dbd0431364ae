"""Truncated Taylor arithmetic ("jets"), vectorised over numpy arrays.

A :class:`Jet` of degree K stores coefficients ``c[0..K]`` of
``f(s0 + h) = sum_k c[k] h**k + O(h**(K+1))`` for every point ``s0`` of an
array.  Products, quotients and elementary functions propagate the
coefficients exactly, which gives analytic derivatives of anything built from
them: ``f^(k)(s0) = k! c[k]``.
"""

from __future__ import annotations

from math import factorial

import numpy as np


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=complex)

    # constructors -----------------------------------------------------------------
    @classmethod
    def variable(cls, s0, degree: int) -> "Jet":
        s0 = np.asarray(s0, dtype=complex)
        c = np.zeros((degree + 1,) + s0.shape, dtype=complex)
        c[0] = s0
        if degree >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value, degree: int, shape=()) -> "Jet":
        c = np.zeros((degree + 1,) + tuple(shape), dtype=complex)
        c[0] = value
        return cls(c)

    @property
    def degree(self) -> int:
        return self.c.shape[0] - 1

    @property
    def value(self) -> np.ndarray:
        return self.c[0]

    def derivative(self, k: int) -> np.ndarray:
        return factorial(k) * self.c[k]

    def derivatives(self) -> np.ndarray:
        f = np.array([factorial(k) for k in range(self.degree + 1)], dtype=float)
        return self.c * f.reshape((-1,) + (1,) * (self.c.ndim - 1))

    def truncate(self, degree: int) -> "Jet":
        return Jet(self.c[: degree + 1])

    def __getitem__(self, idx) -> "Jet":
        if not isinstance(idx, tuple):
            idx = (idx,)
        return Jet(self.c[(slice(None),) + idx])

    # arithmetic ---------------------------------------------------------------------
    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        c = np.zeros_like(self.c)
        c[0] = other
        return Jet(c)

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.c + other.c)
        c = self.c.copy()
        c[0] = c[0] + other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c * np.asarray(other))
        a, b = self.c, other.c
        K = min(a.shape[0], b.shape[0]) - 1
        shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
        out = np.zeros((K + 1,) + shape, dtype=complex)
        for k in range(K + 1):
            for i in range(k + 1):
                out[k] += a[i] * b[k - i]
        return Jet(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        a = self.c
        K = a.shape[0] - 1
        out = np.zeros_like(a)
        with np.errstate(divide="ignore", invalid="ignore"):
            inv0 = 1.0 / a[0]
        out[0] = inv0
        for k in range(1, K + 1):
            acc = np.zeros_like(a[0])
            for j in range(1, k + 1):
                acc += a[j] * out[k - j]
            out[k] = -acc * inv0
        return Jet(out)

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c / np.asarray(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n):
        if isinstance(n, (int, np.integer)) and n >= 0:
            out = Jet.constant(1.0, self.degree, self.c.shape[1:])
            base = self
            while n:
                if n & 1:
                    out = out * base
                base = base * base
                n >>= 1
            return out
        if isinstance(n, (int, np.integer)):
            return (self ** (-n)).reciprocal()
        return exp(log(self) * n)

    def shift_scale(self, scale: float) -> "Jet":
        """Jet of g(h) = f(scale*h), i.e. compose with s -> s0 + scale*h."""
        k = np.arange(self.degree + 1).reshape((-1,) + (1,) * (self.c.ndim - 1))
        return Jet(self.c * scale**k)


def exp(a: Jet) -> Jet:
    c = a.c
    K = c.shape[0] - 1
    out = np.zeros_like(c)
    out[0] = np.exp(c[0])
    for k in range(1, K + 1):
        acc = np.zeros_like(c[0])
        for j in range(1, k + 1):
            acc += j * c[j] * out[k - j]
        out[k] = acc / k
    return Jet(out)


def log(a: Jet) -> Jet:
    c = a.c
    K = c.shape[0] - 1
    out = np.zeros_like(c)
    out[0] = np.log(c[0])
    inv0 = 1.0 / c[0]
    for k in range(1, K + 1):
        acc = np.zeros_like(c[0])
        for j in range(1, k):
            acc += j * out[j] * c[k - j]
        out[k] = (c[k] - acc / k) * inv0
    return Jet(out)


def sincos(a: Jet) -> tuple[Jet, Jet]:
    c = a.c
    K = c.shape[0] - 1
    s = np.zeros_like(c)
    co = np.zeros_like(c)
    s[0] = np.sin(c[0])
    co[0] = np.cos(c[0])
    for k in range(1, K + 1):
        acc_s = np.zeros_like(c[0])
        acc_c = np.zeros_like(c[0])
        for j in range(1, k + 1):
            acc_s += j * c[j] * co[k - j]
            acc_c += j * c[j] * s[k - j]
        s[k] = acc_s / k
        co[k] = -acc_c / k
    return Jet(s), Jet(co)


def power_of_constant(base, a: Jet) -> Jet:
    """base**a for a positive real (or array) base."""
    return exp(a * np.log(np.asarray(base, dtype=complex)))
