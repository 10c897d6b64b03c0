"""Exact arithmetic in the ring Z[zeta, 1/2], zeta = e^{i*pi/4}.

Every element is (a0 + a1*zeta + a2*zeta^2 + a3*zeta^3) / 2^k with integer
coefficients and zeta^4 = -1 as the single reduction relation.  sqrt(2) is
zeta - zeta^3 and i is zeta^2, so all Clifford matrix entries live here.

The hot paths (matrix products during group enumeration) work on plain
5-tuples ``(a0, a1, a2, a3, k)`` via the module-level functions; the
``Cyclo8`` class wraps such a tuple for everyday use.
"""

from __future__ import annotations

import math
from functools import lru_cache

CTuple = tuple[int, int, int, int, int]

ZERO: CTuple = (0, 0, 0, 0, 0)
ONE: CTuple = (1, 0, 0, 0, 0)

_SQRT1_2 = math.sqrt(0.5)


def normalize(a0: int, a1: int, a2: int, a3: int, k: int) -> CTuple:
    """Cancel common factors of 2 so that k == 0 or some coefficient is odd."""
    if a0 == a1 == a2 == a3 == 0:
        return ZERO
    while k > 0 and not ((a0 | a1 | a2 | a3) & 1):
        a0 >>= 1
        a1 >>= 1
        a2 >>= 1
        a3 >>= 1
        k -= 1
    return (a0, a1, a2, a3, k)


def add(x: CTuple, y: CTuple) -> CTuple:
    xk, yk = x[4], y[4]
    if xk == yk:
        return normalize(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], xk)
    if xk < yk:
        s = 1 << (yk - xk)
        return normalize(x[0] * s + y[0], x[1] * s + y[1], x[2] * s + y[2], x[3] * s + y[3], yk)
    s = 1 << (xk - yk)
    return normalize(x[0] + y[0] * s, x[1] + y[1] * s, x[2] + y[2] * s, x[3] + y[3] * s, xk)


def neg(x: CTuple) -> CTuple:
    return (-x[0], -x[1], -x[2], -x[3], x[4])


def sub(x: CTuple, y: CTuple) -> CTuple:
    return add(x, neg(y))


def mul(x: CTuple, y: CTuple) -> CTuple:
    a0, a1, a2, a3, xk = x
    b0, b1, b2, b3, yk = y
    # convolution folded with zeta^4 = -1
    c0 = a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
    c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
    c2 = a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
    c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    return normalize(c0, c1, c2, c3, xk + yk)


def conj(x: CTuple) -> CTuple:
    """Complex conjugate: zeta -> zeta^{-1} = -zeta^3."""
    return (x[0], -x[3], -x[2], -x[1], x[4])


def zeta_pow(m: int) -> CTuple:
    """zeta^m for any integer m."""
    m %= 8
    sign = 1 if m < 4 else -1
    coeffs = [0, 0, 0, 0]
    coeffs[m % 4] = sign
    return (coeffs[0], coeffs[1], coeffs[2], coeffs[3], 0)


def to_complex(x: CTuple) -> complex:
    a0, a1, a2, a3, k = x
    re = a0 + (a1 - a3) * _SQRT1_2
    im = a2 + (a1 + a3) * _SQRT1_2
    scale = 0.5 ** k
    return complex(re * scale, im * scale)


def is_zero(x: CTuple) -> bool:
    return x[0] == 0 and x[1] == 0 and x[2] == 0 and x[3] == 0


def sort_key(x: CTuple) -> tuple[int, int, int, int, int]:
    """Total order (k, a0, a1, a2, a3) used for phase canonicalization."""
    return (x[4], x[0], x[1], x[2], x[3])


@lru_cache(maxsize=None)
def _zeta_table() -> tuple[CTuple, ...]:
    return tuple(zeta_pow(m) for m in range(8))


class Cyclo8:
    """An element of Z[zeta, 1/2] in normal form.

    Immutable and hashable; arithmetic is exact.
    """

    __slots__ = ("_t",)

    def __init__(self, a0: int = 0, a1: int = 0, a2: int = 0, a3: int = 0, k: int = 0) -> None:
        if k < 0:
            raise ValueError("denominator exponent must be non-negative")
        self._t = normalize(a0, a1, a2, a3, k)

    @classmethod
    def from_tuple(cls, t: CTuple) -> Cyclo8:
        obj = object.__new__(cls)
        obj._t = normalize(*t)
        return obj

    @classmethod
    def from_int(cls, x: int) -> Cyclo8:
        return cls(x, 0, 0, 0, 0)

    @classmethod
    def zeta(cls, m: int = 1) -> Cyclo8:
        return cls.from_tuple(zeta_pow(m))

    @classmethod
    def i(cls) -> Cyclo8:
        return cls(0, 0, 1, 0, 0)

    @classmethod
    def sqrt2(cls) -> Cyclo8:
        return cls(0, 1, 0, -1, 0)

    @classmethod
    def inv_sqrt2(cls) -> Cyclo8:
        return cls(0, 1, 0, -1, 1)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return self._t[:4]

    @property
    def k(self) -> int:
        return self._t[4]

    @property
    def tuple(self) -> CTuple:
        return self._t

    def __repr__(self) -> str:
        a0, a1, a2, a3, k = self._t
        return f"Cyclo8({a0}, {a1}, {a2}, {a3}, k={k})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclo8):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == normalize(other, 0, 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._t)

    def __bool__(self) -> bool:
        return not is_zero(self._t)

    def __add__(self, other: Cyclo8 | int) -> Cyclo8:
        return Cyclo8.from_tuple(add(self._t, _coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: Cyclo8 | int) -> Cyclo8:
        return Cyclo8.from_tuple(sub(self._t, _coerce(other)))

    def __rsub__(self, other: Cyclo8 | int) -> Cyclo8:
        return Cyclo8.from_tuple(sub(_coerce(other), self._t))

    def __neg__(self) -> Cyclo8:
        return Cyclo8.from_tuple(neg(self._t))

    def __mul__(self, other: Cyclo8 | int) -> Cyclo8:
        return Cyclo8.from_tuple(mul(self._t, _coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Cyclo8:
        if e < 0:
            raise ValueError("negative powers are not defined in this ring")
        acc = ONE
        base = self._t
        while e:
            if e & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            e >>= 1
        return Cyclo8.from_tuple(acc)

    def conjugate(self) -> Cyclo8:
        return Cyclo8.from_tuple(conj(self._t))

    def __complex__(self) -> complex:
        return to_complex(self._t)


def _coerce(x: Cyclo8 | int) -> CTuple:
    if isinstance(x, Cyclo8):
        return x.tuple
    if isinstance(x, int):
        return normalize(x, 0, 0, 0, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} into the ring")
