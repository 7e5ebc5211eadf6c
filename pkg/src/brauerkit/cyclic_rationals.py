"""Exact arithmetic in the additive group Q/Z.

Every local Hasse invariant lives here. Elements are stored in reduced form
``a/b`` with ``0 <= a < b`` so that equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational


class CyclicRational:
    """An element of Q/Z, kept as a reduced fraction in [0, 1)."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator=0, denominator=1):
        if isinstance(numerator, str):
            value = _parse(numerator)
            if denominator != 1:
                value = value / denominator
        else:
            value = Fraction(numerator, denominator)
        value -= value.numerator // value.denominator
        self._num = value.numerator
        self._den = value.denominator

    @classmethod
    def coerce(cls, x) -> CyclicRational:
        if isinstance(x, cls):
            return x
        if isinstance(x, (int, str, Rational)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as an element of Q/Z")

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def as_fraction(self) -> Fraction:
        return Fraction(self._num, self._den)

    def __add__(self, other):
        if not isinstance(other, CyclicRational):
            return NotImplemented
        return CyclicRational(self.as_fraction() + other.as_fraction())

    def __neg__(self):
        return CyclicRational(-self.as_fraction())

    def __sub__(self, other):
        if not isinstance(other, CyclicRational):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return CyclicRational(k * self._num, self._den)

    __rmul__ = __mul__

    def __bool__(self):
        return self._num != 0

    def __eq__(self, other):
        if isinstance(other, CyclicRational):
            return self._num == other._num and self._den == other._den
        if isinstance(other, int):
            return self._num == 0 and other == 0
        return NotImplemented

    def __hash__(self):
        return hash((CyclicRational, self._num, self._den))

    def __lt__(self, other):
        # ordering of representatives in [0, 1); used for canonical sorting only
        if not isinstance(other, CyclicRational):
            return NotImplemented
        return self.as_fraction() < other.as_fraction()

    def order(self) -> int:
        return self._den

    def __str__(self):
        return "0" if self._num == 0 else f"{self._num}/{self._den}"

    def __repr__(self):
        return f"CyclicRational({self._num}, {self._den})"


def _parse(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a fraction: {text!r}") from None


ZERO = CyclicRational(0)
HALF = CyclicRational(1, 2)


def add(a: CyclicRational, b: CyclicRational) -> CyclicRational:
    return a + b


def negate(a: CyclicRational) -> CyclicRational:
    return -a


def order(a: CyclicRational) -> int:
    """Smallest N >= 1 with N*a = 0; this is the reduced denominator."""
    return a.order()


def scalar_mul(k: int, a: CyclicRational) -> CyclicRational:
    return k * a


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def elements_of_order_dividing(n: int) -> list[CyclicRational]:
    """The subgroup (1/n)Z/Z, listed in increasing order."""
    return [CyclicRational(k, n) for k in range(n)]
