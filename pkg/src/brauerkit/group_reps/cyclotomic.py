"""Exact elements of Q(zeta_e) in the power basis 1, zeta, ..., zeta^(phi(e)-1)."""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import cyclotomic_poly, totient
from sympy.abc import x as _x


@lru_cache(maxsize=None)
def _phi_poly(e: int) -> tuple[int, ...]:
    """Coefficients c_0..c_{phi-1} with zeta^phi = -sum c_i zeta^i."""
    coeffs = [int(c) for c in reversed(cyclotomic_poly(e, _x, polys=True).all_coeffs())]
    return tuple(coeffs[:-1])


@lru_cache(maxsize=None)
def reduction_matrix(e: int) -> np.ndarray:
    """Row k holds the power-basis coordinates of zeta_e^k, for 0 <= k < e."""
    phi = int(totient(e))
    low = _phi_poly(e)
    rows = np.zeros((e, phi), dtype=np.int64)
    for k in range(min(e, phi)):
        rows[k, k] = 1
    for k in range(phi, e):
        prev = rows[k - 1]
        # multiply by zeta: shift, then fold the top coefficient back down
        top = prev[-1]
        cur = np.zeros(phi, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur -= top * np.array(low, dtype=np.int64)
        rows[k] = cur
    rows.setflags(write=False)
    return rows


def _reduce(e: int, group_ring) -> tuple:
    """Collapse a vector indexed by exponents mod e into power-basis coordinates."""
    R = reduction_matrix(e)
    phi = R.shape[1]
    out = [0] * phi
    for k, c in enumerate(group_ring):
        if c:
            row = R[k]
            for i in range(phi):
                if row[i]:
                    out[i] += c * int(row[i])
    return tuple(out)


class CyclotomicNumber:
    """An exact element of Q(zeta_modulus)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        phi = int(totient(modulus))
        coeffs = tuple(_simplify(c) for c in coeffs)
        if len(coeffs) < phi:
            coeffs += (0,) * (phi - len(coeffs))
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients for Q(zeta_{modulus}), got {len(coeffs)}")
        self.modulus = modulus
        self.coeffs = coeffs

    @classmethod
    def rational(cls, q, modulus: int = 1) -> CyclotomicNumber:
        return cls(modulus, (q,))

    @classmethod
    def root(cls, modulus: int, k: int = 1) -> CyclotomicNumber:
        """zeta_modulus ** k"""
        vec = [0] * modulus
        vec[k % modulus] = 1
        return cls(modulus, _reduce(modulus, vec))

    @classmethod
    def from_exponents(cls, modulus: int, multiplicities) -> CyclotomicNumber:
        """sum_k multiplicities[k] * zeta^k."""
        return cls(modulus, _reduce(modulus, _fold(modulus, multiplicities)))

    def embed(self, modulus: int) -> CyclotomicNumber:
        """The same number viewed in Q(zeta_modulus); requires self.modulus | modulus."""
        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise ValueError(f"Q(zeta_{self.modulus}) is not inside Q(zeta_{modulus})")
        step = modulus // self.modulus
        vec = [0] * modulus
        for i, c in enumerate(self.coeffs):
            vec[i * step] = c
        return CyclotomicNumber(modulus, _reduce(modulus, vec))

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other, self.modulus)
        if not isinstance(other, CyclotomicNumber):
            return None, None
        if other.modulus == self.modulus:
            return self, other
        m = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicNumber(a.modulus, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.modulus, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        e = a.modulus
        vec = [0] * e
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        vec[(i + j) % e] += x * y
        return CyclotomicNumber(e, _reduce(e, vec))

    __rmul__ = __mul__

    def __truediv__(self, q):
        if isinstance(q, (int, Fraction)):
            return CyclotomicNumber(self.modulus, tuple(Fraction(c) / q for c in self.coeffs))
        return NotImplemented

    def galois(self, b: int) -> CyclotomicNumber:
        """Apply zeta -> zeta^b (b a unit mod the modulus)."""
        e = self.modulus
        if gcd(b, e) != 1:
            raise ValueError(f"{b} is not a unit mod {e}")
        vec = [0] * e
        for i, c in enumerate(self.coeffs):
            vec[i * b % e] += c
        return CyclotomicNumber(e, _reduce(e, vec))

    def conjugate(self) -> CyclotomicNumber:
        return self.galois(-1)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.coeffs[0]))
        # equal numbers may carry different moduli, so hash the complex value
        z = complex(self)
        return hash((round(z.real, 9), round(z.imag, 9)))

    def __bool__(self):
        return any(self.coeffs)

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.modulus)
        return sum(complex(c) * z**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{self.modulus}" if i == 1 else f"z{self.modulus}^{i}")
            if i and c == 1:
                terms.append(mono)
            elif i and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"CyclotomicNumber({self.modulus}, {self.coeffs})"


def _simplify(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, (np.integer,)):
        return int(c)
    return c


def _fold(e: int, vec) -> list:
    out = [0] * e
    for k, c in enumerate(vec):
        out[k % e] += c
    return out


def as_cyclotomic(x, modulus: int = 1) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.rational(Fraction(x), modulus)
