"""Hilbert symbols over Q and the Brauer classes of quaternion algebras (a, b)."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import isprime, legendre_symbol, primefactors

from .abelian_fields import RATIONALS
from .brauer import CsaClass
from .cyclic_rationals import HALF

INFINITY = "inf"


def _check_args(a: int, b: int) -> None:
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")


def _place(v):
    if v in (INFINITY, "oo", "∞", None) or (isinstance(v, float) and v == float("inf")):
        return INFINITY
    p = int(v)
    if not isprime(p):
        raise ValueError(f"{v!r} is not a place of Q")
    return p


def valuation(n: int, p: int) -> int:
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def hilbert_symbol(a: int, b: int, v) -> int:
    """(a, b)_v in {+1, -1} for nonzero integers a, b and a place v of Q.

    ``v`` is a prime or ``"inf"``.
    """
    _check_args(a, b)
    v = _place(v)
    if v == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = v
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = a // p**alpha, b // p**beta
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omega = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre_symbol(u % p, p) ** beta * legendre_symbol(w % p, p) ** alpha


def ramified_places(a: int, b: int) -> list:
    """Places of Q where (a, b) does not split, primes first then ``"inf"``."""
    _check_args(a, b)
    candidates = sorted({2, *primefactors(a), *primefactors(b)})
    out = [p for p in candidates if hilbert_symbol(a, b, p) == -1]
    if hilbert_symbol(a, b, INFINITY) == -1:
        out.append(INFINITY)
    return out


def quaternion_class(a: int, b: int) -> CsaClass:
    """Brauer class of the quaternion algebra (a, b) over Q."""
    inv = {str(v): HALF for v in ramified_places(a, b)}
    return CsaClass(RATIONALS, {RATIONALS.place(k): x for k, x in inv.items()})


def _strip_squares(n: int, p: int) -> int:
    while n % (p * p) == 0:
        n //= p * p
    return n


def local_solubility_oracle(a: int, b: int, v, precision: int | None = None) -> int:
    """Decide solubility of z^2 = a x^2 + b y^2 over Q_v by exhaustive search.

    Independent of the closed-form symbol.  At a prime p, primitive solutions
    are lifted level by level modulo p, p^2, ..., p^k in each affine chart.  A
    point is accepted once Hensel's lemma certifies it: some partial
    derivative has valuation d with f = 0 mod p^(2d+1) and 2d+1 <= level.
    Default precision is ``4 + v_p(4ab)`` after removing square factors p^2.
    """
    _check_args(a, b)
    v = _place(v)
    if v == INFINITY:
        # z^2 = a x^2 + b y^2 has a real nonzero solution unless a, b < 0
        return -1 if a < 0 and b < 0 else 1
    p = v
    a, b = _strip_squares(a, p), _strip_squares(b, p)
    if precision is None:
        precision = 4 + valuation(4 * a * b, p)
    return _oracle(a, b, p, precision)


def _val_mod(n: int, p: int, k: int) -> int:
    """p-adic valuation of n known modulo p^k (capped at k)."""
    n %= p**k
    if n == 0:
        return k
    return valuation(n, p)


@lru_cache(maxsize=None)
def _oracle(a: int, b: int, p: int, k: int) -> int:
    # f(x, y, z) = z^2 - a x^2 - b y^2; one coordinate of a primitive
    # solution is a unit, and scaling by its inverse makes it 1
    def f(x, y, z):
        return z * z - a * x * x - b * y * y

    def grad(x, y, z):
        return (-2 * a * x, -2 * b * y, 2 * z)

    def certified(pt, level):
        val_f = _val_mod(f(*pt), p, level)
        for g in grad(*pt):
            d = _val_mod(g, p, level)
            if 2 * d + 1 <= level and val_f >= 2 * d + 1:
                return True
        return False

    charts = [
        lambda s, t: (s, t, 1),
        lambda s, t: (1, s, t),
        lambda s, t: (s, 1, t),
    ]
    for chart in charts:
        level_set = []
        for s, t in product(range(p), repeat=2):
            pt = chart(s, t)
            if f(*pt) % p == 0:
                if certified(pt, 1):
                    return 1
                level_set.append((s, t))
        q = p
        for level in range(2, k + 1):
            nxt = []
            for s, t in level_set:
                for i, j in product(range(p), repeat=2):
                    s2, t2 = s + i * q, t + j * q
                    pt = chart(s2, t2)
                    if f(*pt) % (q * p) == 0:
                        if certified(pt, level):
                            return 1
                        nxt.append((s2, t2))
            level_set = nxt
            q *= p
            if not level_set:
                break
    return -1
