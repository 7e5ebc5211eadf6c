"""Finite groups given by multiplication tables, plus a few built-in families."""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from math import gcd

import numpy as np

MAX_ORDER = 256


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group on the elements 0..n-1 with ``table[a, b] = a*b``.

    The table is validated on construction: closure, a two-sided identity,
    inverses, and associativity (checked exhaustively, one row at a time).
    """

    def __init__(self, table, names=None, name: str | None = None, max_order: int = MAX_ORDER):
        T = np.asarray(table, dtype=np.int64)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise GroupError("not a group: table must be a non-empty square array")
        n = T.shape[0]
        if n > max_order:
            raise GroupError(f"group order {n} exceeds cap {max_order}")
        if T.min() < 0 or T.max() >= n:
            raise GroupError("not a group: entries out of range")
        self.table = T
        self.order = n
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        self.name = name or f"G{n}"
        self._validate()

    def _validate(self):
        T, n = self.table, self.order
        rng = np.arange(n)
        ids = [e for e in range(n) if np.array_equal(T[e], rng) and np.array_equal(T[:, e], rng)]
        if not ids:
            raise GroupError("not a group: no identity")
        self.identity = ids[0]
        inv = np.full(n, -1)
        for a in range(n):
            hits = np.nonzero(T[a] == self.identity)[0]
            if len(hits) != 1 or T[hits[0], a] != self.identity:
                raise GroupError(f"not a group: element {a} has no two-sided inverse")
            inv[a] = hits[0]
        self.inverse = inv
        for a in range(n):
            # (a*b)*c == a*(b*c) for all b, c
            if not np.array_equal(T[T[a]], T[a][T]):
                raise GroupError("not a group: multiplication is not associative")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        k %= self.element_orders[a]
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for a in range(self.order):
            x, k = a, 1
            while x != self.identity:
                x = self.table[x, a]
                k += 1
            orders[a] = k
        return orders

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in set(int(o) for o in self.element_orders):
            e = e * o // gcd(e, o)
        return e

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes ordered by their least element; the identity class comes first."""
        T, inv = self.table, self.inverse
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for a in sorted(range(self.order), key=lambda x: (x != self.identity, x)):
            if seen[a]:
                continue
            cls = np.unique(T[T[:, a], inv])  # g a g^-1 for all g
            seen[cls] = True
            classes.append(tuple(int(c) for c in cls))
        return classes

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.int64)
        for i, cls in enumerate(self.conjugacy_classes):
            out[list(cls)] = i
        return out

    @property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.conjugacy_classes]

    @property
    def class_reps(self) -> list[int]:
        return [c[0] for c in self.conjugacy_classes]

    def class_power_map(self, k: int) -> list[int]:
        """Index of the class of g^k for g in each class."""
        return [int(self.class_of[self.power(g, k)]) for g in self.class_reps]

    def inverse_class_map(self) -> list[int]:
        return [int(self.class_of[self.inverse[g]]) for g in self.class_reps]

    def involution_count(self) -> int:
        """Number of g with g^2 = 1 (the identity included)."""
        sq = self.table[np.arange(self.order), np.arange(self.order)]
        return int(np.sum(sq == self.identity))

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> FiniteGroup:
        G = cls(data["table"], names=data.get("names"), name=data.get("name"))
        if "order" in data and int(data["order"]) != G.order:
            raise GroupError("declared order does not match the table")
        return G

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def from_elements(elements, mul, names=None, name=None) -> FiniteGroup:
    """Build a group from a list of hashable elements and a multiplication."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            c = mul(a, b)
            if c not in index:
                raise GroupError("not a group: product outside the element list")
            table[i, j] = index[c]
    return FiniteGroup(table, names=names or [str(x) for x in elements], name=name)


def cyclic(n: int) -> FiniteGroup:
    """C_n on 0..n-1, element k standing for g^k."""
    T = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(T, names=[f"g^{k}" for k in range(n)], name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: r^k is element k, s r^k is element n + k."""
    elements = [(0, k) for k in range(n)] + [(1, k) for k in range(n)]

    def mul(a, b):
        (s1, k1), (s2, k2) = a, b
        # s^s1 r^k1 s^s2 r^k2, using r^k s = s r^-k
        k = (-k1 if s2 else k1) + k2
        return ((s1 + s2) % 2, k % n)

    names = [f"r^{k}" for k in range(n)] + [f"sr^{k}" for k in range(n)]
    return from_elements(elements, mul, names=names, name=f"D{n}")


_QUAT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group() -> FiniteGroup:
    """Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    elements = [(s, u) for u in "1ijk" for s in (1, -1)]

    def mul(a, b):
        sign, unit = _QUAT[a[1], b[1]]
        return (a[0] * b[0] * sign, unit)

    names = [("" if s == 1 else "-") + u for s, u in elements]
    return from_elements(elements, mul, names=names, name="Q8")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("built-in symmetric groups are S1..S5")
    perms = list(permutations(range(n)))
    # (a*b)(x) = a(b(x))
    return from_elements(perms, lambda a, b: tuple(a[b[x]] for x in range(n)), name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("built-in alternating groups are A1..A5")

    def even(p):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inversions % 2 == 0

    perms = [p for p in permutations(range(n)) if even(p)]
    return from_elements(perms, lambda a, b: tuple(a[b[x]] for x in range(n)), name=f"A{n}")


def builtin(name: str) -> FiniteGroup:
    """Look up ``C<n>``, ``D<n>``, ``Q8``, ``S<n>`` or ``A<n>``."""
    key = name.strip().upper()
    if key == "Q8":
        return quaternion_group()
    family, arg = key[0], key[1:]
    if not arg.isdigit():
        raise GroupError(f"unknown built-in group {name!r}")
    n = int(arg)
    makers = {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}
    if family not in makers:
        raise GroupError(f"unknown built-in group {name!r}")
    return makers[family](n)
