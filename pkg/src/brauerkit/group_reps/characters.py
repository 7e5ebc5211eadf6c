"""Exact character tables by Dixon's method.

Class multiplication coefficients are reduced modulo a prime l = 1 (mod e),
where e is the group exponent.  A random combination of the class matrices
is diagonalised over F_l; each eigenvector, suitably normalised, is a
character modulo l.  Values are lifted to Q(zeta_e) by recovering the
eigenvalue multiplicities of each group element from the character on its
powers, using a fixed primitive e-th root of unity mod l.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np
from sympy import nextprime

from . import _modp
from .cyclotomic import CyclotomicNumber, reduction_matrix
from .groups import FiniteGroup, GroupError


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime l = 1 mod exponent with l > 2 * sqrt(order) * order."""
    bound = 2 * isqrt(order) * order
    if isqrt(order) ** 2 != order:
        bound += 2 * order
    l = nextprime(bound)
    while (l - 1) % exponent:
        l = nextprime(l)
    return l


def class_matrices(G: FiniteGroup) -> np.ndarray:
    """``M[j, i, k]`` = #{x in C_j : x^-1 z_k in C_i} for a fixed z_k in C_k."""
    r = len(G.conjugacy_classes)
    M = np.zeros((r, r, r), dtype=np.int64)
    xs = np.arange(G.order)
    cj = G.class_of[xs]
    for k, z in enumerate(G.class_reps):
        ci = G.class_of[G.table[G.inverse[xs], z]]
        np.add.at(M[:, :, k], (cj, ci), 1)
    return M


@dataclass
class CharacterTable:
    """Irreducible characters with exact values in Q(zeta_e).

    ``coeffs[c, i]`` holds the power-basis coordinates of the value of
    character c on class i.  ``multiplicities[c, i, k]`` is the multiplicity
    of zeta_e^k as an eigenvalue on that class (the group-ring form).
    """

    group: FiniteGroup
    exponent: int
    coeffs: np.ndarray
    multiplicities: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def class_sizes(self) -> list[int]:
        return self.group.class_sizes

    def __len__(self):
        return self.coeffs.shape[0]

    def __getitem__(self, c: int) -> Character:
        return Character(self, c)

    def __iter__(self):
        return (Character(self, c) for c in range(len(self)))

    def value(self, c: int, i: int) -> CyclotomicNumber:
        return CyclotomicNumber(self.exponent, [int(x) for x in self.coeffs[c, i]])

    def degrees(self) -> list[int]:
        return [int(self.coeffs[c, 0, 0]) for c in range(len(self))]

    def rows(self) -> list[list[CyclotomicNumber]]:
        return [ch.values for ch in self]

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "order": self.group.order,
            "exponent": self.exponent,
            "class_sizes": self.class_sizes,
            "class_reps": [self.group.names[g] for g in self.group.class_reps],
            "characters": [[str(v) for v in ch.values] for ch in self],
        }

    def gram_matrices(self) -> tuple[np.ndarray, np.ndarray]:
        """Both orthogonality Gram matrices, with exact integer coordinates.

        Row Gram: sum_i h_i chi(g_i) conj(psi(g_i)); column Gram:
        sum_chi chi(g_i) conj(chi(g_j)).  Entries are returned in power-basis
        coordinates (last axis).  The products are formed in group-ring form
        with an FFT and rounded; the rounding error is checked.
        """
        X = self.multiplicities.astype(float)
        h = np.array(self.class_sizes, dtype=float)
        Fk = np.fft.fft(X, axis=2).transpose(2, 0, 1)  # (k, character, class)
        row = (Fk * h) @ Fk.conj().transpose(0, 2, 1)
        col = Fk.transpose(0, 2, 1) @ Fk.conj()
        row = np.fft.ifft(row, axis=0).real.transpose(1, 2, 0)
        col = np.fft.ifft(col, axis=0).real.transpose(1, 2, 0)
        R = reduction_matrix(self.exponent).astype(float)
        out = []
        for A in (row, col):
            Ai = np.rint(A)
            if np.abs(A - Ai).max() > 1e-6:
                raise ArithmeticError("rounding error too large in Gram computation")
            # small integer entries, so the float product is exact
            out.append(np.rint(Ai @ R).astype(np.int64))
        return out[0], out[1]

    def check_orthogonality(self) -> bool:
        """Exact check of both orthogonality relations.

        Each Gram entry minus its expected value is an algebraic integer of
        Q(zeta_e).  It vanishes iff every Galois conjugate has absolute value
        below 1 (otherwise its norm would be a nonzero integer smaller than 1),
        so it suffices to evaluate under the embeddings zeta -> exp(2 pi i k/e)
        with k a unit, one from each conjugate pair.
        """
        e, n = self.exponent, self.group.order
        r = len(self)
        ks = np.array([k for k in range(1, e // 2 + 1) if gcd(k, e) == 1] or [1])
        Z = np.exp(2j * np.pi * np.outer(np.arange(e), ks) / e)  # (exponent, embedding)
        V = (self.multiplicities.reshape(r * r, e).astype(float) @ Z).reshape(r, r, -1)
        V = V.transpose(2, 0, 1)  # (embedding, character, class)
        h = np.array(self.class_sizes, dtype=float)
        rows = (V * h) @ V.conj().transpose(0, 2, 1)
        cols = V.transpose(0, 2, 1) @ V.conj()
        expected_rows = n * np.eye(r)
        expected_cols = np.diag([n / x for x in self.class_sizes])
        return bool(np.abs(rows - expected_rows).max() < 0.5 and np.abs(cols - expected_cols).max() < 0.5)


@dataclass(frozen=True)
class Character:
    table: CharacterTable
    index: int

    @property
    def group(self) -> FiniteGroup:
        return self.table.group

    @property
    def values(self) -> list[CyclotomicNumber]:
        key = ("values", self.index)
        cache = self.table._cache
        if key not in cache:
            cache[key] = [self.table.value(self.index, i) for i in range(self.table.coeffs.shape[1])]
        return cache[key]

    @property
    def degree(self) -> int:
        return int(self.table.coeffs[self.index, 0, 0])

    def coeff_row(self) -> np.ndarray:
        return self.table.coeffs[self.index]

    def __repr__(self):
        return f"Character({self.group.name}#{self.index}: {', '.join(str(v) for v in self.values)})"


def character_table(G: FiniteGroup, seed: int = 0, max_tries: int = 50) -> CharacterTable:
    """Complete irreducible character table of G (Dixon's method)."""
    n, e = G.order, G.exponent
    r = len(G.conjugacy_classes)
    sizes = G.class_sizes
    inv_cls = G.inverse_class_map()
    ell = dixon_prime(n, e)
    M = class_matrices(G) % ell
    rng = random.Random(seed)

    vectors = None
    for _ in range(max_tries):
        weights = [rng.randrange(ell) for _ in range(r)]
        A = np.zeros((r, r), dtype=np.int64)
        for j, w in enumerate(weights):
            A = (A + w * M[j]) % ell
        H, V = _modp.hessenberg(A, ell)
        lams = _modp.roots(_modp.hessenberg_charpoly(H, ell), ell)
        if len(lams) == r:
            vectors = _eigenvectors(A, H, V, lams, ell)
            if vectors is not None:
                break
    if vectors is None:
        raise GroupError("could not separate the characters; try another seed")

    # theta[c, i] = chi_c(g_i) mod ell
    theta = np.zeros((r, r), dtype=np.int64)
    for c, v in enumerate(vectors):
        s = 0
        for i in range(r):
            s = (s + int(v[i]) * int(v[inv_cls[i]]) * pow(sizes[i], -1, ell)) % ell
        d2 = n * pow(s, -1, ell) % ell
        d = next((d for d in range(1, isqrt(n) + 1) if d * d % ell == d2), None)
        if d is None:
            raise GroupError("degree recovery failed")
        for i in range(r):
            theta[c, i] = int(v[i]) * d * pow(sizes[i], -1, ell) % ell

    zeta = _modp.primitive_root_of_unity(e, ell)
    mult = np.zeros((r, r, e), dtype=np.int64)
    degs = theta[:, 0]
    dft: dict[int, np.ndarray] = {}
    for i, g in enumerate(G.class_reps):
        o = int(G.element_orders[g])
        if o not in dft:
            # W[j, k] = zeta_o^(-jk) mod ell
            zo_inv = pow(zeta, (e // o) * (o - 1), ell)
            table = np.array([pow(zo_inv, t, ell) for t in range(o)], dtype=np.int64)
            jk = np.outer(np.arange(o), np.arange(o)) % o
            dft[o] = table[jk].astype(float)
        powers = [int(G.class_of[x]) for x in _power_list(G, g, o)]
        # entries < ell^2 * o stay exact in float64 for ell below ~10^5
        m = np.rint(theta[:, powers].astype(float) @ dft[o]).astype(np.int64) % ell
        m = m * pow(o, -1, ell) % ell
        if (m > degs[:, None]).any():
            raise GroupError("eigenvalue multiplicities out of range; bad Dixon prime")
        mult[:, i, :: e // o] = m
    R = reduction_matrix(e)
    coeffs = np.rint(mult.reshape(r * r, e).astype(float) @ R.astype(float)).astype(np.int64)
    coeffs = coeffs.reshape(r, r, R.shape[1])

    order = sorted(range(r), key=lambda c: _sort_key(coeffs[c], mult[c], e))
    table = CharacterTable(G, e, coeffs[order], mult[order])
    if sum(d * d for d in table.degrees()) != n:
        raise GroupError("sum of squared degrees differs from the group order")
    return table


def _power_list(G: FiniteGroup, g: int, o: int) -> list[int]:
    out = [G.identity]
    for _ in range(o - 1):
        out.append(G.mul(out[-1], g))
    return out


def _eigenvectors(A, H, V, lams, ell):
    """Eigenvectors normalised to 1 at the identity class, or None on failure."""
    vecs = []
    for lam in lams:
        y = _modp.hessenberg_eigenvector(H, lam, ell)
        if y is not None:
            v = V @ y % ell
        else:
            ns = _modp.nullspace((A - lam * np.eye(len(lams), dtype=np.int64)) % ell, ell)
            if ns.shape[0] != 1:
                return None
            v = ns[0]
        if v[0] == 0:
            return None
        vecs.append(v * pow(int(v[0]), -1, ell) % ell)
    return vecs


def _sort_key(coeff_row, mult_row, e):
    # trivial character first, then by degree, then by complex values
    z = np.exp(2j * np.pi * np.arange(e) / e)
    vals = mult_row @ z
    key = tuple((-round(v.real, 9), -round(v.imag, 9)) for v in vals)
    return (int(coeff_row[0, 0]), key)


def inner_product(table: CharacterTable, a, b) -> Fraction:
    """<a, b> = (1/|G|) sum_g a(g) conj(b(g)) for class functions given as value lists."""
    total = CyclotomicNumber.rational(0, table.exponent)
    for h, x, y in zip(table.class_sizes, a, b):
        total = total + h * (x * y.conjugate())
    return total.to_rational() / table.group.order
