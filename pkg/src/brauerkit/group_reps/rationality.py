"""Rationality questions for characters of finite groups.

Fields of rationality and Frobenius-Schur indicators come straight from the
character table.  The enveloping algebra Q{rho} of an explicit matrix
representation is computed by linear algebra over Q after writing every
entry of Q(zeta_N) as its multiplication matrix.  For a rational character
chi the simple component e_chi Q[G] of the group algebra is handled inside
Q[G] itself: in degree 2 it is a quaternion algebra whose standard basis is
found by linear algebra, and in general a rational model is searched for
among left ideals cut out by subgroup idempotents.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np
from sympy import QQ, Poly, factor_list, factorint, symbols
from sympy.polys.matrices import DomainMatrix

from ..abelian_fields import AbelianField, make_field, quadratic_field
from ..brauer import CsaClass, trivial
from ..cyclic_rationals import lcm
from ..quaternion import quaternion_class
from .characters import Character, CharacterTable, character_table
from .cyclotomic import CyclotomicNumber, as_cyclotomic
from .groups import FiniteGroup, GroupError


# -- fields of rationality and indicators ---------------------------------


def galois_stabilizer(chi: Character) -> list[int]:
    """Units b mod e with chi(g^b) = chi(g) for every g."""
    G, e = chi.group, chi.table.exponent
    row = chi.coeff_row()
    return [
        b
        for b in range(1, e + 1)
        if gcd(b, e) == 1 and np.array_equal(row[G.class_power_map(b)], row)
    ]


def field_of_rationality(chi: Character) -> AbelianField:
    """Q(chi): the fixed field in Q(zeta_e) of the stabiliser of chi."""
    return make_field(chi.table.exponent, galois_stabilizer(chi))


def galois_orbits(table: CharacterTable) -> list[tuple[int, ...]]:
    """Partition of the irreducible characters into Galois orbits."""
    G, e = table.group, table.exponent
    rows = {table.coeffs[c].tobytes(): c for c in range(len(table))}
    seen: set[int] = set()
    orbits = []
    for c in range(len(table)):
        if c in seen:
            continue
        orbit = set()
        for b in range(1, e + 1):
            if gcd(b, e) == 1:
                image = table.coeffs[c][G.class_power_map(b)]
                orbit.add(rows[image.tobytes()])
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def frobenius_schur(chi: Character) -> int:
    """(1/|G|) sum_g chi(g^2): 1 orthogonal, -1 symplectic, 0 not self-dual."""
    G = chi.group
    squares = G.class_power_map(2)
    values = chi.values
    total = CyclotomicNumber.rational(0, chi.table.exponent)
    for h, i in zip(G.class_sizes, squares):
        total = total + h * values[i]
    indicator = total.to_rational() / G.order
    if indicator not in (-1, 0, 1):
        raise ArithmeticError(f"indicator {indicator} is not in {{-1, 0, 1}}")
    return int(indicator)


def inner_products(table: CharacterTable, values) -> list[Fraction]:
    """<psi, chi_c> for every irreducible chi_c, psi given on classes."""
    values = [as_cyclotomic(v) for v in values]
    out = []
    for ch in table:
        total = CyclotomicNumber.rational(0)
        for h, x, y in zip(table.class_sizes, values, ch.values):
            total = total + h * (x * y.conjugate())
        out.append(total.to_rational() / table.group.order)
    return out


# -- explicit matrix representations ---------------------------------------


def _entry(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.rational(Fraction(x))


@dataclass(frozen=True)
class MatrixRepresentation:
    """Images of all group elements (in table order) as square matrices.

    Entries may be ints, Fractions or :class:`CyclotomicNumber` values.
    """

    group: FiniteGroup
    matrices: tuple

    def __post_init__(self):
        if len(self.matrices) != self.group.order:
            raise GroupError("need one matrix per group element")
        mats = tuple(tuple(tuple(_entry(x) for x in row) for row in M) for M in self.matrices)
        d = len(mats[0])
        if any(len(M) != d or any(len(r) != d for r in M) for M in mats):
            raise GroupError("matrices must all be square of the same size")
        object.__setattr__(self, "matrices", mats)

    @property
    def degree(self) -> int:
        return len(self.matrices[0])

    @property
    def modulus(self) -> int:
        return lcm(*(x.modulus for M in self.matrices for row in M for x in row))

    @classmethod
    def from_generators(cls, G: FiniteGroup, images: dict) -> MatrixRepresentation:
        """Extend images of generating elements multiplicatively to all of G."""
        images = {int(g): [[_entry(x) for x in row] for row in M] for g, M in images.items()}
        d = len(next(iter(images.values())))
        one = CyclotomicNumber.rational(1)
        zero = CyclotomicNumber.rational(0)
        full = {G.identity: [[one if i == j else zero for j in range(d)] for i in range(d)]}
        frontier = [G.identity]
        while frontier:
            x = frontier.pop()
            for g, M in images.items():
                y = G.mul(x, g)
                if y not in full:
                    full[y] = _matmul(full[x], M)
                    frontier.append(y)
        if len(full) != G.order:
            raise GroupError("the given elements do not generate the group")
        rho = cls(G, tuple(full[g] for g in range(G.order)))
        rho.check_homomorphism()
        return rho

    def check_homomorphism(self, samples: int | None = None, seed: int = 0) -> None:
        """Verify rho(a) rho(b) = rho(ab), on all pairs or on a random sample."""
        G = self.group
        pairs = [(a, b) for a in range(G.order) for b in range(G.order)]
        if samples is not None and samples < len(pairs):
            pairs = random.Random(seed).sample(pairs, samples)
        for a, b in pairs:
            if _matmul(self.matrices[a], self.matrices[b]) != [list(r) for r in self.matrices[G.mul(a, b)]]:
                raise GroupError(f"not a representation: rho({a}) rho({b}) != rho({G.mul(a, b)})")

    def character(self) -> list[CyclotomicNumber]:
        """Trace on each conjugacy class."""
        out = []
        for g in self.group.class_reps:
            M = self.matrices[g]
            total = CyclotomicNumber.rational(0)
            for i in range(self.degree):
                total = total + M[i][i]
            out.append(total)
        return out

    def realified(self) -> list[np.ndarray]:
        """Each rho(g) as a rational matrix of size degree * phi(N)."""
        N = self.modulus
        basis = [CyclotomicNumber.root(N, j) for j in range(len(CyclotomicNumber.rational(0, N).coeffs))]
        cache: dict = {}

        def block(x):
            x = x.embed(N)
            if x.coeffs not in cache:
                cache[x.coeffs] = np.array([(x * z).coeffs for z in basis], dtype=object).T
            return cache[x.coeffs]

        return [np.block([[block(x) for x in row] for row in M]) for M in self.matrices]


def _matmul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            total = CyclotomicNumber.rational(0)
            for t in range(m):
                if A[i][t] and B[t][j]:
                    total = total + A[i][t] * B[t][j]
            row.append(total)
        out.append(row)
    return out


def _dm(rows) -> DomainMatrix:
    rows = [[QQ.convert(Fraction(x)) for x in r] for r in rows]
    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), QQ)


def _row_basis(vectors) -> list[list[Fraction]]:
    """A basis (in reduced echelon form) of the Q-span of the given vectors."""
    if not vectors:
        return []
    R, pivots = _dm(vectors).rref()
    rows = R.to_list()
    return [[_frac(x) for x in rows[i]] for i in range(len(pivots))]


def _nullspace(rows, ncols: int) -> list[list[Fraction]]:
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return [[_frac(x) for x in v] for v in _dm(rows).nullspace().to_list()]


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _generators(G: FiniteGroup) -> list[int]:
    """A small generating set, chosen greedily."""
    gens: list[int] = []
    reached = {G.identity}
    for g in range(G.order):
        if g in reached:
            continue
        gens.append(g)
        reached = {G.identity}
        frontier = [G.identity]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = G.mul(x, s)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        if len(reached) == G.order:
            break
    return gens


@dataclass(frozen=True)
class EnvelopingCenter:
    """The centre of Q{rho} compared with the character field Q(rho).

    ``components`` lists the simple factors of the centre, one field for each
    Galois orbit of irreducible constituents.  ``center_field`` is that field
    when the centre is a field and None otherwise.
    """

    algebra_dimension: int
    center_dimension: int
    components: tuple[AbelianField, ...]
    center_field: AbelianField | None
    character_field: AbelianField

    @property
    def equal(self) -> bool:
        return self.center_field is not None and self.center_field == self.character_field

    def to_json(self) -> dict:
        return {
            "algebra_dimension": self.algebra_dimension,
            "center_dimension": self.center_dimension,
            "components": [K.to_json() for K in self.components],
            "center_field": None if self.center_field is None else self.center_field.to_json(),
            "character_field": self.character_field.to_json(),
            "equal": self.equal,
        }


def enveloping_center_check(
    G: FiniteGroup, rho: MatrixRepresentation, table: CharacterTable | None = None
) -> EnvelopingCenter:
    """Compute Z(Q{rho}) and compare it with the field of rationality of rho.

    The span and centre are found by exact linear algebra on the realified
    matrices.  The centre is then identified through the constituents of the
    character (one factor Q(chi) per Galois orbit met), and the dimensions
    from the two routes must agree.
    """
    if rho.group is not G:
        raise GroupError("representation belongs to a different group")
    rho.check_homomorphism(samples=None if G.order <= 32 else 512)
    table = table or character_table(G)
    mats = rho.realified()
    size = mats[0].shape[0]

    span = _row_basis([M.reshape(-1).tolist() for M in mats])
    basis = [np.array(v, dtype=object).reshape(size, size) for v in span]
    gens = [mats[g] for g in _generators(G)]
    # sum_i c_i [B_i, rho(s)] = 0 for every generator s
    columns = [np.concatenate([(B @ S - S @ B).reshape(-1) for S in gens]) for B in basis]
    equations = np.array(columns, dtype=object).T.tolist()
    center = _nullspace(equations, len(basis))

    mult = inner_products(table, rho.character())
    if any(m.denominator != 1 or m < 0 for m in mult):
        raise GroupError("character of rho is not a character")
    hit = [orbit for orbit in galois_orbits(table) if mult[orbit[0]]]
    components = tuple(field_of_rationality(table[orbit[0]]) for orbit in hit)
    if sum(K.degree for K in components) != len(center):
        raise ArithmeticError("centre dimension disagrees with the constituents")
    center_field = components[0] if len(components) == 1 else None
    if center_field is not None and center_field.degree == 2:
        _confirm_quadratic(center_field, basis, center)

    character_field = _class_function_field(table, mult)
    return EnvelopingCenter(len(basis), len(center), components, center_field, character_field)


def _class_function_field(table: CharacterTable, mult) -> AbelianField:
    """Field of rationality of sum_c mult[c] chi_c."""
    G, e = table.group, table.exponent
    rows = {table.coeffs[c].tobytes(): c for c in range(len(table))}
    stab = []
    for b in range(1, e + 1):
        if gcd(b, e) != 1:
            continue
        perm = [rows[table.coeffs[c][G.class_power_map(b)].tobytes()] for c in range(len(table))]
        if all(mult[perm[c]] == mult[c] for c in range(len(table))):
            stab.append(b)
    return make_field(e, stab)


def _confirm_quadratic(K: AbelianField, basis, center) -> None:
    """Recover a quadratic centre from the minimal polynomial of a central element."""
    x = symbols("x")
    for coords in center:
        z = sum((c * B for c, B in zip(coords, basis)), np.zeros_like(basis[0]))
        poly = Poly(_dm(z.tolist()).charpoly(), x)
        _, factors = factor_list(poly.as_expr(), x)
        quad = [f for f, _ in factors if Poly(f, x).degree() == 2]
        if not quad:
            continue
        a, b, c = (Fraction(int(t.p), int(t.q)) for t in Poly(quad[0], x).all_coeffs())
        D = b * b - 4 * a * c
        if quadratic_field(_squarefree(D.numerator * D.denominator)) != K:
            raise ArithmeticError("quadratic centre disagrees with the constituents")
        return
    raise ArithmeticError("no central element generates the quadratic centre")


def _squarefree(n: int) -> int:
    sign = -1 if n < 0 else 1
    out = 1
    for p, k in factorint(abs(n)).items():
        if k % 2:
            out *= p
    return sign * out


# -- the simple component e_chi Q[G] for rational chi ------------------------


class _GroupAlgebra:
    """Q[G] with elements stored as lists of Fractions indexed by G."""

    def __init__(self, G: FiniteGroup):
        self.G = G

    def mul(self, x, y):
        G = self.G
        out = [Fraction(0)] * G.order
        ys = [(h, c) for h, c in enumerate(y) if c]
        for g, a in enumerate(x):
            if a:
                row = G.table[g]
                for h, b in ys:
                    out[row[h]] += a * b
        return out

    def left_translate(self, g: int, x):
        out = [Fraction(0)] * self.G.order
        row = self.G.table[g]
        for h, c in enumerate(x):
            out[row[h]] = c
        return out

    def right_translate(self, x, g: int):
        out = [Fraction(0)] * self.G.order
        col = self.G.table[:, g]
        for h, c in enumerate(x):
            out[col[h]] = c
        return out


def _rational_values(chi: Character) -> list[Fraction]:
    if not all(v.is_rational() for v in chi.values):
        raise ValueError("the character is not rational-valued")
    G = chi.group
    return [chi.values[G.class_of[g]].to_rational() for g in range(G.order)]


def _component(chi: Character):
    """The central idempotent e_chi and a basis of e_chi Q[G]."""
    G = chi.group
    vals = _rational_values(chi)
    d = chi.degree
    e = [Fraction(d, G.order) * vals[G.inverse[g]] for g in range(G.order)]
    alg = _GroupAlgebra(G)
    basis = _row_basis([alg.right_translate(e, g) for g in range(G.order)])
    if len(basis) != d * d:
        raise ArithmeticError("simple component has the wrong dimension")
    return alg, e, basis, vals


def quaternion_structure(G: FiniteGroup, chi: Character) -> tuple[int, int]:
    """Integers (a, b) with e_chi Q[G] isomorphic to (a, b)_Q, for chi(1) = 2.

    Finds a pure quaternion x (reduced trace 0, x^2 = a), then a pure y
    anticommuting with x (y^2 = b).  Denominators are cleared by squares.
    """
    if chi.degree != 2:
        raise ValueError("quaternion structure needs a character of degree 2")
    alg, e, basis, vals = _component(chi)

    def trace(x):
        return sum(c * v for c, v in zip(x, vals))

    def combine(coords, vectors):
        return [sum(c * v[g] for c, v in zip(coords, vectors)) for g in range(G.order)]

    def scalar(x):
        # x = s * e, read off at the identity where e is nonzero
        s = x[G.identity] / e[G.identity]
        if any(x[g] != s * e[g] for g in range(G.order)):
            return None
        return s

    pure = [combine(c, basis) for c in _nullspace([[trace(b) for b in basis]], 4)]
    x, a = _nonzero_square(alg, pure, scalar)
    # y with xy + yx = 0 inside the pure part
    eqs = []
    products = [_add(alg.mul(x, p), alg.mul(p, x)) for p in pure]
    for g in range(G.order):
        eqs.append([prod[g] for prod in products])
    anti = [combine(c, pure) for c in _nullspace(eqs, len(pure))]
    y, b = _nonzero_square(alg, anti, scalar)
    return _clear(a), _clear(b)


def _add(x, y):
    return [a + b for a, b in zip(x, y)]


def _nonzero_square(alg, candidates, scalar):
    trials = list(candidates)
    trials += [_add(u, v) for i, u in enumerate(candidates) for v in candidates[i + 1 :]]
    for x in trials:
        s = scalar(alg.mul(x, x))
        if s is None:
            raise ArithmeticError("square of a pure quaternion is not central")
        if s:
            return x, s
    raise ArithmeticError("every pure element squares to zero")


def _clear(q: Fraction) -> int:
    # q and q * den^2 have the same square class
    return q.numerator * q.denominator


def rational_model(G: FiniteGroup, chi: Character, budget: int = 500, seed: int = 0):
    """Rational matrices affording chi, or None if the search finds none.

    For a subgroup H with <chi|_H, 1> = 1, the left ideal Q[G] e_chi e_H has
    dimension chi(1) over Q and affords chi.  Cyclic subgroups are tried
    first, then subgroups generated by random pairs, up to ``budget``.
    """
    vals = _rational_values(chi)
    alg = _GroupAlgebra(G)
    d = chi.degree
    for H in _subgroups(G, budget, seed):
        if sum(vals[h] for h in H) != len(H):
            continue
        e_chi = [Fraction(d, G.order) * vals[G.inverse[g]] for g in range(G.order)]
        e_H = [Fraction(0)] * G.order
        for h in H:
            e_H[h] = Fraction(1, len(H))
        x = alg.mul(e_chi, e_H)
        ideal = _row_basis([alg.left_translate(g, x) for g in range(G.order)])
        if len(ideal) != d:
            raise ArithmeticError("left ideal has the wrong dimension")
        return _action_matrices(alg, ideal)
    return None


def _subgroups(G: FiniteGroup, budget: int, seed: int):
    seen: set[frozenset] = set()

    def closure(gens):
        out = {G.identity}
        frontier = [G.identity]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = G.mul(x, s)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    tried = 0
    for g in range(G.order):
        H = closure([g])
        if H not in seen:
            seen.add(H)
            tried += 1
            yield H
            if tried >= budget:
                return
    rng = random.Random(seed)
    for _ in range(budget - tried):
        H = closure([rng.randrange(G.order), rng.randrange(G.order)])
        if H not in seen:
            seen.add(H)
            yield H


def _action_matrices(alg: _GroupAlgebra, ideal) -> list[list[list[Fraction]]]:
    """Matrix of left multiplication by each g on the given basis."""
    G = alg.G
    d = len(ideal)
    pivots = [next(i for i, c in enumerate(v) if c) for v in ideal]
    out = []
    for g in range(G.order):
        M = [[Fraction(0)] * d for _ in range(d)]
        for j, v in enumerate(ideal):
            w = alg.left_translate(g, v)
            # the basis is in reduced echelon form, so coordinates are read at pivots
            coords = [w[p] for p in pivots]
            if _combine_rows(coords, ideal) != w:
                raise ArithmeticError("left ideal is not stable under G")
            for i in range(d):
                M[i][j] = coords[i]
        out.append(M)
    return out


def _combine_rows(coords, rows):
    return [sum(c * r[k] for c, r in zip(coords, rows)) for k in range(len(rows[0]))]


def schur_index_quaternion_case(G: FiniteGroup, chi: Character, budget: int = 500) -> CsaClass | None:
    """Brauer class of e_chi Q[G] for a rational character chi, when decided.

    Degree 1 gives the trivial class.  Degree 2 gives the class of the
    quaternion algebra (a, b) found by :func:`quaternion_structure`.  In
    higher degree the trivial class is returned when :func:`rational_model`
    succeeds; None means that neither certificate was found.
    """
    _rational_values(chi)
    if chi.degree == 1:
        return trivial()
    if chi.degree == 2:
        return quaternion_class(*quaternion_structure(G, chi))
    if rational_model(G, chi, budget) is not None:
        return trivial()
    return None


def involution_count_identity(table: CharacterTable) -> tuple[int, int]:
    """(sum_chi FS(chi) chi(1), #{g : g^2 = 1}); the two agree for every group."""
    lhs = sum(frobenius_schur(ch) * ch.degree for ch in table)
    return lhs, table.group.involution_count()
