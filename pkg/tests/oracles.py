"""Independent reference implementations used only by the tests.

None of these share code paths with the library routines they check:
splitting of the quaternions uses sums of three squares, character tables
are recomputed in floating point, prime decomposition is read off a
factorisation modulo p, and the constraint engine is replaced by plain
generate-and-test over the full candidate grid.
"""

from __future__ import annotations

import cmath
from itertools import product
from math import isqrt

import numpy as np
from sympy import Poly, factor_list, symbols
from sympy.ntheory.modular import crt

from brauerkit.abelian_fields import galois_orbit_action, galois_group, make_field, quadratic_field
from brauerkit.cyclic_rationals import CyclicRational, lcm
from brauerkit.langlands_constraints import (
    CONSTRAINTS,
    benard_schacher_filter,
    constraint_arch,
    constraint_p_sum,
    conjecture_filter,
    InvariantPair,
    torsion_filter,
)

# -- fields -----------------------------------------------------------------

BATTERY = {
    "Q": make_field(1),
    "Q(i)": make_field(4),
    "Q(sqrt2)": quadratic_field(2),
    "Q(sqrt-2)": quadratic_field(-2),
    "Q(sqrt3)": quadratic_field(3),
    "Q(sqrt-3)": quadratic_field(-3),
    "Q(sqrt5)": quadratic_field(5),
    "Q(sqrt-5)": quadratic_field(-5),
    "Q(sqrt-7)": quadratic_field(-7),
    "Q(sqrt13)": quadratic_field(13),
    "cubic7": make_field(7, [6]),
    "cubic9": make_field(9, [8]),
    "cubic13": make_field(13, [5]),
    "Q(zeta5)": make_field(5),
    "Q(zeta8)": make_field(8),
    "Q(zeta12)": make_field(12),
    "Q(sqrt2,sqrt3)": make_field(24, [23]),
    "Q(zeta16)+": make_field(16, [15]),
    "quartic17": make_field(17, [4]),
    "quartic13": make_field(13, [3]),
}

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def gaussian_period_poly(K):
    """Integer minimal polynomial of the Gaussian period of K, from floating point."""
    m = K.conductor
    x = symbols("x")
    roots = []
    for r in K.galois_reps():
        roots.append(sum(cmath.exp(2j * cmath.pi * (r * h % m) / m) for h in K.subgroup))
    coeffs = np.poly(roots)
    ints = [round(c.real) for c in coeffs]
    assert max(abs(c - i) for c, i in zip(coeffs, ints)) < 1e-6
    return Poly(ints, x)


def splitting_from_polynomial(K, p):
    """(f, g) for an unramified p, or None when the period polynomial is not separable mod p."""
    poly = gaussian_period_poly(K)
    x = poly.gens[0]
    mod = Poly(poly.as_expr(), x, modulus=p)
    _, factors = factor_list(mod.as_expr(), x, modulus=p)
    if any(k > 1 for _, k in factors):
        return None
    degrees = sorted(Poly(f, x, modulus=p).degree() for f, _ in factors)
    assert len(set(degrees)) == 1
    return degrees[0], len(degrees)


def is_sum_of_three_squares(n: int) -> bool:
    """Brute force search for n = x^2 + y^2 + z^2."""
    for x in range(isqrt(n) + 1):
        for y in range(x, isqrt(n - x * x) + 1):
            z2 = n - x * x - y * y
            if isqrt(z2) ** 2 == z2:
                return True
    return False


# -- character tables in floating point --------------------------------------


def numeric_character_table(G, seed=1):
    """Irreducible characters as complex arrays, by diagonalising class sums in floats.

    With K_j K_k = sum_i a[j, k, i] K_i, the central characters
    w_i = h_i chi(g_i) / chi(1) satisfy sum_i a[j, k, i] w_i = w_j w_k, so w is a
    common eigenvector of the matrices a[j].
    """
    r = len(G.conjugacy_classes)
    a = np.zeros((r, r, r))
    classes = [set(c) for c in G.conjugacy_classes]
    for j, cj in enumerate(classes):
        for k, ck in enumerate(classes):
            for x in cj:
                for y in ck:
                    a[j, k, G.class_of[G.table[x, y]]] += 1
    sizes = np.array(G.class_sizes, dtype=float)
    a /= sizes[None, None, :]  # each element of C_i arises equally often
    rng = np.random.default_rng(seed)
    A = sum(w * a[j] for j, w in enumerate(rng.normal(size=r)))
    _, vecs = np.linalg.eig(A)
    inv = [G.class_of[G.inverse[g]] for g in G.class_reps]
    rows = []
    for c in range(r):
        v = vecs[:, c] / vecs[0, c]
        # v_i = h_i chi(g_i) / chi(1); fix chi(1) by the first orthogonality relation
        s = np.sum(v * v[inv] / sizes)
        d = np.sqrt(G.order / s)
        rows.append(v * d.real / sizes)
    return rows


# -- constraint engine by generate-and-test ----------------------------------


def _first_failure(scenario, jl, lp, memo):
    """Index into CONSTRAINTS of the first failed constraint, or None.

    Vectors are tuples of residues k mod M over the support, standing for k/M.
    """
    M, support, arch, away, over_p, targets = memo["setup"]
    for i in arch:
        if (jl[i] + lp[i]) % M != targets["arch"][i]:
            return 1
    for i in away:
        if (jl[i] + lp[i]) % M:
            return 2
    if sum(jl[i] + lp[i] for i in over_p) % M != targets["p-sum"]:
        return 3
    for index, check in ((4, benard_schacher_filter), (5, torsion_filter)):
        for vec in (jl, lp):
            key = (index, vec)
            if key not in memo:
                memo[key] = check(scenario, _as_map(support, vec, M))
            if not memo[key]:
                return index
    if sum(jl) % M or sum(lp) % M:
        return 6
    if scenario.conjecture_mode:
        pair = InvariantPair(scenario.field, _as_map(support, jl, M), _as_map(support, lp, M))
        if not conjecture_filter(scenario, pair):
            return 7
    return None


def _as_map(support, vec, M):
    return {v: CyclicRational(k, M) for v, k in zip(support, vec)}


def naive_enumerate(scenario):
    """(sorted solutions as (jl, lp) value tuples over the support, first violated name)."""
    support = scenario.support()
    if scenario.violation():
        return [], "scenario"
    cap = scenario.torsion_cap
    M = lcm(cap, 2)
    over_p = set(scenario.places_over_p())
    extra = set(scenario.extra_places())
    arch_idx = [i for i, v in enumerate(support) if v.is_archimedean]
    targets = {
        "arch": {i: int(constraint_arch(scenario, support[i]).as_fraction() * M) for i in arch_idx},
        "p-sum": int(constraint_p_sum(scenario).as_fraction() * M),
    }
    memo = {
        "setup": (
            M,
            support,
            arch_idx,
            [i for i, v in enumerate(support) if v in extra],
            [i for i, v in enumerate(support) if v in over_p],
            targets,
        )
    }

    def grid(v):
        if v.is_archimedean:
            return [0] if v.local_kind == "complex" else [0, M // 2]
        return [k * (M // cap) for k in range(cap)]

    free = [i for i, v in enumerate(support) if v not in extra]
    paired = [i for i, v in enumerate(support) if v in extra]
    choices = [grid(support[i]) for i in free] * 2 + [grid(support[i]) for i in paired]
    nf = len(free)
    solutions = []
    deepest = 0
    for combo in product(*choices):
        jl = [0] * len(support)
        lp = [0] * len(support)
        for i, a, b in zip(free, combo[:nf], combo[nf : 2 * nf]):
            jl[i], lp[i] = a, b
        for i, a in zip(paired, combo[2 * nf :]):
            jl[i], lp[i] = a, -a % M
        fail = _first_failure(scenario, tuple(jl), tuple(lp), memo)
        if fail is None:
            solutions.append((tuple(jl), tuple(lp)))
        else:
            deepest = max(deepest, fail)
    # k/M with 0 <= k < M orders exactly like the rationals in [0, 1)
    solutions.sort()
    out = [
        (tuple(CyclicRational(k, M) for k in a), tuple(CyclicRational(k, M) for k in b)) for a, b in solutions
    ]
    return out, (None if out else CONSTRAINTS[deepest])


def cyclotomic_exponent_direct(residue, conductor, n):
    """b with zeta_n -> zeta_n^b.

    Either zeta_n is a power of zeta_conductor, or the conductor is odd and
    zeta_n = -zeta_(n/2)^k, in which case sigma fixes -1 and acts on the odd
    part through the residue.
    """
    if conductor % n == 0:
        return residue % n
    half = n // 2
    assert n % 2 == 0 and half % 2 == 1 and conductor % half == 0
    return int(crt([2, half], [1, residue % half])[0])


def galois_residues(K):
    return [sigma.residue for sigma in galois_group(K)]


def apply(K, residue, v):
    return galois_orbit_action(K, next(s for s in galois_group(K) if s.residue == residue), v)


def scenario_battery():
    """Scenarios over the field battery: n <= 4, p <= 13, every duality type, both modes."""
    from brauerkit.langlands_constraints import DUALITY_TYPES, ConstraintScenario

    out = []
    for K in BATTERY.values():
        for p in SMALL_PRIMES:
            for n in (1, 2, 3, 4):
                for kind in DUALITY_TYPES:
                    for conj in (False, True):
                        out.append(ConstraintScenario(n, p, K, kind, conjecture_mode=conj))
    # a few with extra support away from p
    for name in ("Q", "Q(i)", "Q(sqrt5)"):
        for kind in DUALITY_TYPES:
            for conj in (False, True):
                out.append(ConstraintScenario(2, 3, BATTERY[name], kind, conj, extra_support=(5,)))
                out.append(ConstraintScenario(2, 5, BATTERY[name], kind, conj, extra_support=(2, 3), torsion_cap=2))
    return out
