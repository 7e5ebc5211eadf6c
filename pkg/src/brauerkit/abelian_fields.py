"""Abelian number fields presented as (conductor, subgroup of (Z/m)^x).

The field attached to ``(m, H)`` is the fixed field of ``H`` inside Q(zeta_m),
where ``a`` acts by ``zeta_m -> zeta_m**a``.  All splitting and Galois data
reduce to finite group computations in (Z/m)^x.

Places are labelled by cosets.  Fixing once and for all a prime of the
algebraic closure above each rational prime (and an embedding into C), the
place ``sigma_r(P_0)`` gets the coset of ``r`` modulo the decomposition group.
Labels are ``"p:k"`` for the k-th coset (cosets sorted by their least
representative) and ``"inf:real:k"`` / ``"inf:complex:k"`` at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from sympy import divisors, factorint, isprime, jacobi_symbol

from .cyclic_rationals import lcm

MAX_CONDUCTOR = 10**6


class FieldError(ValueError):
    pass


def units(m: int) -> list[int]:
    # (Z/1)^x is the trivial group, represented by the residue 0
    return [a for a in range(m) if gcd(a, m) == 1]


def _closure(m: int, gens) -> frozenset[int]:
    group = {1 % m}
    frontier = [1 % m]
    gens = [g % m for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % m
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def _product_set(m: int, a, b) -> frozenset[int]:
    return frozenset(x * y % m for x in a for y in b)


def _coset_index(m: int, group, sub) -> tuple[dict[int, int], tuple[int, ...]]:
    """Map each element of ``group`` to the index of its coset mod ``sub``."""
    index: dict[int, int] = {}
    reps: list[int] = []
    for a in sorted(group):
        if a in index:
            continue
        for h in sub:
            index[a * h % m] = len(reps)
        reps.append(a)
    return index, tuple(reps)


def _minimal_generators(m: int, elements) -> list[int]:
    gens: list[int] = []
    current = _closure(m, [])
    for a in elements:
        if a not in current:
            gens.append(a)
            current = _closure(m, gens)
    return gens


@dataclass(frozen=True)
class Place:
    kind: str  # "finite" | "archimedean"
    residue_char: int | None
    orbit_id: int
    local_kind: str | None = None  # "real" | "complex" at infinity

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_archimedean(self) -> bool:
        return self.kind == "archimedean"

    @property
    def label(self) -> str:
        if self.is_finite:
            return f"{self.residue_char}:{self.orbit_id}"
        return f"inf:{self.local_kind}:{self.orbit_id}"

    def sort_key(self):
        if self.is_finite:
            return (0, self.residue_char, self.orbit_id)
        return (1, 0, self.orbit_id)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Decomposition:
    e: int
    f: int
    g: int
    places: tuple[Place, ...]
    coset_reps: tuple[int, ...]
    index: dict = field(repr=False, compare=False, default_factory=dict)


@dataclass(frozen=True, eq=False)
class AbelianField:
    """Fixed field of ``subgroup`` in Q(zeta_conductor).

    Build instances with :func:`make_field`, which closes the subgroup and
    reduces to the true conductor.  Two fields compare equal exactly when
    they are the same subfield of Q-bar.
    """

    conductor: int
    subgroup: frozenset[int]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, AbelianField):
            return NotImplemented
        return self.conductor == other.conductor and self.subgroup == other.subgroup

    def __hash__(self):
        return hash((self.conductor, self.subgroup))

    @cached_property
    def unit_group(self) -> tuple[int, ...]:
        return tuple(units(self.conductor))

    @property
    def degree(self) -> int:
        return len(self.unit_group) // len(self.subgroup)

    @property
    def is_totally_real(self) -> bool:
        return (-1) % self.conductor in self.subgroup

    def galois_reps(self) -> tuple[int, ...]:
        """Least representatives of (Z/m)^x / H, i.e. of Gal(K/Q)."""
        return _coset_index(self.conductor, self.unit_group, self.subgroup)[1]

    def contains(self, other: AbelianField) -> bool:
        """True if ``other`` is a subfield of this field."""
        if self.conductor % other.conductor:
            return False
        m = other.conductor
        return all(h % m in other.subgroup for h in self.subgroup)

    def to_json(self) -> dict:
        gens = sorted(self.subgroup - {1 % self.conductor})
        return {"conductor": self.conductor, "generators": _minimal_generators(self.conductor, gens)}

    @classmethod
    def from_json(cls, data: dict) -> AbelianField:
        return make_field(int(data["conductor"]), [int(g) for g in data.get("generators", [])])

    def __repr__(self):
        gens = self.to_json()["generators"]
        return f"AbelianField(conductor={self.conductor}, generators={gens}, degree={self.degree})"

    def decompose(self, p: int) -> Decomposition:
        key = ("dec", p)
        if key not in self._cache:
            self._cache[key] = _decompose(self, p)
        return self._cache[key]

    def places_over(self, p: int) -> tuple[Place, ...]:
        return self.decompose(p).places

    def archimedean_places(self) -> tuple[Place, ...]:
        return archimedean_places(self)

    def place(self, label) -> Place:
        """Parse a place label.  Bare ``"p"`` / ``"inf"`` are accepted when unique."""
        if isinstance(label, Place):
            return label
        label = str(label).strip()
        parts = label.split(":")
        if parts[0] in ("inf", "oo", "∞"):
            arch = self.archimedean_places()
            if len(parts) == 1:
                if len(arch) != 1:
                    raise FieldError(f"{label!r} is ambiguous: {len(arch)} archimedean places")
                return arch[0]
            if len(parts) == 3:
                for v in arch:
                    if v.local_kind == parts[1] and str(v.orbit_id) == parts[2]:
                        return v
            raise FieldError(f"no archimedean place {label!r} on {self!r}")
        try:
            p = int(parts[0])
        except ValueError:
            raise FieldError(f"bad place label {label!r}") from None
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        over = self.places_over(p)
        if len(parts) == 1:
            if len(over) != 1:
                raise FieldError(f"{label!r} is ambiguous: {len(over)} places over {p}")
            return over[0]
        if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) >= len(over):
            raise FieldError(f"no place {label!r} on {self!r}")
        return over[int(parts[1])]

    def coset_rep(self, v: Place) -> int:
        """A residue r with v = sigma_r(base place)."""
        if v.is_finite:
            return self.decompose(v.residue_char).coset_reps[v.orbit_id]
        return _arch_data(self)[1][v.orbit_id]

    def local_degree(self, v: Place) -> int:
        if v.is_finite:
            d = self.decompose(v.residue_char)
            return d.e * d.f
        return 1 if v.local_kind == "real" else 2


def make_field(m: int, generators=()) -> AbelianField:
    """Fixed field of <generators> in Q(zeta_m), reduced to its true conductor."""
    m = int(m)
    if m < 1:
        raise FieldError("conductor must be positive")
    if m > MAX_CONDUCTOR:
        raise FieldError(f"conductor {m} exceeds cap {MAX_CONDUCTOR}")
    for g in generators:
        if gcd(int(g), m) != 1:
            raise FieldError(f"generator {g} not coprime to conductor {m}")
    H = _closure(m, [int(g) for g in generators])
    U = units(m)
    for d in divisors(m):
        if d == m:
            break
        if all(a in H for a in U if a % d == 1 % d):
            return AbelianField(d, frozenset(h % d for h in H))
    return AbelianField(m, H)


RATIONALS = make_field(1)


def cyclotomic_field(m: int) -> AbelianField:
    return make_field(m)


def kronecker(D: int, a: int) -> int:
    """Kronecker symbol (D/a) for a fundamental discriminant D and a > 0 coprime to D."""
    if a % 2 == 0:
        # D is odd here, and the character is periodic mod |D|
        a += abs(D)
    return jacobi_symbol(D % a, a)


def quadratic_field(d: int) -> AbelianField:
    """Q(sqrt(d)) for a square-free integer d != 1."""
    if d in (0, 1) or any(e > 1 for e in factorint(abs(d)).values()):
        raise FieldError(f"{d} is not a square-free integer other than 0, 1")
    D = d if d % 4 == 1 else 4 * d
    m = abs(D)
    return make_field(m, [a for a in units(m) if kronecker(D, a) == 1])


def _decompose(K: AbelianField, p: int) -> Decomposition:
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    m = K.conductor
    pa = 1
    while m % (pa * p) == 0:
        pa *= p
    m1 = m // pa
    U = K.unit_group
    # inertia is the (Z/p^a)^x factor; Frobenius is p on the prime-to-p factor
    inertia = frozenset(a for a in U if a % m1 == 1 % m1)
    frob = next(a for a in U if a % m1 == p % m1 and a % pa == 1 % pa)
    IH = _product_set(m, inertia, K.subgroup)
    DH = _product_set(m, IH, _closure(m, [frob]))
    e = len(IH) // len(K.subgroup)
    f = len(DH) // len(IH)
    g = K.degree // (e * f)
    index, reps = _coset_index(m, U, DH)
    assert len(reps) == g
    places = tuple(Place("finite", p, k) for k in range(g))
    return Decomposition(e, f, g, places, reps, index)


def decompose_prime(K: AbelianField, p: int) -> tuple[int, int, int, tuple[Place, ...]]:
    """Ramification index, inertia degree, number of primes, and the places over p."""
    d = K.decompose(p)
    return d.e, d.f, d.g, d.places


def _arch_data(K: AbelianField):
    key = ("arch",)
    if key not in K._cache:
        m = K.conductor
        if K.is_totally_real:
            kind, sub = "real", K.subgroup
        else:
            kind, sub = "complex", _product_set(m, K.subgroup, {1 % m, -1 % m})
        index, reps = _coset_index(m, K.unit_group, sub)
        places = tuple(Place("archimedean", None, k, kind) for k in range(len(reps)))
        K._cache[key] = (places, reps, index)
    return K._cache[key]


def archimedean_places(K: AbelianField) -> tuple[Place, ...]:
    """All real places (when -1 lies in H) or else all complex places of K."""
    return _arch_data(K)[0]


def roots_of_unity_order(K: AbelianField) -> int:
    """Order w of the group of roots of unity in K (always even)."""
    best = 1
    for d in divisors(K.conductor):
        if all(h % d == 1 % d for h in K.subgroup):
            best = lcm(best, d)
    return best if best % 2 == 0 else 2 * best


@dataclass(frozen=True, eq=False)
class GaloisElement:
    """The automorphism of K induced by zeta_m -> zeta_m**residue."""

    field: AbelianField
    residue: int

    def __post_init__(self):
        m = self.field.conductor
        if gcd(self.residue, m) != 1:
            raise FieldError(f"{self.residue} is not a unit mod {m}")
        object.__setattr__(self, "residue", self.residue % m)

    @property
    def canonical_residue(self) -> int:
        K = self.field
        return min(self.residue * h % K.conductor for h in K.subgroup)

    def __eq__(self, other):
        if not isinstance(other, GaloisElement):
            return NotImplemented
        return self.field == other.field and self.canonical_residue == other.canonical_residue

    def __hash__(self):
        return hash((self.field, self.canonical_residue))

    def __mul__(self, other):
        if not isinstance(other, GaloisElement) or other.field != self.field:
            return NotImplemented
        return GaloisElement(self.field, self.residue * other.residue)

    def cyclotomic_exponent(self, n: int) -> int:
        """b mod n with sigma(zeta_n) = zeta_n**b; requires zeta_n in K."""
        if roots_of_unity_order(self.field) % n:
            raise FieldError(f"zeta_{n} does not lie in {self.field!r}")
        M = self.field.conductor
        L = lcm(M, n)
        lift = next(s for s in range(self.residue, self.residue + L, M) if gcd(s, L) == 1)
        return lift % n

    def __repr__(self):
        return f"GaloisElement({self.canonical_residue} mod {self.field.conductor})"


def galois_group(K: AbelianField) -> list[GaloisElement]:
    return [GaloisElement(K, r) for r in K.galois_reps()]


def place_of(K: AbelianField, p: int | None, residue: int) -> Place:
    """The place sigma_residue(base place) over p; ``p=None`` means infinity."""
    residue %= K.conductor
    if p is None:
        places, _, index = _arch_data(K)
        return places[index[residue]]
    d = K.decompose(p)
    return d.places[d.index[residue]]


def galois_orbit_action(K: AbelianField, sigma: GaloisElement, v: Place) -> Place:
    """The place sigma(v).  Complex places are rejected."""
    if sigma.field != K:
        raise FieldError("Galois element belongs to a different field")
    if v.is_archimedean and v.local_kind == "complex":
        raise FieldError("Galois action on complex places is not supported")
    return place_of(K, v.residue_char, sigma.residue * K.coset_rep(v))
