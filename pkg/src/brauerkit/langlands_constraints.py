"""Finite constraint system on the Brauer classes attached to a supercuspidal pi.

A scenario fixes the dimension n, the residue characteristic p, a model K of
the field of rationality and the duality type.  The unknowns are two Hasse
invariant vectors over K, ``jl`` and ``lp``, supported on the places over p,
the archimedean places and an optional finite set of further primes.  The
constraints are:

* arch: at a real place jl + lp is 1/2 for self-dual types and 0 otherwise;
  both invariants vanish at complex places.
* away: at a finite place not over p, jl + lp = 0; outside the declared
  support both vanish.
* p-sum: the sum over v | p of jl_v + lp_v is [K:Q]/2.
* benard-schacher: within each fibre over a rational prime (and at
  infinity) the entries of each vector have a common order m, zeta_m lies
  in K, and inv_P = b * inv_{sigma P} whenever sigma(zeta_m) = zeta_m^b.
* torsion: entries over p have order dividing gcd(n, p - 1); all entries
  have order dividing the torsion cap.
* reciprocity: each vector sums to 0.
* conjecture (optional): the refinement relating jl and lp place by place.

:func:`enumerate_solutions` solves the system exactly by working fibre by
fibre and gluing the fibres with the reciprocity sums.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import product
from math import gcd
from typing import Mapping

from sympy import isprime

from .abelian_fields import (
    RATIONALS,
    AbelianField,
    FieldError,
    Place,
    galois_group,
    galois_orbit_action,
    roots_of_unity_order,
)
from .brauer import CsaClass
from .cyclic_rationals import HALF, ZERO, CyclicRational, lcm

DUALITY_TYPES = ("not_self_dual", "orthogonal", "symplectic")
CONSTRAINTS = ("scenario", "arch", "away", "p-sum", "benard-schacher", "torsion", "reciprocity", "conjecture")
DEFAULT_MAX_CANDIDATES = 10**6

PROVENANCE = {
    "scenario": "a self-dual representation has a totally real field of rationality",
    "arch": "at v | infinity inv(jl) + inv(lp) = 1/[C:R(pi)]: 1/2 at a real place, where pi is "
    "self-dual up to a real twist, and 0 at a complex place, where both invariants vanish",
    "away": "at a finite place v not over p, inv_v(jl) + inv_v(lp) = 0; places outside the "
    "declared support carry no invariant",
    "p-sum": "sum over v | p of inv_v(jl) + inv_v(lp) = [K:Q]/2 in Q/Z, from global "
    "reciprocity and the archimedean contribution",
    "benard-schacher": "for a Schur algebra over an abelian field the invariants over a rational "
    "prime share one order m, zeta_m lies in K, and inv_P = b inv_sigma(P) when sigma(zeta_m) = zeta_m^b",
    "torsion": "invariants over p are (n, p-1)-torsion; the torsion cap bounds all other entries",
    "reciprocity": "the invariants of each class sum to 0",
    "conjecture": "not self-dual or orthogonal: jl = lp at v | p; symplectic: jl = lp at finite "
    "places when [K:Q] is even, and away from p with jl - lp in 1/2 Z at v | p when it is odd",
}


class ScenarioError(ValueError):
    """A scenario violates a standing hypothesis, or an operation does not apply."""


class SearchSpaceError(ValueError):
    """The search would examine more candidates than allowed."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"search space of size {size} exceeds the cap {cap}")


# -- scenarios ------------------------------------------------------------------


@dataclass(frozen=True)
class ConstraintScenario:
    n: int
    p: int
    field: AbelianField = RATIONALS
    duality_type: str = "not_self_dual"
    conjecture_mode: bool = False
    extra_support: tuple[int, ...] = ()
    torsion_cap: int | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ScenarioError("n must be a positive integer")
        if not isprime(self.p):
            raise ScenarioError(f"p = {self.p} is not prime")
        if self.duality_type not in DUALITY_TYPES:
            raise ScenarioError(f"duality_type must be one of {', '.join(DUALITY_TYPES)}")
        extra = tuple(sorted({int(q) for q in self.extra_support}))
        for q in extra:
            if not isprime(q) or q == self.p:
                raise ScenarioError(f"extra support prime {q} must be a prime different from p")
        object.__setattr__(self, "extra_support", extra)
        cap = lcm(self.n, self.p - 1) if self.torsion_cap is None else int(self.torsion_cap)
        if cap < 1:
            raise ScenarioError("torsion_cap must be positive")
        object.__setattr__(self, "torsion_cap", cap)

    @property
    def self_dual(self) -> bool:
        return self.duality_type != "not_self_dual"

    @property
    def torsion_bound(self) -> int:
        """Order bound at places over p: gcd(n, p - 1), cut down by the cap."""
        return gcd(gcd(self.n, self.p - 1), self.torsion_cap)

    def violation(self) -> str | None:
        if self.self_dual and not self.field.is_totally_real:
            return f"{self.duality_type} scenario over a field that is not totally real"
        return None

    def require_valid(self) -> None:
        problem = self.violation()
        if problem:
            raise ScenarioError(problem)

    def places_over_p(self) -> tuple[Place, ...]:
        return self.field.places_over(self.p)

    def archimedean_places(self) -> tuple[Place, ...]:
        return self.field.archimedean_places()

    def extra_places(self) -> tuple[Place, ...]:
        return tuple(v for q in self.extra_support for v in self.field.places_over(q))

    def support(self) -> tuple[Place, ...]:
        return tuple(sorted(self.places_over_p() + self.extra_places() + self.archimedean_places()))

    def grid_size(self) -> int:
        """Size of the naive candidate grid (both vectors, all supported places)."""
        cap = self.torsion_cap
        real = sum(1 for v in self.archimedean_places() if v.local_kind == "real")
        return cap ** (2 * len(self.places_over_p())) * 4**real * cap ** len(self.extra_places())

    def with_conjecture(self, on: bool = True) -> ConstraintScenario:
        return replace(self, conjecture_mode=on)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "field": self.field.to_json(),
            "duality_type": self.duality_type,
            "conjecture_mode": self.conjecture_mode,
            "extra_support": list(self.extra_support),
            "torsion_cap": self.torsion_cap,
        }

    @classmethod
    def from_json(cls, data: dict) -> ConstraintScenario:
        known = {"n", "p", "field", "duality_type", "conjecture_mode", "extra_support", "torsion_cap"}
        unknown = set(data) - known
        if unknown:
            raise ScenarioError(f"unknown scenario keys: {', '.join(sorted(unknown))}")
        try:
            return cls(
                n=int(data["n"]),
                p=int(data["p"]),
                field=AbelianField.from_json(data["field"]) if "field" in data else RATIONALS,
                duality_type=data.get("duality_type", "not_self_dual"),
                conjecture_mode=bool(data.get("conjecture_mode", False)),
                extra_support=tuple(data.get("extra_support", ())),
                torsion_cap=data.get("torsion_cap"),
            )
        except KeyError as exc:
            raise ScenarioError(f"scenario is missing {exc.args[0]!r}") from None


# -- invariant pairs ------------------------------------------------------------


def _vector(K: AbelianField, raw) -> dict[Place, CyclicRational]:
    if isinstance(raw, CsaClass):
        if raw.base_field != K:
            raise FieldError("class is over a different field")
        return dict(raw.invariants)
    out: dict[Place, CyclicRational] = {}
    for key, value in (raw or {}).items():
        v = K.place(key)
        if v in out:
            raise ValueError(f"place {v} given twice")
        x = CyclicRational.coerce(value)
        if x:
            out[v] = x
    return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class InvariantPair:
    """Invariant vectors of the two division algebras, as place -> Q/Z maps.

    The vectors are not required to be valid Brauer classes, so that
    :func:`check_pair` can report exactly what fails; :meth:`classes`
    validates them.
    """

    field: AbelianField
    jl: Mapping[Place, CyclicRational]
    lp: Mapping[Place, CyclicRational]

    def __post_init__(self):
        object.__setattr__(self, "jl", _vector(self.field, self.jl))
        object.__setattr__(self, "lp", _vector(self.field, self.lp))

    def __eq__(self, other):
        if not isinstance(other, InvariantPair):
            return NotImplemented
        return self.field == other.field and self.jl == other.jl and self.lp == other.lp

    def __hash__(self):
        return hash((self.field, tuple(self.jl.items()), tuple(self.lp.items())))

    def classes(self) -> tuple[CsaClass, CsaClass]:
        return CsaClass(self.field, self.jl), CsaClass(self.field, self.lp)

    def places(self) -> list[Place]:
        return sorted(set(self.jl) | set(self.lp))

    def to_json(self, support=None) -> dict:
        places = list(support) if support is not None else self.places()

        def dump(vec):
            return {v.label: str(vec.get(v, ZERO)) for v in places}

        return {"jl": dump(self.jl), "lp": dump(self.lp)}

    @classmethod
    def from_json(cls, data: dict, field: AbelianField = RATIONALS) -> InvariantPair:
        if "field" in data:
            field = AbelianField.from_json(data["field"])
        return cls(field, data.get("jl", {}), data.get("lp", {}))

    def __repr__(self):
        def show(vec):
            return "{" + ", ".join(f"{v.label}: {x}" for v, x in vec.items()) + "}"

        return f"InvariantPair(jl={show(self.jl)}, lp={show(self.lp)})"


# -- individual constraints ------------------------------------------------------


def constraint_away(scenario: ConstraintScenario, v: Place) -> CyclicRational:
    """Required value of inv_v(jl) + inv_v(lp) at a finite place not over p."""
    v = scenario.field.place(v)
    if not v.is_finite or v.residue_char == scenario.p:
        raise ScenarioError(f"{v} is not a finite place away from p")
    return ZERO


def constraint_arch(scenario: ConstraintScenario, v: Place) -> CyclicRational:
    """Required value of inv_v(jl) + inv_v(lp) at an archimedean place.

    This is 1/[C:R(pi)] with R(pi) the completion of K at v: 1/2 at a real
    place and 0 at a complex one.  A real completion means pi is self-dual up
    to a real twist, so the value does not depend on the duality type.
    """
    v = scenario.field.place(v)
    if not v.is_archimedean:
        raise ScenarioError(f"{v} is not archimedean")
    if v.local_kind == "complex":
        if scenario.self_dual:
            raise ScenarioError(f"{scenario.duality_type} scenario at the complex place {v}")
        return ZERO
    return HALF


def constraint_p_sum(scenario: ConstraintScenario) -> CyclicRational:
    """Required value of the sum over v | p of inv_v(jl) + inv_v(lp)."""
    return scenario.field.degree * HALF


def _fibres(scenario: ConstraintScenario, places) -> dict:
    """Group places by residue characteristic (None for infinity)."""
    out: dict = {}
    for v in places:
        out.setdefault(v.residue_char, None)
    full = {}
    for q in out:
        full[q] = scenario.field.places_over(q) if q is not None else scenario.archimedean_places()
    return full


def _bs_fibre_ok(K: AbelianField, fibre, vec: Mapping[Place, CyclicRational]) -> bool:
    values = [vec.get(v, ZERO) for v in fibre]
    orders = {x.order() for x in values}
    if len(orders) != 1:
        return False
    m = orders.pop()
    if m == 1:
        return True
    if roots_of_unity_order(K) % m:
        return False
    if any(v.local_kind == "complex" for v in fibre):
        return False
    for sigma in galois_group(K):
        b = sigma.cyclotomic_exponent(m)
        for v in fibre:
            if vec.get(v, ZERO) != b * vec.get(galois_orbit_action(K, sigma, v), ZERO):
                return False
    return True


def benard_schacher_filter(scenario: ConstraintScenario, vector) -> bool:
    """Check the Benard-Schacher conditions on one invariant vector.

    Every fibre (over a rational prime, or at infinity) met by the keys of
    ``vector`` is checked in full; missing places count as 0.
    """
    K = scenario.field
    vec = _vector(K, vector)
    if not vec:
        return True
    return all(_bs_fibre_ok(K, fibre, vec) for fibre in _fibres(scenario, vec).values())


def torsion_filter(scenario: ConstraintScenario, vector) -> bool:
    """Orders divide gcd(n, p - 1) over p and the torsion cap elsewhere."""
    vec = _vector(scenario.field, vector)
    for v, x in vec.items():
        if v.is_archimedean:
            continue
        bound = scenario.torsion_bound if v.residue_char == scenario.p else scenario.torsion_cap
        if bound % x.order():
            return False
    return True


def _conjecture_failures(scenario: ConstraintScenario, pair: InvariantPair) -> list[str]:
    out = []
    odd = scenario.field.degree % 2 == 1
    for v in pair.places():
        if v.is_archimedean:
            continue
        x, y = pair.jl.get(v, ZERO), pair.lp.get(v, ZERO)
        over_p = v.residue_char == scenario.p
        if scenario.duality_type != "symplectic":
            if over_p and x != y:
                out.append(f"{v}: jl {x} differs from lp {y}")
        elif odd and over_p:
            if 2 * (x - y):
                out.append(f"{v}: jl - lp = {x - y} is not in 1/2 Z")
        elif x != y:
            out.append(f"{v}: jl {x} differs from lp {y}")
    return out


def conjecture_filter(scenario: ConstraintScenario, pair: InvariantPair) -> bool:
    if not scenario.conjecture_mode:
        raise ScenarioError("conjecture mode is off for this scenario")
    return not _conjecture_failures(scenario, pair)


# -- checking a pair ---------------------------------------------------------------


@dataclass(frozen=True)
class ConstraintResult:
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    scenario: ConstraintScenario
    results: dict

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results.values())

    @property
    def first_failure(self) -> str | None:
        return next((name for name, r in self.results.items() if r.status == "fail"), None)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "first_failure": self.first_failure,
            "constraints": {
                name: {"status": r.status, "detail": r.detail, "provenance": PROVENANCE[name]}
                for name, r in self.results.items()
            },
        }


def check_pair(scenario: ConstraintScenario, pair: InvariantPair) -> CheckReport:
    """Evaluate every constraint on the pair and report pass/fail for each."""
    K = scenario.field
    if pair.field != K:
        raise FieldError("pair and scenario have different fields")
    results: dict[str, ConstraintResult] = {}

    def record(name, problems, skipped=False):
        if skipped:
            results[name] = ConstraintResult("skipped", problems)
        else:
            results[name] = ConstraintResult("fail" if problems else "pass", "; ".join(problems))

    problem = scenario.violation()
    record("scenario", [problem] if problem else [])

    arch = []
    for v in scenario.archimedean_places():
        x, y = pair.jl.get(v, ZERO), pair.lp.get(v, ZERO)
        if v.local_kind == "complex":
            if x or y:
                arch.append(f"{v}: complex place carries {x}, {y}")
        elif 2 * x or 2 * y:
            arch.append(f"{v}: invariants {x}, {y} are not in 1/2 Z")
        elif not scenario.violation() and x + y != constraint_arch(scenario, v):
            arch.append(f"{v}: sum {x + y} should be {constraint_arch(scenario, v)}")
    record("arch", arch)

    extra = set(scenario.extra_places())
    away = []
    for v in pair.places():
        if v.is_archimedean or v.residue_char == scenario.p:
            continue
        x, y = pair.jl.get(v, ZERO), pair.lp.get(v, ZERO)
        if v not in extra:
            away.append(f"{v}: outside the declared support but carries {x}, {y}")
        elif x + y != constraint_away(scenario, v):
            away.append(f"{v}: sum {x + y} should be 0")
    record("away", away)

    total = sum((pair.jl.get(v, ZERO) + pair.lp.get(v, ZERO) for v in scenario.places_over_p()), ZERO)
    target = constraint_p_sum(scenario)
    record("p-sum", [] if total == target else [f"sum over p is {total}, required {target}"])

    bs = []
    for name, vec in (("jl", pair.jl), ("lp", pair.lp)):
        for q, fibre in _fibres(scenario, list(vec) + list(scenario.places_over_p())).items():
            if not _bs_fibre_ok(K, fibre, vec):
                bs.append(f"{name} fails over {'infinity' if q is None else q}")
    record("benard-schacher", bs)

    tors = [f"{name} has an entry of too large order" for name, vec in (("jl", pair.jl), ("lp", pair.lp))
            if not torsion_filter(scenario, vec)]
    record("torsion", tors)

    rec = []
    for name, vec in (("jl", pair.jl), ("lp", pair.lp)):
        s = sum(vec.values(), ZERO)
        if s:
            rec.append(f"{name} sums to {s}")
    record("reciprocity", rec)

    if scenario.conjecture_mode:
        record("conjecture", _conjecture_failures(scenario, pair))
    else:
        record("conjecture", "conjecture mode off", skipped=True)
    return CheckReport(scenario, results)


# -- enumeration -------------------------------------------------------------------
#
# Internally invariants are residues mod M = lcm(torsion cap, 2), the value
# k standing for k/M in Q/Z.


@dataclass
class SolutionSet:
    scenario: ConstraintScenario
    solutions: list[InvariantPair]
    status: str  # "consistent" | "inconsistent"
    violated: str | None = None
    detail: str = ""
    forced: dict = field(default_factory=dict)
    p_sum: CyclicRational | None = None
    grid_size: int = 0

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def restricted(self, places) -> set[tuple]:
        """Distinct (jl, lp) value tuples on the given places."""
        places = [self.scenario.field.place(v) for v in places]
        return {
            (tuple(s.jl.get(v, ZERO) for v in places), tuple(s.lp.get(v, ZERO) for v in places))
            for s in self.solutions
        }

    def to_json(self) -> dict:
        support = self.scenario.support()
        active = [c for c in CONSTRAINTS if c != "conjecture" or self.scenario.conjecture_mode]
        return {
            "scenario": self.scenario.to_json(),
            "status": self.status,
            "violated": self.violated,
            "detail": self.detail,
            "support": [v.label for v in support],
            "p_sum": None if self.p_sum is None else str(self.p_sum),
            "forced": {v.label: str(x) for v, x in self.forced.items()},
            "grid_size": self.grid_size,
            "count": len(self.solutions),
            "solutions": [s.to_json(support) for s in self.solutions],
            "provenance": {c: PROVENANCE[c] for c in active},
        }


class _Engine:
    def __init__(self, scenario: ConstraintScenario):
        self.sc = scenario
        self.K = scenario.field
        self.M = lcm(scenario.torsion_cap, 2)
        self.half = self.M // 2
        self.step = self.M // scenario.torsion_cap
        self.w = roots_of_unity_order(self.K)
        self.galois = galois_group(self.K)
        self.work = 0

    def order(self, k: int) -> int:
        return self.M // gcd(k, self.M)

    def to_q(self, k: int) -> CyclicRational:
        return CyclicRational(k, self.M)

    # candidate values for one vector at one place
    def values(self, v: Place, active) -> list[int]:
        if v.is_archimedean:
            return [0] if v.local_kind == "complex" else [0, self.half]
        vals = [k * self.step for k in range(self.sc.torsion_cap)]
        if "torsion" in active and v.residue_char == self.sc.p:
            vals = [k for k in vals if self.sc.torsion_bound % self.order(k) == 0]
        return vals

    def pair_ok(self, v: Place, x: int, y: int, active) -> bool:
        """Constraints that involve jl and lp at the single place v."""
        sc, M = self.sc, self.M
        if v.is_archimedean:
            if "arch" in active and v.local_kind == "real":
                return (x + y) % M == self.half
            return True
        if v.residue_char != sc.p:
            # the grid pairs lp = -jl at extra places
            if (x + y) % M:
                return False
            if "conjecture" in active and sc.duality_type == "symplectic":
                return x == y
            return True
        if "conjecture" in active:
            if sc.duality_type != "symplectic" or self.K.degree % 2 == 0:
                return x == y
            return (x - y) % self.half == 0
        return True

    def bs_vectors(self, fibre, values) -> list[tuple[int, ...]]:
        """All vectors on the fibre, with entries in ``values``, meeting Benard-Schacher.

        Such a vector is determined by its entry x0 at the first place: the
        entry at sigma(P) is b^-1 x0, where sigma(zeta_m) = zeta_m^b.
        """
        base = fibre[0]
        if base.local_kind == "complex":
            return [(0,) * len(fibre)]
        out = []
        for x0 in values:
            m = self.order(x0)
            if self.w % m:
                continue
            vec = {base: x0}
            for sigma in self.galois:
                target = galois_orbit_action(self.K, sigma, base)
                if target not in vec:
                    b = sigma.cyclotomic_exponent(m) if m > 1 else 1
                    vec[target] = pow(b, -1, m) * x0 % self.M
            cand = tuple(vec[v] for v in fibre)
            self.work += 1
            if all(k in values for k in cand) and self.bs_ok(fibre, cand):
                out.append(cand)
        return out

    def bs_ok(self, fibre, cand) -> bool:
        orders = {self.order(k) for k in cand}
        if len(orders) != 1:
            return False
        m = orders.pop()
        if m == 1:
            return True
        if self.w % m:
            return False
        index = dict(zip(fibre, range(len(fibre))))
        for sigma in self.galois:
            b = sigma.cyclotomic_exponent(m)
            for v in fibre:
                if cand[index[v]] != b * cand[index[galois_orbit_action(self.K, sigma, v)]] % self.M:
                    return False
        return True

    def blocks(self, active):
        """Per fibre: list of admissible (jl, lp) local vectors, or sum sets when BS is off.

        Returns a list of (fibre, entries) where entries maps
        (sum of jl, sum of lp) -> list of (jl tuple, lp tuple); without
        Benard-Schacher the lists are left empty and only the sums kept.
        """
        sc = self.sc
        fibres = [sc.places_over_p()]
        fibres += [sc.field.places_over(q) for q in sc.extra_support]
        arch = sc.archimedean_places()
        fibres.append(arch)
        out = []
        for fibre in fibres:
            over_p = fibre[0].is_finite and fibre[0].residue_char == sc.p
            if "benard-schacher" in active:
                entries = self._explicit_block(fibre, active, over_p)
            else:
                entries = self._sum_block(fibre, active, over_p)
            out.append((fibre, entries))
        return out

    def _explicit_block(self, fibre, active, over_p):
        M = self.M
        vals = [self.values(v, active) for v in fibre]
        common = vals[0]
        jls = self.bs_vectors(fibre, common)
        if fibre[0].is_finite and not over_p:
            pairs = ((j, tuple(-k % M for k in j)) for j in jls)
        else:
            pairs = product(jls, jls)
        target = self.p_target() if over_p and "p-sum" in active else None
        entries: dict = {}
        for j, l in pairs:
            self.work += 1
            if not all(self.pair_ok(v, x, y, active) for v, x, y in zip(fibre, j, l)):
                continue
            sj, sl = sum(j) % M, sum(l) % M
            if target is not None and (sj + sl) % M != target:
                continue
            entries.setdefault((sj, sl), []).append((j, l))
        return entries

    def _sum_block(self, fibre, active, over_p):
        M = self.M
        sums = {(0, 0)}
        for v in fibre:
            local = [
                (x, y)
                for x in self.values(v, active)
                for y in self.values(v, active)
                if self.pair_ok(v, x, y, active)
            ]
            self.work += len(local) * len(sums)
            sums = {((a + x) % M, (b + y) % M) for a, b in sums for x, y in local}
        if over_p and "p-sum" in active:
            t = self.p_target()
            sums = {s for s in sums if (s[0] + s[1]) % M == t}
        return {s: [] for s in sums}

    def p_target(self) -> int | None:
        t = constraint_p_sum(self.sc)
        if self.M % t.order():
            return -1  # unreachable with this cap
        return t.numerator * (self.M // t.denominator)

    def feasible(self, active) -> bool:
        blocks = self.blocks(active)
        if any(not entries for _, entries in blocks):
            return False
        if "reciprocity" not in active:
            return True
        reach = {(0, 0)}
        for _, entries in blocks:
            reach = {((a + x) % self.M, (b + y) % self.M) for a, b in reach for x, y in entries}
        return (0, 0) in reach

    def solutions(self, max_candidates: int):
        active = set(CONSTRAINTS)
        if not self.sc.conjecture_mode:
            active.discard("conjecture")
        blocks = self.blocks(active)
        M = self.M
        # counts of completions from block i onwards reaching the remaining sum
        suffix = [dict() for _ in range(len(blocks) + 1)]
        suffix[-1] = {(0, 0): 1}
        for i in range(len(blocks) - 1, -1, -1):
            acc: dict = {}
            for (x, y), items in blocks[i][1].items():
                for (a, b), c in suffix[i + 1].items():
                    key = ((x + a) % M, (y + b) % M)
                    acc[key] = acc.get(key, 0) + c * len(items)
            suffix[i] = acc
        count = suffix[0].get((0, 0), 0)
        if self.work + count > max_candidates:
            raise SearchSpaceError(self.work + count, max_candidates)
        results = []

        def walk(i, need, chosen):
            if i == len(blocks):
                results.append(list(chosen))
                return
            for (x, y), items in blocks[i][1].items():
                rest = ((need[0] - x) % M, (need[1] - y) % M)
                if suffix[i + 1].get(rest, 0):
                    for item in items:
                        chosen.append(item)
                        walk(i + 1, rest, chosen)
                        chosen.pop()

        walk(0, (0, 0), [])
        pairs = []
        for combo in results:
            jl, lp = {}, {}
            for (fibre, _), (j, l) in zip(blocks, combo):
                for v, x, y in zip(fibre, j, l):
                    jl[v] = self.to_q(x)
                    lp[v] = self.to_q(y)
            pairs.append(InvariantPair(self.K, jl, lp))
        return pairs


def _sort_key(pair: InvariantPair, support):
    return (
        tuple(pair.jl.get(v, ZERO).as_fraction() for v in support),
        tuple(pair.lp.get(v, ZERO).as_fraction() for v in support),
    )


def enumerate_solutions(
    scenario: ConstraintScenario, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> SolutionSet:
    """All invariant pairs on the declared support that satisfy every active constraint.

    Solutions are listed in lexicographic order of their invariant vectors
    (support places in label order, jl before lp).  When there are none, the
    status names the first constraint, in the fixed order of ``CONSTRAINTS``,
    whose addition makes the system unsatisfiable.
    """
    result = SolutionSet(scenario, [], "inconsistent", grid_size=scenario.grid_size())
    problem = scenario.violation()
    if problem:
        result.violated, result.detail = "scenario", problem
        return result
    result.p_sum = constraint_p_sum(scenario)
    engine = _Engine(scenario)
    names = [c for c in CONSTRAINTS[1:] if c != "conjecture" or scenario.conjecture_mode]
    solutions = engine.solutions(max_candidates)
    if not solutions:
        for k in range(len(names)):
            if not _Engine(scenario).feasible(set(names[: k + 1])):
                result.violated = names[k]
                result.detail = f"no invariant pair survives once '{names[k]}' is imposed"
                break
        else:
            raise AssertionError("empty solution set but every constraint prefix is feasible")
        return result
    support = scenario.support()
    solutions.sort(key=lambda s: _sort_key(s, support))
    result.solutions = solutions
    result.status = "consistent"
    result.forced = _forced(scenario, solutions)
    return result


def _forced(scenario: ConstraintScenario, solutions) -> dict[Place, CyclicRational]:
    out = {}
    for v in scenario.support():
        sums = {s.jl.get(v, ZERO) + s.lp.get(v, ZERO) for s in solutions}
        if len(sums) == 1:
            out[v] = sums.pop()
    return out


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
