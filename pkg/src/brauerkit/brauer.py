"""Brauer classes over abelian fields, stored as local invariant vectors.

A class is valid when its archimedean invariants lie in 1/2 Z/Z (and vanish
at complex places) and all invariants sum to zero.  Over a number field the
index equals the exponent, so :func:`index` is the lcm of the local orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .abelian_fields import RATIONALS, AbelianField, FieldError, Place, place_of
from .cyclic_rationals import HALF, ZERO, CyclicRational, lcm


class InvalidClassError(ValueError):
    """Raised when an invariant vector does not define a Brauer class."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


def _normalize(field: AbelianField, raw) -> dict[Place, CyclicRational]:
    out: dict[Place, CyclicRational] = {}
    items = raw.items() if isinstance(raw, Mapping) else raw
    for key, value in items:
        v = field.place(key)
        x = CyclicRational.coerce(value)
        if v in out:
            raise ValueError(f"place {v} given twice")
        if x:
            out[v] = x
    return out


def _check(field: AbelianField, inv: Mapping[Place, CyclicRational]) -> None:
    total = ZERO
    for v, x in inv.items():
        if v.is_archimedean:
            if v.local_kind == "complex" and x:
                raise InvalidClassError("complex place nonzero", f"{v} has {x}")
            if 2 * x:
                raise InvalidClassError("archimedean overflow", f"{v} has {x}")
        total += x
    if total:
        raise InvalidClassError("reciprocity failure", f"invariants sum to {total}")


@dataclass(frozen=True, eq=False)
class CsaClass:
    base_field: AbelianField
    invariants: Mapping[Place, CyclicRational]

    def __post_init__(self):
        inv = {v: x for v, x in self.invariants.items() if x}
        object.__setattr__(self, "invariants", dict(sorted(inv.items())))
        _check(self.base_field, self.invariants)

    def __getitem__(self, v) -> CyclicRational:
        return self.invariants.get(self.base_field.place(v), ZERO)

    def __eq__(self, other):
        if not isinstance(other, CsaClass):
            return NotImplemented
        return self.base_field == other.base_field and self.invariants == other.invariants

    def __hash__(self):
        return hash((self.base_field, tuple(self.invariants.items())))

    def __mul__(self, other):
        return tensor(self, other)

    def __invert__(self):
        return opposite(self)

    @property
    def is_trivial(self) -> bool:
        return not self.invariants

    def support(self) -> list[Place]:
        return list(self.invariants)

    def to_json(self) -> dict:
        return {
            "field": self.base_field.to_json(),
            "inv": {v.label: str(x) for v, x in self.invariants.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> CsaClass:
        field = AbelianField.from_json(data["field"]) if "field" in data else RATIONALS
        return validate(data.get("inv", {}), field)

    def __repr__(self):
        body = ", ".join(f"{v.label}: {x}" for v, x in self.invariants.items())
        return f"CsaClass({{{body}}} over conductor {self.base_field.conductor})"


def validate(raw, field: AbelianField = RATIONALS) -> CsaClass:
    """Build a class from a map place -> invariant, or raise InvalidClassError.

    Keys may be :class:`Place` objects or labels such as ``"2:0"``,
    ``"inf:real:0"``; bare ``"2"`` or ``"inf"`` work when unambiguous.
    """
    return CsaClass(field, _normalize(field, raw))


def trivial(field: AbelianField = RATIONALS) -> CsaClass:
    return CsaClass(field, {})


def tensor(a: CsaClass, b: CsaClass) -> CsaClass:
    if a.base_field != b.base_field:
        raise FieldError("base field mismatch")
    inv = dict(a.invariants)
    for v, x in b.invariants.items():
        inv[v] = inv.get(v, ZERO) + x
    return CsaClass(a.base_field, inv)


def opposite(a: CsaClass) -> CsaClass:
    return CsaClass(a.base_field, {v: -x for v, x in a.invariants.items()})


def index(a: CsaClass) -> int:
    return lcm(*(x.order() for x in a.invariants.values()))


def restrict_place(L: AbelianField, w: Place, K: AbelianField) -> Place:
    """The place of the subfield K lying under the place w of L."""
    return place_of(K, w.residue_char, L.coset_rep(w))


def relative_local_degree(L: AbelianField, w: Place, K: AbelianField) -> int:
    return L.local_degree(w) // K.local_degree(restrict_place(L, w, K))


@dataclass(frozen=True)
class SplittingResult:
    splits: bool
    extended: CsaClass
    certificate: tuple  # (place of base, place of L, local degree, extended invariant)

    def __bool__(self):
        return self.splits


def extend(a: CsaClass, L: AbelianField) -> CsaClass:
    """Image of ``a`` under Br(K) -> Br(L): multiply by local degrees."""
    return _extend(a, L)[0]


def _extend(a: CsaClass, L: AbelianField):
    K = a.base_field
    if not L.contains(K):
        raise FieldError(f"{L!r} does not contain {K!r}")
    inv: dict[Place, CyclicRational] = {}
    cert = []
    for v, x in a.invariants.items():
        over = L.places_over(v.residue_char) if v.is_finite else L.archimedean_places()
        for w in over:
            if restrict_place(L, w, K) != v:
                continue
            deg = relative_local_degree(L, w, K)
            y = deg * x
            cert.append((v.label, w.label, deg, str(y)))
            if y:
                inv[w] = y
    return CsaClass(L, inv), tuple(cert)


def splits_over(a: CsaClass, L: AbelianField) -> SplittingResult:
    """Decide whether ``a`` becomes trivial over the extension L.

    The result is truthy iff it splits; ``certificate`` lists, for every
    place w of L over a place v in the support of ``a``, the local degree
    [L_w:K_v] and the extended invariant.
    """
    ext, cert = _extend(a, L)
    return SplittingResult(ext.is_trivial, ext, cert)


def hamilton_quaternions() -> CsaClass:
    """The class of (-1,-1) over Q: invariant 1/2 at 2 and at infinity."""
    return validate({"2": HALF, "inf": HALF})
