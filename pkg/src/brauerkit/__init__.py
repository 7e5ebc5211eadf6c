"""Exact Brauer-group and rationality computations over abelian number fields."""

from .abelian_fields import (
    RATIONALS,
    AbelianField,
    FieldError,
    GaloisElement,
    Place,
    cyclotomic_field,
    decompose_prime,
    galois_group,
    galois_orbit_action,
    make_field,
    quadratic_field,
    roots_of_unity_order,
)
from .brauer import (
    CsaClass,
    InvalidClassError,
    extend,
    hamilton_quaternions,
    index,
    opposite,
    splits_over,
    tensor,
    trivial,
    validate,
)
from .cyclic_rationals import HALF, ZERO, CyclicRational
from .quaternion import hilbert_symbol, local_solubility_oracle, quaternion_class, ramified_places

__version__ = "0.1.0"
