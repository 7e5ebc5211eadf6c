"""Characters of finite groups and their rationality invariants."""

from .characters import Character, CharacterTable, character_table
from .cyclotomic import CyclotomicNumber
from .groups import FiniteGroup, GroupError, alternating, builtin, cyclic, dihedral, quaternion_group, symmetric
from .rationality import (
    EnvelopingCenter,
    MatrixRepresentation,
    enveloping_center_check,
    field_of_rationality,
    frobenius_schur,
    quaternion_structure,
    rational_model,
    schur_index_quaternion_case,
)
