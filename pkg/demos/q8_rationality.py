"""
A rational character that is not realised over Q
================================================

The quaternion group Q8 has a 2-dimensional character with rational values,
yet no representation with rational matrices affords it.  The obstruction
is the Brauer class of Hamilton's quaternions.
"""

from brauerkit.group_reps import (
    MatrixRepresentation,
    builtin,
    character_table,
    enveloping_center_check,
    field_of_rationality,
    frobenius_schur,
    schur_index_quaternion_case,
)
from brauerkit.group_reps.cyclotomic import CyclotomicNumber

# %%
# The character table, computed exactly by Dixon's method.
G = builtin("Q8")
table = character_table(G)
for chi in table:
    print([str(v) for v in chi.values])

# %%
# The 2-dimensional character is rational and symplectic.
chi = table[4]
print("Q(chi) conductor:", field_of_rationality(chi).conductor)
print("Frobenius-Schur indicator:", frobenius_schur(chi))

# %%
# Its simple component of Q[G] is a quaternion algebra; the search finds a
# basis with i^2 = a, j^2 = b, ij = -ji and reads off the Brauer class.
print(schur_index_quaternion_case(G, chi))

# %%
# Over Q(sqrt -2) the representation can be written down explicitly, and its
# enveloping algebra has centre Q, the character field.
b = CyclotomicNumber.root(8, 1) + CyclotomicNumber.root(8, 3)  # b^2 = -2
rho = MatrixRepresentation.from_generators(G, {2: [[1, b], [b, -1]], 4: [[b, -1], [-1, -b]]})
print(enveloping_center_check(G, rho).to_json())

# %%
# The converse direction fails for reducible representations: C4 acting on
# Q^2 by a rotation has a rational character, but its enveloping algebra is Q(i).
C4 = builtin("C4")
rotation = MatrixRepresentation.from_generators(C4, {1: [[0, 1], [-1, 0]]})
res = enveloping_center_check(C4, rotation)
print("centre conductor", res.center_field.conductor, "character field conductor", res.character_field.conductor)
