"""
Hamilton's quaternions and their splitting fields
=================================================

The quaternion algebra (-1, -1) over Q is ramified at 2 and at infinity.
This script computes its Hasse invariants, checks them against a brute
force solubility search, and asks which quadratic fields split it.
"""

from brauerkit import hamilton_quaternions, hilbert_symbol, local_solubility_oracle, quadratic_field, splits_over
from brauerkit.brauer import index
from brauerkit.quaternion import quaternion_class, ramified_places

# %%
# Invariants of (-1, -1)
# ----------------------
# One half at 2 and at infinity, zero elsewhere, so the index is 2.
H = quaternion_class(-1, -1)
print(H, "index", index(H))
assert H == hamilton_quaternions()

# %%
# The closed-form Hilbert symbol agrees with a direct search for solutions
# of z^2 = a x^2 + b y^2 in Q_p.
for v in ["inf", 2, 3, 5, 7]:
    print(v, hilbert_symbol(-1, -1, v), local_solubility_oracle(-1, -1, v))

# %%
# Ramification always happens at an even number of places.
for a, b in [(-1, 3), (2, 5), (-2, -5), (6, -7)]:
    print((a, b), ramified_places(a, b))

# %%
# Quadratic splitting fields
# --------------------------
# Over Q(sqrt d) the invariant at v is multiplied by the local degree.  The
# algebra splits exactly when the local degree is 2 both at infinity and at 2:
# d < 0, and 2 does not split in Q(sqrt d), which means d is not 1 mod 8.
rows = []
for d in range(-20, 21):
    try:
        K = quadratic_field(d)
    except ValueError:
        continue
    rows.append((d, d % 8, bool(splits_over(H, K))))
for d, r, s in rows:
    print(f"d = {d:3d}  d mod 8 = {r}  splits: {s}")

# %%
# The rule "d < 0 and d = 2, 3 mod 4" misses d = -3, -11, -19: for those,
# 2 is inert in Q(sqrt d), so the local degree at 2 is also 2.
for d in (-3, -11, -19):
    res = splits_over(H, quadratic_field(d))
    print(d, res.splits, res.certificate)
