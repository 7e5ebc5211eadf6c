import numpy as np
import pytest

from brauerkit.group_reps import GroupError, builtin, character_table
from brauerkit.group_reps.characters import dixon_prime, inner_product
from brauerkit.group_reps.cyclotomic import CyclotomicNumber
from brauerkit.group_reps.groups import FiniteGroup
from groups_extra import c3_times_c3, dicyclic12, frobenius21
from oracles import numeric_character_table

GROUPS = {name: (lambda name=name: builtin(name)) for name in
          ["C1", "C2", "C5", "C7", "C8", "C12", "D3", "D4", "D5", "D6", "Q8", "S3", "S4", "A4", "A5"]}
GROUPS.update({"F21": frobenius21, "C3xC3": c3_times_c3, "Dic3": dicyclic12})


@pytest.fixture(scope="module", params=list(GROUPS))
def table(request):
    return character_table(GROUPS[request.param]())


def _complex_rows(t):
    return np.array([[complex(x) for x in row] for row in t.rows()])


def test_matches_floating_point_table(table):
    exact = _complex_rows(table)
    approx = np.array(numeric_character_table(table.group))
    assert exact.shape == approx.shape
    unmatched = list(range(len(approx)))
    for row in exact:
        hit = next(i for i in unmatched if np.allclose(approx[i], row, atol=1e-6))
        unmatched.remove(hit)


def test_orthogonality(table):
    assert table.check_orthogonality()
    n = table.group.order
    rows = table.rows()
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            assert inner_product(table, a, b) == (1 if i == j else 0)
    assert sum(d * d for d in table.degrees()) == n
    assert all(n % d == 0 for d in table.degrees())


def test_gram_matrices_are_exact(table):
    row, col = table.gram_matrices()
    n, r = table.group.order, len(table)
    assert np.array_equal(row[:, :, 0], n * np.eye(r, dtype=int))
    assert not row[:, :, 1:].any()
    assert np.array_equal(col[:, :, 0], np.diag([n // h for h in table.class_sizes]))


def test_corrupted_table_fails_orthogonality():
    t = character_table(builtin("S3"))
    t.multiplicities[2, 1] = t.multiplicities[1, 1]
    assert not t.check_orthogonality()


def test_q8_table():
    t = character_table(builtin("Q8"))
    assert t.degrees() == [1, 1, 1, 1, 2]
    assert [str(v) for v in t[4].values] == ["2", "-2", "0", "0", "0"]
    assert t.class_sizes == [1, 1, 2, 2, 2]


def test_cyclic_values_are_roots_of_unity():
    t = character_table(builtin("C4"))
    z = CyclotomicNumber.root(4)
    assert t[1].values == [1, z, -1, -z]
    assert t.exponent == 4


def test_dixon_prime():
    for n, e in [(8, 4), (60, 30), (120, 60), (21, 21)]:
        ell = dixon_prime(n, e)
        assert (ell - 1) % e == 0
        assert ell > 2 * n**1.5


@pytest.mark.parametrize(
    "table, message",
    [
        ([[0, 1], [1, 1]], "inverse"),
        ([[0, 1], [0, 1]], "identity"),
        ([[0, 1, 2], [1, 0, 2], [2, 2, 0]], "associative"),
        ([[0, 1], [1, 2]], "range"),
        ([], "non-empty"),
    ],
)
def test_not_a_group(table, message):
    with pytest.raises(GroupError, match="not a group") as err:
        FiniteGroup(table)
    assert message in str(err.value)


def test_order_cap_and_json():
    with pytest.raises(GroupError):
        builtin("C300")
    with pytest.raises(GroupError):
        builtin("X4")
    G = builtin("D4")
    assert FiniteGroup.from_json(G.to_json()).order == 8
    with pytest.raises(GroupError):
        FiniteGroup.from_json({"order": 9, "table": G.to_json()["table"]})
