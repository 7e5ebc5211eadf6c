import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primerange

from brauerkit.brauer import index
from brauerkit.cyclic_rationals import HALF
from brauerkit.quaternion import hilbert_symbol, local_solubility_oracle, quaternion_class, ramified_places

nonzero = st.integers(-500, 500).filter(bool)
places = st.sampled_from(["inf", 2, 3, 5, 7, 11, 13])


@given(nonzero, nonzero, places)
def test_symmetry(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@given(nonzero, nonzero, nonzero, places)
def test_bimultiplicative(a, b, c, v):
    assert hilbert_symbol(a * c, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v)


@given(nonzero, places)
def test_norm_forms(a, v):
    assert hilbert_symbol(a, -a, v) == 1
    if a != 1:
        assert hilbert_symbol(a, 1 - a, v) == 1


@given(nonzero, nonzero, st.integers(1, 20), places)
def test_square_classes(a, b, c, v):
    assert hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v)


@given(nonzero, nonzero)
def test_reciprocity(a, b):
    bad = sorted(ramified_places(a, b), key=str)
    assert len(bad) % 2 == 0
    cls = quaternion_class(a, b)
    assert index(cls) == (2 if bad else 1)
    assert all(x == HALF for x in cls.invariants.values())


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (-1, -1, ["2", "inf"]),
        (-1, 3, ["3", "2"]),
        (2, 5, ["2", "5"]),
        (1, 7, []),
        (-2, -5, ["5", "inf"]),
    ],
)
def test_known_ramification(a, b, expected):
    assert sorted(str(v) for v in ramified_places(a, b)) == sorted(expected)


def test_hamilton_class():
    H = quaternion_class(-1, -1)
    assert {v.label: str(x) for v, x in H.invariants.items()} == {"2:0": "1/2", "inf:real:0": "1/2"}


@pytest.mark.parametrize("p", list(primerange(2, 20)))
def test_oracle_matches_closed_form_near_p(p):
    vals = [u * p**k for u in (1, -1, 2, -2, 3, -3, 5, -5, 7) for k in (0, 1, 2)]
    for a in vals:
        for b in vals:
            assert local_solubility_oracle(a, b, p) == hilbert_symbol(a, b, p), (a, b, p)


def test_bad_input():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, 2)
    with pytest.raises(ValueError):
        hilbert_symbol(1, 1, 4)
    with pytest.raises(ValueError):
        quaternion_class(3, 0)
