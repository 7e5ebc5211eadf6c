import json
from itertools import product

import pytest

from brauerkit.abelian_fields import RATIONALS, make_field, quadratic_field
from brauerkit.cyclic_rationals import HALF, ZERO, CyclicRational
from brauerkit.langlands_constraints import (
    CONSTRAINTS,
    ConstraintScenario,
    InvariantPair,
    ScenarioError,
    SearchSpaceError,
    benard_schacher_filter,
    check_pair,
    conjecture_filter,
    constraint_arch,
    constraint_away,
    constraint_p_sum,
    enumerate_solutions,
    torsion_filter,
)
from oracles import BATTERY, naive_enumerate, scenario_battery

QI = make_field(4)
Q5 = quadratic_field(5)
q = CyclicRational


@pytest.fixture(scope="module")
def battery():
    return [(sc, enumerate_solutions(sc)) for sc in scenario_battery()]


# -- single constraints -------------------------------------------------------------


def test_away_and_arch():
    sc = ConstraintScenario(2, 3, RATIONALS, "symplectic")
    assert constraint_away(sc, "5") == ZERO
    assert constraint_arch(sc, "inf") == HALF
    with pytest.raises(ScenarioError):
        constraint_away(sc, "3")
    with pytest.raises(ScenarioError):
        constraint_away(sc, "inf")
    with pytest.raises(ScenarioError):
        constraint_arch(sc, "5")
    assert constraint_arch(ConstraintScenario(2, 5, QI), "inf") == ZERO
    # a real completion makes pi self-dual up to a real twist, whatever the type
    assert constraint_arch(ConstraintScenario(2, 3), "inf") == HALF
    with pytest.raises(ScenarioError):
        constraint_arch(ConstraintScenario(2, 5, QI, "orthogonal"), "inf")


def test_extra_support_pairs():
    sc = ConstraintScenario(2, 3, RATIONALS, "symplectic", extra_support=(7,))
    ok = InvariantPair(RATIONALS, {"3": HALF, "inf": HALF, "7": q(1, 3)}, {"7": q(2, 3)})
    assert check_pair(sc, ok).results["away"].status == "pass"
    bad = InvariantPair(RATIONALS, {"3": HALF, "inf": HALF, "7": q(1, 3)}, {"7": q(1, 3)})
    assert check_pair(sc, bad).results["away"].status == "fail"


def test_p_sum_by_degree():
    assert constraint_p_sum(ConstraintScenario(2, 3)) == HALF
    assert constraint_p_sum(ConstraintScenario(2, 3, QI)) == ZERO
    assert constraint_p_sum(ConstraintScenario(2, 3, BATTERY["cubic7"])) == HALF


def test_benard_schacher_examples():
    sc = ConstraintScenario(4, 5, QI)
    assert benard_schacher_filter(sc, {"5:0": q(1, 4), "5:1": q(3, 4)})
    assert not benard_schacher_filter(sc, {"5:0": q(1, 4), "5:1": q(1, 4)})
    assert not benard_schacher_filter(sc, {"5:0": q(1, 4), "5:1": HALF})
    assert benard_schacher_filter(sc, {"5:0": HALF, "5:1": HALF})
    # zeta_3 does not lie in Q(i)
    assert not benard_schacher_filter(ConstraintScenario(3, 7, QI), {"5:0": q(1, 3), "5:1": q(2, 3)})
    real = ConstraintScenario(2, 11, Q5, "symplectic")
    assert benard_schacher_filter(real, {"11:0": HALF, "11:1": HALF})
    assert not benard_schacher_filter(real, {"11:0": HALF})
    assert not benard_schacher_filter(ConstraintScenario(2, 3), {"3": q(1, 4)})
    assert benard_schacher_filter(ConstraintScenario(2, 3), {"3": HALF})


def test_benard_schacher_twist_on_gaussian_places():
    # sigma_3 swaps the two places over 5 and acts on zeta_4 by cubing
    for a in range(4):
        for b in range(4):
            vec = {"5:0": q(a, 4), "5:1": q(b, 4)}
            expected = q(a, 4) == 3 * q(b, 4)
            assert benard_schacher_filter(ConstraintScenario(4, 5, QI), vec) == expected


def test_torsion_examples():
    assert torsion_filter(ConstraintScenario(2, 3), {"3": HALF})
    assert not torsion_filter(ConstraintScenario(2, 3), {"3": q(1, 4)})
    assert not torsion_filter(ConstraintScenario(3, 2), {"2": q(1, 3)})
    assert torsion_filter(ConstraintScenario(4, 5), {"5": q(1, 4)})


def test_conjecture_examples():
    orth = ConstraintScenario(2, 5, Q5, "orthogonal", conjecture_mode=True)
    assert not conjecture_filter(orth, InvariantPair(Q5, {"5": HALF}, {}))
    assert conjecture_filter(orth, InvariantPair(Q5, {"5": HALF}, {"5": HALF}))
    sym = ConstraintScenario(2, 3, RATIONALS, "symplectic", conjecture_mode=True)
    assert conjecture_filter(sym, InvariantPair(RATIONALS, {"3": ZERO}, {"3": HALF}))
    sym2 = ConstraintScenario(2, 3, quadratic_field(2), "symplectic", conjecture_mode=True)
    assert not conjecture_filter(sym2, InvariantPair(sym2.field, {"3": HALF}, {}))
    with pytest.raises(ScenarioError):
        conjecture_filter(sym.with_conjecture(False), InvariantPair(RATIONALS, {}, {}))


# -- enumeration ---------------------------------------------------------------------


def _at(solutions, label):
    v = solutions.scenario.field.place(label)
    return sorted((str(s.jl.get(v, ZERO)), str(s.lp.get(v, ZERO))) for s in solutions)


def test_easy_corollary_example():
    res = enumerate_solutions(ConstraintScenario(2, 3, RATIONALS, "symplectic"))
    assert res.status == "consistent"
    assert res.p_sum == HALF
    assert _at(res, "3") == [("0", "1/2"), ("1/2", "0")]
    assert res.forced[RATIONALS.place("3")] == HALF


def test_real_field_not_self_dual():
    res = enumerate_solutions(ConstraintScenario(2, 3))
    assert _at(res, "3") == [("0", "1/2"), ("1/2", "0")]
    assert res.forced[RATIONALS.place("inf")] == HALF


def test_gaussian_field_over_five():
    res = enumerate_solutions(ConstraintScenario(2, 5, QI))
    assert res.p_sum == ZERO
    # 5 splits in Q(i): there are two places over 5, not one
    assert len(QI.places_over(5)) == 2
    for s in res:
        assert sum((s.jl.get(v, ZERO) + s.lp.get(v, ZERO) for v in QI.places_over(5)), ZERO) == ZERO


def test_inert_prime_example():
    # 3 is inert in Q(i), the single-place situation
    res = enumerate_solutions(ConstraintScenario(2, 3, QI))
    assert res.status == "consistent"
    assert res.forced[QI.place("3")] == ZERO


def test_dimension_one():
    res = enumerate_solutions(ConstraintScenario(1, 5, QI))
    assert [(s.jl, s.lp) for s in res] == [({}, {})]
    for p in (2, 3, 5):
        res = enumerate_solutions(ConstraintScenario(1, p))
        assert res.status == "inconsistent"
        assert res.violated in ("p-sum", "torsion")


def test_scenario_errors():
    res = enumerate_solutions(ConstraintScenario(2, 5, QI, "orthogonal"))
    assert res.violated == "scenario"
    with pytest.raises(ScenarioError):
        ConstraintScenario(2, 4)
    with pytest.raises(ScenarioError):
        ConstraintScenario(0, 3)
    with pytest.raises(ScenarioError):
        ConstraintScenario(2, 3, duality_type="unitary")
    with pytest.raises(ScenarioError):
        ConstraintScenario(2, 3, extra_support=(3,))
    report = check_pair(ConstraintScenario(2, 5, QI, "orthogonal"), InvariantPair(QI, {}, {}))
    assert report.first_failure == "scenario"


def test_conjecture_only_cuts(battery):
    theorem = {}
    for sc, res in battery:
        key = sc.with_conjecture(False)
        if not sc.conjecture_mode:
            theorem[key] = set(res.solutions)
    for sc, res in battery:
        if sc.conjecture_mode:
            assert set(res.solutions) <= theorem[sc.with_conjecture(False)]


def test_self_dual_entries(battery):
    for sc, res in battery:
        if not sc.self_dual:
            continue
        for s in res:
            for vec in (s.jl, s.lp):
                assert all(2 * x == ZERO for x in vec.values())
                assert len({vec.get(v, ZERO) for v in sc.places_over_p()}) == 1


def test_odd_equation(battery):
    for sc, res in battery:
        if sc.self_dual and len(sc.places_over_p()) % 2:
            for s in res:
                for v in sc.places_over_p():
                    assert s.jl.get(v, ZERO) + s.lp.get(v, ZERO) == sc.field.degree * HALF


def test_single_place_forced_sum(battery):
    for sc, res in battery:
        over = sc.places_over_p()
        if len(over) == 1:
            for s in res:
                assert s.jl.get(over[0], ZERO) + s.lp.get(over[0], ZERO) == sc.field.degree * HALF


def test_solutions_are_valid_and_sorted(battery):
    for sc, res in battery:
        for s in res:
            s.classes()
        keys = [
            tuple(x.as_fraction() for vec in (s.jl, s.lp) for x in (vec.get(v, ZERO) for v in sc.support()))
            for s in res
        ]
        assert keys == sorted(keys)
        if res.status == "inconsistent":
            assert res.violated in CONSTRAINTS and not res.solutions


@pytest.mark.parametrize("name", list(BATTERY))
def test_matches_generate_and_test(name):
    for sc in scenario_battery():
        if sc.field is not BATTERY[name] or sc.n != 2 or sc.grid_size() > 10**4:
            continue
        expected, violated = naive_enumerate(sc)
        res = enumerate_solutions(sc)
        got = [
            (tuple(s.jl.get(v, ZERO) for v in sc.support()), tuple(s.lp.get(v, ZERO) for v in sc.support()))
            for s in res
        ]
        assert got == expected, sc
        assert res.violated == violated, sc


@pytest.mark.parametrize(
    "sc",
    [
        ConstraintScenario(2, 3, RATIONALS, "symplectic"),
        ConstraintScenario(2, 3, RATIONALS, "symplectic", True),
        ConstraintScenario(2, 5, QI),
        ConstraintScenario(4, 5, QI),
        ConstraintScenario(2, 5, Q5, "orthogonal", True),
        ConstraintScenario(2, 3, RATIONALS, "not_self_dual", extra_support=(5,)),
    ],
    ids=str,
)
def test_check_pair_round_trip(sc):
    """check_pair accepts exactly the enumerated pairs on the whole grid."""
    found = set(enumerate_solutions(sc).solutions)
    support = sc.support()
    cap = sc.torsion_cap

    def values(v):
        if v.is_archimedean:
            return [ZERO] if v.local_kind == "complex" else [ZERO, HALF]
        return [q(k, cap) for k in range(cap)]

    extra = set(sc.extra_places())
    free = [v for v in support if v not in extra]
    accepted = set()
    for combo in product(*([values(v) for v in free] * 2 + [values(v) for v in extra])):
        jl = dict(zip(free, combo[: len(free)]))
        lp = dict(zip(free, combo[len(free) : 2 * len(free)]))
        for v, x in zip(extra, combo[2 * len(free) :]):
            jl[v], lp[v] = x, -x
        pair = InvariantPair(sc.field, jl, lp)
        if check_pair(sc, pair).passed:
            accepted.add(pair)
    assert accepted == found


def test_check_pair_examples():
    sc = ConstraintScenario(2, 3, RATIONALS, "symplectic")
    good = InvariantPair(RATIONALS, {"3": HALF, "inf": HALF}, {"3": ZERO})
    assert check_pair(sc, good).passed
    bad = InvariantPair(RATIONALS, {"3": ZERO, "inf": HALF}, {"3": HALF})
    report = check_pair(sc, bad)
    assert report.first_failure == "reciprocity"
    assert report.results["conjecture"].status == "skipped"
    outside = InvariantPair(RATIONALS, {"3": HALF, "inf": HALF, "7": q(1, 2)}, {"7": q(1, 2)})
    assert check_pair(sc, outside).first_failure == "away"
    assert check_pair(sc, InvariantPair(RATIONALS, {"3": q(1, 4)}, {"3": q(1, 4)})).first_failure == "arch"


def test_search_space_cap():
    sc = ConstraintScenario(2, 3, RATIONALS, extra_support=(5, 7, 11), torsion_cap=12)
    with pytest.raises(SearchSpaceError) as err:
        enumerate_solutions(sc, max_candidates=10)
    assert err.value.size > 10
    assert enumerate_solutions(ConstraintScenario(2, 3, RATIONALS, "symplectic"), max_candidates=100).status == "consistent"


def test_json_round_trips(tmp_path):
    sc = ConstraintScenario(2, 5, Q5, "orthogonal", True, extra_support=(3,), torsion_cap=4)
    assert ConstraintScenario.from_json(json.loads(json.dumps(sc.to_json()))) == sc
    with pytest.raises(ScenarioError):
        ConstraintScenario.from_json({"n": 2, "p": 3, "colour": "red"})
    with pytest.raises(ScenarioError):
        ConstraintScenario.from_json({"n": 2})
    res = enumerate_solutions(sc)
    out = json.loads(json.dumps(res.to_json()))
    assert out["count"] == len(res)
    for s, raw in zip(res, out["solutions"]):
        assert InvariantPair.from_json(raw, Q5) == s
    assert set(out["provenance"]) == set(CONSTRAINTS)
