import json
import random
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_typer.classifier import (
    Basis,
    ClassificationInput,
    ClassificationReport,
    EqualQ,
    GenericQ,
    InvalidInput,
    MinusPowerF,
    NonWeylFactor,
    QIsOne,
    QOne,
    RootOfUnity,
    Status,
    classify,
    classify_group_algebra,
    classify_one_param_irreducible,
    classify_two_param_B,
    combine_factors,
    parse_second_parameter,
    threshold_finite,
)
from hecke_typer.polyring import phi_multiplicity
from hecke_typer.weyl import IrreducibleType, parse_type_spec, poincare_polynomial

T = IrreducibleType
S = Status
SCHEMA = json.loads(resources.files("hecke_typer").joinpath("report_schema.json").read_text())


def run(spec, e=None, char=0, bq=None):
    param = QIsOne() if e is None else RootOfUnity(e)
    return classify(ClassificationInput(parse_type_spec(spec), char, param, bq))


# one-parameter irreducible


def test_a3_at_e2_is_infinite():
    assert classify_one_param_irreducible(T("A", 3), 2) == (S.INFINITE, 2, Basis.THEOREM)


def test_b3_at_e3_has_simple_root():
    status, m, _ = classify_one_param_irreducible(T("B", 3), 3)
    assert (status, m) == (S.FINITE_NOT_SEMISIMPLE, 1)


def test_d3_at_e4_has_simple_root():
    status, m, _ = classify_one_param_irreducible(T("D", 3), 4)
    assert (status, m) == (S.FINITE_NOT_SEMISIMPLE, 1)


def test_exceptional_bases():
    assert classify_one_param_irreducible(T("F", 4), 12)[2] is Basis.CONJECTURAL
    assert classify_one_param_irreducible(T("E", 6), 5)[2] is Basis.CONJECTURAL
    # not divisible at all: semisimple holds for every type
    assert classify_one_param_irreducible(T("E", 8), 11) == (S.SEMISIMPLE, 0, Basis.THEOREM)
    assert classify_one_param_irreducible(T("G", 2), 6)[2] is Basis.THEOREM
    assert classify_one_param_irreducible(T("I2", 2, 7), 7)[2] is Basis.THEOREM


def test_one_param_rejects_small_e():
    with pytest.raises(InvalidInput):
        classify_one_param_irreducible(T("A", 2), 1)


# thresholds


def test_threshold_examples():
    for e in range(2, 8):
        assert threshold_finite(T("A", 2 * e - 2), e)  # n = 2e - 1 symbols
        assert not threshold_finite(T("A", 2 * e - 1), e)
    assert not threshold_finite(T("B", 4), 4)
    assert threshold_finite(T("D", 5), 3)
    assert not threshold_finite(T("D", 6), 3)


def test_threshold_rejects_exceptional():
    with pytest.raises(InvalidInput):
        threshold_finite(T("F", 4), 3)


@pytest.mark.parametrize("family, lo", [("A", 1), ("B", 2), ("D", 2)])
def test_threshold_agrees_with_multiplicity(family, lo):
    for n in range(lo, 41):
        t = T(family, n)
        p = poincare_polynomial(t)
        for e in range(2, 21):
            status, m, _ = classify_one_param_irreducible(t, e)
            assert threshold_finite(t, e) == (status is not S.INFINITE)
            assert m == phi_multiplicity(p, e)


def test_d_type_finite_non_semisimple_window():
    for n in range(2, 40):
        for e in range(2, 20):
            status, _, _ = classify_one_param_irreducible(T("D", n), e)
            if e % 2:
                want = e <= n < 2 * e
            else:
                want = e // 2 + 1 <= n < e
            assert (status is S.FINITE_NOT_SEMISIMPLE) == want, (n, e)


# two-parameter type B


def test_minus_power_examples():
    assert classify_two_param_B(5, 5, MinusPowerF(1)) == (S.INFINITE, Basis.THEOREM)
    assert classify_two_param_B(4, 5, MinusPowerF(1)) == (S.FINITE, Basis.THEOREM)


def test_generic_examples():
    assert classify_two_param_B(6, 3, GenericQ())[0] is S.INFINITE
    assert classify_two_param_B(2, 3, GenericQ()) == (S.SEMISIMPLE, Basis.DERIVED)
    assert classify_two_param_B(4, 3, GenericQ()) == (S.FINITE_NOT_SEMISIMPLE, Basis.DERIVED)


def test_q_one_at_e2():
    assert classify_two_param_B(2, 2, QOne())[0] is S.INFINITE


def test_q_one_at_odd_e_is_generic():
    for n in range(2, 20):
        assert classify_two_param_B(n, 5, QOne()) == classify_two_param_B(n, 5, GenericQ())


def test_invalid_f():
    with pytest.raises(InvalidInput):
        classify_two_param_B(3, 4, MinusPowerF(4))
    with pytest.raises(InvalidInput):
        classify_two_param_B(3, 4, MinusPowerF(-1))


def test_equal_q_matches_one_parameter():
    for n in range(2, 61):
        for e in range(2, 31):
            one, _, _ = classify_one_param_irreducible(T("B", n), e)
            two, _ = classify_two_param_B(n, e, EqualQ())
            assert one.is_finite == two.is_finite, (n, e)
            if two.is_finite:
                assert one is two


def _type_a_status(symbols, e):
    # A_{m-1} on m symbols; m <= 1 is the trivial algebra
    if symbols <= 1:
        return S.SEMISIMPLE
    return classify_one_param_irreducible(T("A", symbols - 1), e)[0]


def test_generic_matches_morita_summands():
    for n in range(2, 31):
        for e in range(2, 16):
            summands = [combine_factors([_type_a_status(m, e), _type_a_status(n - m, e)]) for m in range(n + 1)]
            status, _ = classify_two_param_B(n, e, GenericQ())
            assert status.is_finite == all(s.is_finite for s in summands)
            assert (status is S.SEMISIMPLE) == all(s is S.SEMISIMPLE for s in summands)


# group algebras


def test_group_algebra_examples():
    assert classify_group_algebra(parse_type_spec("B2"), 2).overall is S.INFINITE
    assert classify_group_algebra(parse_type_spec("A4"), 7).overall is S.SEMISIMPLE
    assert classify_group_algebra(parse_type_spec("E6"), 5).overall is S.FINITE_NOT_SEMISIMPLE
    assert classify_group_algebra(parse_type_spec("E8"), 0).overall is S.SEMISIMPLE


def test_group_algebra_rejects_non_weyl_dihedral():
    with pytest.raises(NonWeylFactor):
        classify_group_algebra(parse_type_spec("I2(9)"), 3)
    assert classify_group_algebra(parse_type_spec("I2(6)"), 3).overall is S.FINITE_NOT_SEMISIMPLE


# combination


def test_combine_examples():
    assert combine_factors([S.SEMISIMPLE, S.FINITE_NOT_SEMISIMPLE]) is S.FINITE_NOT_SEMISIMPLE
    assert combine_factors([S.FINITE_NOT_SEMISIMPLE, S.FINITE_NOT_SEMISIMPLE]) is S.INFINITE
    assert combine_factors([]) is S.SEMISIMPLE
    assert combine_factors([S.FINITE, S.SEMISIMPLE]) is S.FINITE


statuses = st.lists(st.sampled_from(list(Status)), max_size=6)


@given(statuses, statuses)
def test_combine_incremental_equals_flat(a, b):
    assert combine_factors([combine_factors(a), combine_factors(b)]) == combine_factors(a + b)


@given(statuses, st.randoms())
def test_combine_permutation_invariant(xs, rnd):
    ys = list(xs)
    rnd.shuffle(ys)
    assert combine_factors(xs) == combine_factors(ys)


@given(statuses)
def test_combine_is_at_least_as_bad_as_each_factor(xs):
    out = combine_factors(xs)
    assert all(out.badness >= s.badness for s in xs)


# top level


def test_classify_examples():
    r = run("A2xA2", e=3)
    assert [f.multiplicity for f in r.per_factor] == [1, 1]
    assert r.overall is S.INFINITE
    assert run("D4", e=3).overall is S.FINITE_NOT_SEMISIMPLE
    r = run("F4", e=12)
    assert r.overall is S.FINITE_NOT_SEMISIMPLE and r.overall_basis is Basis.CONJECTURAL
    r = run("A3", e=2)
    assert r.per_factor[0].multiplicity == 2 and r.overall is S.INFINITE
    assert run("B2", char=2).overall is S.INFINITE


def test_semisimple_whenever_phi_e_does_not_divide():
    rng = random.Random(1)
    fams = ["A3", "B4", "D5", "E6", "E7", "E8", "F4", "G2", "I2(7)", "A2xB3"]
    for _ in range(100):
        spec = rng.choice(fams)
        e = rng.randint(2, 40)
        if phi_multiplicity(poincare_polynomial(parse_type_spec(spec)), e) == 0:
            assert run(spec, e=e).overall is S.SEMISIMPLE


def test_trivial_spec():
    assert run("1", e=3).overall is S.SEMISIMPLE
    assert run("1", char=2).per_factor == ()


def test_two_parameter_routing_applies_to_every_b_factor():
    r = run("B3xA1xB5", e=4, bq=MinusPowerF(1))
    crits = [f.criterion for f in r.per_factor]
    assert crits[0] == crits[2] != crits[1]
    assert r.per_factor[0].multiplicity is None


def test_undetermined_factor_lowers_overall_basis():
    # B3 with -Q = q at e=5 is Finite (undetermined), A4 at e=5 is finite and not semisimple
    r = run("B3xA4", e=5, bq=MinusPowerF(1))
    assert [f.status for f in r.per_factor] == [S.FINITE, S.FINITE_NOT_SEMISIMPLE]
    assert r.overall is S.INFINITE
    assert r.overall_basis is Basis.CONJECTURAL


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(characteristic=4),
        dict(characteristic=1),
        dict(characteristic=3, parameter=RootOfUnity(6)),
        dict(b_second_parameter=GenericQ()),
        dict(spec=parse_type_spec("B3"), b_second_parameter=GenericQ()),
        dict(spec=parse_type_spec("B3"), parameter=RootOfUnity(4), b_second_parameter=MinusPowerF(5)),
    ],
)
def test_input_validation(kwargs):
    base = dict(spec=parse_type_spec("A3"), characteristic=0, parameter=QIsOne())
    base.update(kwargs)
    with pytest.raises(InvalidInput):
        ClassificationInput(**base)


def test_root_of_unity_needs_e_at_least_2():
    with pytest.raises(InvalidInput):
        RootOfUnity(1)


def test_parse_second_parameter():
    assert parse_second_parameter("minus-power", 2) == MinusPowerF(2)
    assert parse_second_parameter("equal-q") == EqualQ()
    assert parse_second_parameter("one") == QOne()
    with pytest.raises(InvalidInput):
        parse_second_parameter("minus-power")
    with pytest.raises(InvalidInput):
        parse_second_parameter("generic", 1)
    with pytest.raises(InvalidInput):
        parse_second_parameter("weird")


REPORT_INPUTS = [
    ("A2xA2", 3, 0, None),
    ("D4", 3, 5, None),
    ("B2", None, 2, None),
    ("B4xG2", 6, 0, MinusPowerF(2)),
    ("B4", 5, 0, GenericQ()),
    ("B3", 4, 0, QOne()),
    ("1", 2, 0, None),
    ("E8xI2(5)", 10, 0, None),
]


@pytest.mark.parametrize("spec, e, char, bq", REPORT_INPUTS)
def test_report_json_roundtrip_and_schema(spec, e, char, bq):
    report = run(spec, e=e, char=char, bq=bq)
    data = report.to_dict()
    jsonschema.validate(data, SCHEMA)
    text = json.dumps(data)
    assert ClassificationReport.from_dict(json.loads(text)) == report


def test_report_overall_basis_is_weakest():
    r = run("F4xA3", e=4)
    assert r.overall_basis is Basis.CONJECTURAL
    r = run("A3xB2", e=4)
    assert r.overall_basis is Basis.THEOREM


simple_specs = st.lists(
    st.sampled_from(["A1", "A4", "B3", "D4", "G2", "F4", "E6", "I2(5)", "B5", "A7"]), min_size=1, max_size=4
)


@settings(max_examples=100, deadline=None)
@given(simple_specs, st.integers(2, 20), st.randoms())
def test_classify_is_permutation_invariant(parts, e, rnd):
    r1 = run("x".join(parts), e=e)
    rnd.shuffle(parts)
    r2 = run("x".join(parts), e=e)
    assert r1.overall == r2.overall
    assert r1.overall == combine_factors([f.status for f in r1.per_factor])
