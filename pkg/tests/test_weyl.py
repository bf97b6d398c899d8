import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_typer.weyl import (
    IrreducibleType,
    SpecError,
    SpecSyntaxError,
    WeylSpec,
    degrees,
    group_order,
    parse_type_spec,
    poincare_polynomial,
)

T = IrreducibleType


def test_parse_product():
    spec = parse_type_spec("A4xB3")
    assert spec.factors == (T("A", 4), T("B", 3))


def test_parse_rewrites_c_to_b():
    assert parse_type_spec("C3").factors == (T("B", 3),)
    assert T("C", 5) == T("B", 5)


def test_parse_is_case_and_space_insensitive():
    assert parse_type_spec(" a2 X i2(5) x g2 ") == parse_type_spec("A2xI2(5)xG2")


def test_parse_trivial():
    assert parse_type_spec("1") == WeylSpec(())
    assert str(WeylSpec(())) == "1"


@pytest.mark.parametrize("text", ["E9", "A0", "B1", "D1", "F3", "G3", "I2(2)", "E5"])
def test_rank_out_of_range(text):
    with pytest.raises(SpecError):
        parse_type_spec(text)


@pytest.mark.parametrize(
    "text, pos",
    [("A3yB2", 2), ("", 0), ("H3", 0), ("A3x", 3), ("A", 0), ("A2 x", 4), ("1xA2", 0)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(SpecSyntaxError) as exc:
        parse_type_spec(text)
    assert exc.value.position == pos


def test_g2_and_i2_6_are_distinct_labels_same_degrees():
    assert T("G", 2) != T("I2", 2, 6)
    assert degrees(T("G", 2)) == degrees(T("I2", 2, 6))


@pytest.mark.parametrize(
    "t, want",
    [
        (T("A", 2), (2, 3)),
        (T("D", 4), (2, 4, 4, 6)),
        (T("D", 2), (2, 2)),
        (T("D", 3), (2, 3, 4)),
        (T("B", 3), (2, 4, 6)),
        (T("F", 4), (2, 6, 8, 12)),
        (T("E", 6), (2, 5, 6, 8, 9, 12)),
        (T("E", 7), (2, 6, 8, 10, 12, 14, 18)),
        (T("E", 8), (2, 8, 12, 14, 18, 20, 24, 30)),
        (T("I2", 2, 7), (2, 7)),
    ],
)
def test_degrees(t, want):
    assert degrees(t) == want


def test_orders_quoted_in_factored_form():
    assert group_order(T("F", 4)) == 2**7 * 3**2
    assert group_order(T("E", 6)) == 2**7 * 3**4 * 5
    assert group_order(T("E", 7)) == 2**10 * 3**4 * 5 * 7
    assert group_order(T("E", 8)) == 2**14 * 3**5 * 5**2 * 7


def test_classical_orders():
    for n in range(2, 10):
        assert group_order(T("A", n - 1)) == math.factorial(n)
        assert group_order(T("B", n)) == 2**n * math.factorial(n)
        assert group_order(T("D", n)) == 2 ** (n - 1) * math.factorial(n)
    assert group_order(T("B", 4)) == 384
    assert group_order(WeylSpec(())) == 1


def _inversions(p):
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def test_type_a_poincare_against_inversion_count():
    # length in S_n is the inversion number
    for n in range(2, 7):
        counts = [0] * (n * (n - 1) // 2 + 1)
        for p in itertools.permutations(range(n)):
            counts[_inversions(p)] += 1
        assert poincare_polynomial(T("A", n - 1)).to_json() == counts


def test_a2_poincare():
    assert poincare_polynomial(T("A", 2)).to_json() == [1, 2, 2, 1]


def test_d4_poincare_degree_and_value():
    p = poincare_polynomial(T("D", 4))
    assert p.degree == 12
    assert p(1) == 192


def test_empty_spec_poincare_is_one():
    assert poincare_polynomial(WeylSpec(())).to_json() == [1]


def test_product_poincare_is_product():
    a, b = T("A", 3), T("G", 2)
    assert poincare_polynomial(WeylSpec((a, b))) == poincare_polynomial(a) * poincare_polynomial(b)


types = st.one_of(
    st.builds(T, st.just("A"), st.integers(1, 12)),
    st.builds(T, st.sampled_from(["B", "C", "D"]), st.integers(2, 12)),
    st.builds(T, st.just("E"), st.sampled_from([6, 7, 8])),
    st.just(T("F", 4)),
    st.just(T("G", 2)),
    st.builds(T, st.just("I2"), st.just(2), st.integers(3, 60)),
)
specs = st.lists(types, max_size=4).map(lambda fs: WeylSpec(tuple(fs)))


@given(specs)
def test_poincare_value_at_one_and_degree(spec):
    p = poincare_polynomial(spec)
    assert p(1) == group_order(spec)
    assert p.degree == sum(d - 1 for t in spec for d in degrees(t))
    assert p.is_palindromic()


@given(specs)
def test_print_parse_roundtrip(spec):
    assert parse_type_spec(str(spec)) == spec


@given(specs, specs)
def test_order_multiplicative(a, b):
    assert group_order(WeylSpec(a.factors + b.factors)) == group_order(a) * group_order(b)


@given(types)
def test_degree_product_is_order_and_sorted(t):
    ds = degrees(t)
    assert list(ds) == sorted(ds)
    assert len(ds) == t.rank
    assert math.prod(ds) == group_order(t)
