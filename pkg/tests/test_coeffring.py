from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affhecke.coeffring import (
    DivisionByZero,
    LaurentScalar,
    NonUnit,
    ScalarFraction,
    specialize,
    specialize_q,
    unit_inverse,
)

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentScalar)
nonzero = laurent.filter(bool)


@settings(max_examples=1000)
@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentScalar(0)
    assert a * 1 == a and a + 0 == a


@given(laurent, laurent, st.sampled_from([Fraction(2), Fraction(3), Fraction(-1, 2)]))
def test_specialization_is_a_ring_map(a, b, v0):
    assert specialize(a * b, v0) == specialize(a, v0) * specialize(b, v0)
    assert specialize(a + b, v0) == specialize(a, v0) + specialize(b, v0)


@given(laurent, nonzero)
def test_exact_division(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_division_refuses_non_multiples():
    v = LaurentScalar.v()
    assert (v + 2).exact_div(v + 1) is None


def test_units():
    v = LaurentScalar.v()
    assert unit_inverse(v**3 * -1) == v**-3 * -1
    assert (v**-2).is_unit()
    with pytest.raises(NonUnit):
        unit_inverse(v + 1)
    with pytest.raises(NonUnit):
        (v + 1) ** -1


def test_q_and_printing():
    q = LaurentScalar.q()
    assert q == LaurentScalar({2: 1})
    assert repr(q - 1) == "v^2 - 1"
    assert specialize_q(q * q - 1, 3) == 8
    with pytest.raises(ValueError):
        specialize_q(LaurentScalar.v(), 4)


@given(laurent)
def test_json_round_trip(a):
    assert LaurentScalar.from_json(a.to_json()) == a


def test_json_form():
    assert (LaurentScalar.q() - 1).to_json() == {"2": 1, "0": -1}


@given(laurent, nonzero, nonzero, nonzero)
def test_fractions_form_a_field(a, b, c, d):
    x, y = ScalarFraction(a, b), ScalarFraction(c, d)
    assert x + y == y + x
    assert (x * y) / y == x
    assert ScalarFraction.from_json(x.to_json()) == x


def test_fraction_normal_form():
    v = LaurentScalar.v()
    f = ScalarFraction(v**2 - 1, v + 1)
    assert f.as_laurent() == v - 1
    with pytest.raises(DivisionByZero):
        ScalarFraction(1, 0)
