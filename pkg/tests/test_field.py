from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ainfcat.errors import FieldMismatchError, PreconditionError
from ainfcat.field import FieldSpec, GF, QQ


def test_exact_fraction_addition():
    a = QQ.scalar(Fraction(1, 3))
    b = QQ.scalar(Fraction(1, 6))
    assert (a + b) == QQ.scalar(Fraction(1, 2))


def test_prime_field_inverse():
    F5 = GF(5)
    assert F5.scalar(2).inv() == F5.scalar(3)


def test_inversion_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        QQ.zero().inv()
    with pytest.raises(ZeroDivisionError):
        GF(7).zero().inv()


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        QQ.one() + GF(5).one()


def test_characteristic_must_be_prime():
    with pytest.raises(PreconditionError):
        FieldSpec("Fp", 6)
    with pytest.raises(PreconditionError):
        FieldSpec("Fp", 1)


def test_canonical_forms():
    assert QQ.scalar("4/6").to_str() == "2/3"
    assert QQ.scalar("-4/6").to_str() == "-2/3"
    assert QQ.scalar("8/4").to_str() == "2"
    assert GF(5).scalar(-3).to_str() == "2"
    # canonicalize is idempotent
    x = QQ.scalar("-10/15")
    assert QQ.scalar(x.to_str()) == x


def test_fraction_literals_into_fp():
    F7 = GF(7)
    assert F7.scalar("1/2") == F7.scalar(4)
    with pytest.raises(ZeroDivisionError):
        F7.scalar(Fraction(1, 7))


small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)


@given(small_rationals, small_rationals, small_rationals)
def test_field_axioms_rationals(a, b, c):
    x, y, z = (QQ.scalar(v) for v in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == QQ.zero()
    if x:
        assert x * x.inv() == QQ.one()


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_field_axioms_fp(a, b, c):
    F11 = GF(11)
    x, y, z = (F11.scalar(v) for v in (a, b, c))
    assert (x + y) * z == x * z + y * z
    assert x - x == F11.zero()
    if x:
        assert x.inv().inv() == x
