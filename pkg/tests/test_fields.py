from fractions import Fraction

import pytest

from gint.errors import CoefficientError
from gint.fields import DEFAULT_PRIME, QQ, Field


def test_default_prime_value():
    assert DEFAULT_PRIME == 32003


def test_prime_field_arithmetic():
    f = Field(32003)
    assert f.kind == "prime"
    a = f.coerce(32000)
    b = f.coerce(7)
    assert f.add(a, b) == 4
    assert f.mul(f.coerce(-1), f.coerce(1)) == 32002
    assert f.mul(f.inv(b), b) == 1


def test_rational_field_arithmetic():
    assert QQ.kind == "rationals"
    a = QQ.coerce(Fraction(1, 2))
    b = QQ.coerce(3)
    assert QQ.add(a, b) == Fraction(7, 2)
    assert QQ.inv(a) == 2
    assert QQ.div(b, a) == 6


def test_fraction_coerces_into_prime_field():
    f = Field(5)
    # 1/2 = 3 mod 5
    assert f.coerce(Fraction(1, 2)) == 3
    with pytest.raises(CoefficientError):
        f.coerce(Fraction(1, 5))


def test_rejects_composite_characteristic():
    with pytest.raises(CoefficientError):
        Field(32004)


def test_inverses_across_small_field():
    f = Field(101)
    for a in range(1, 101):
        assert f.mul(a, f.inv(a)) == 1


def test_field_equality_and_hash():
    assert Field(32003) == Field(32003)
    assert Field(32003) != QQ
    assert hash(Field(7)) == hash(Field(7))
