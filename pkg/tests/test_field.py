from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from stackytoric.errors import FieldMismatchError
from stackytoric.field import ONE, ZERO, Scalar, as_scalar, common_field, root

mpmath.mp.dps = 60

rats = st.fractions(min_value=-50, max_value=50, max_denominator=40)
fields = st.sampled_from([2, 3, 5, 7])


def mp_value(x: Scalar):
    return mpmath.mpf(x.a.numerator) / x.a.denominator + \
        mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.d)


@given(rats, rats, rats, rats, fields)
def test_compare_matches_high_precision(a, b, c, e, d):
    x, y = Scalar(a, b, d), Scalar(c, e, d)
    diff = mp_value(x) - mp_value(y)
    expected = 0 if x == y else (1 if diff > 0 else -1)
    assert x.compare(y) == expected
    assert (x < y) == (expected < 0)


@given(rats, rats, rats, rats, fields)
def test_field_axioms(a, b, c, e, d):
    x, y = Scalar(a, b, d), Scalar(c, e, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == ONE
    assert x * (x + y) == x * x + x * y


@given(rats, rats, fields)
def test_norm_is_product_with_conjugate(a, b, d):
    x = Scalar(a, b, d)
    assert x * x.conjugate() == Scalar(x.norm())


def test_root_squares_to_integer():
    assert root(2) * root(2) == 2
    assert root(2) ** 2 == Scalar(2)
    assert float(root(3)) == pytest.approx(3 ** 0.5)


def test_rational_tag_normalizes():
    # sqrt 0 = 0 and sqrt 1 = 1 fold into the rational part
    assert Scalar(1, 2, 0) == Scalar(1)
    assert Scalar(1, 2, 1) == Scalar(3)
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert as_scalar(3) == Scalar(3)


def test_field_mismatch_raises():
    with pytest.raises(FieldMismatchError):
        root(2) + root(3)
    assert common_field([root(2), ONE, ZERO]) == 2


def test_literal_round_trip():
    x = Scalar(Fraction(-3, 7), Fraction(5, 2), 2)
    lit = x.literal()
    assert lit == {"a": "-3/7", "b": "5/2"}
    assert Scalar(Fraction(lit["a"]), Fraction(lit["b"]), 2) == x


def test_decimal_rendering():
    assert str(root(2).to_decimal(15)).startswith("1.41421356237")


def test_sign_of_near_cancellation():
    # 99 - 70 sqrt 2 is about 0.00505; its conjugate is about 197.99
    x = Scalar(99, -70, 2)
    assert x.sign() == 1
    assert Scalar(-99, 70, 2).sign() == -1
    assert abs(Scalar(-99, 70, 2)) == x
