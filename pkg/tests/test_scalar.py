import pytest
import sympy as sp
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from dunkl_monogenics.scalar import (
    I, Q, Scalar, conjugate, format_scalar, imag_part, is_rational, parse_scalar, pochhammer,
    real_part, sqrt,
)

from .conftest import rationals
from .oracles import to_sym_scalar


def test_pochhammer_examples():
    assert pochhammer(mpq(7, 3), 0) == 1
    assert pochhammer(sqrt(2), 0) == 1
    assert pochhammer(mpq(3), 2) == 12
    assert pochhammer(mpq(1, 2), 3) == mpq(15, 8)


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@st.composite
def field_elements(draw):
    a, b, c, d = (draw(rationals) for _ in range(4))
    return a + b * sqrt(2) + I * (c + d * sqrt(2))


@given(field_elements(), field_elements(), field_elements())
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x != 0:
        assert x * (1 / x) == 1


@given(field_elements(), field_elements())
def test_arithmetic_matches_sympy(x, y):
    want = sp.expand(to_sym_scalar(x) * to_sym_scalar(y) - to_sym_scalar(x) + to_sym_scalar(y))
    got = to_sym_scalar(x * y - x + y)
    assert sp.simplify(want - got) == 0


def test_rationals_stay_mpq():
    r = (sqrt(2) + 1) * (sqrt(2) - 1)
    assert is_rational(r) and r == 1
    assert isinstance(sqrt(8), Scalar) and sqrt(8) == 2 * sqrt(2)
    assert sqrt(mpq(9, 4)) == mpq(3, 2)
    assert I * I == -1


def test_canonical_rationals():
    q = Q(6, -4)
    assert q.numerator == -3 and q.denominator == 2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        sqrt(2) / (sqrt(2) - sqrt(2))
    with pytest.raises(ZeroDivisionError):
        mpq(1) / mpq(0)


def test_mixed_radicals_rejected():
    with pytest.raises(ValueError, match="radical"):
        sqrt(2) + sqrt(3)


def test_conjugate_and_parts():
    x = mpq(1, 2) + sqrt(2) * I
    assert conjugate(x) == mpq(1, 2) - sqrt(2) * I
    assert real_part(x) == mpq(1, 2)
    assert imag_part(x) == sqrt(2)


@given(field_elements())
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_parse_formats():
    assert parse_scalar("1/2+3/4*sqrt(2)") == mpq(1, 2) + mpq(3, 4) * sqrt(2)
    assert parse_scalar("-2*i") == -2 * I
    with pytest.raises(ValueError):
        parse_scalar("x + 1")
