import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from dunkl_monogenics.poly import Poly, divide_by_linear_form, linear_form, monomials, xsq
from dunkl_monogenics.roots import b2, z2
from dunkl_monogenics.scalar import sqrt

from .conftest import polys

x1, x2 = Poly.var(2, 1), Poly.var(2, 2)


def test_ring_examples():
    assert x1 * x1 == Poly.monomial((2, 0))
    assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
    p = x1 + 3 * x2
    assert p.scale(0).terms == {} and p.scale(0).is_zero()


def test_reflection_examples():
    r = z2([mpq(1), mpq(1)])
    assert r.apply_reflection(0, x1 ** 2 * x2) == x1 ** 2 * x2
    assert r.apply_reflection(0, x1 ** 3) == -(x1 ** 3)
    b = b2(mpq(1), mpq(1))
    idx = next(i for i, a in enumerate(b.roots) if a[0] != 0 and a[0] == -a[1])
    assert b.apply_reflection(idx, x1) == x2


def test_divide_examples():
    xi1 = (mpq(1), mpq(0))
    assert divide_by_linear_form(x1 ** 3 - (-x1) ** 3, xi1) == 2 * x1 ** 2
    assert divide_by_linear_form(Poly.zero(2), xi1).is_zero()
    alpha = (1 / sqrt(2), -1 / sqrt(2))
    assert divide_by_linear_form((x1 - x2) * (x1 + x2), alpha) == (x1 + x2).scale(sqrt(2))


def test_divide_rejects_remainder():
    with pytest.raises(ArithmeticError):
        divide_by_linear_form(x1 + 1, (mpq(1), mpq(0)))


@given(polys(2), st.sampled_from([(mpq(1), mpq(0)), (mpq(0), mpq(1)), "b2"]))
def test_divide_inverts_multiplication(q, alpha):
    if alpha == "b2":
        alpha = (1 / sqrt(2), 1 / sqrt(2))
    assert divide_by_linear_form(q * linear_form(alpha), alpha) == q


@given(polys(2, 4))
def test_reflections_are_involutions(p):
    for r in (z2([mpq(1), mpq(2)]), b2(mpq(1), mpq(2))):
        for a in range(len(r.roots)):
            assert r.apply_reflection(a, r.apply_reflection(a, p)) == p


def test_euler_examples():
    assert (x1 ** 2 * x2).euler() == 3 * x1 ** 2 * x2
    assert Poly.const(2, 5).euler().is_zero()
    assert (x1 + x2 ** 2).euler() == x1 + 2 * x2 ** 2


@given(polys(3), polys(3))
def test_euler_is_a_derivation(p, q):
    assert (p * q).euler() == p.euler() * q + p * q.euler()


def test_homogeneous_components():
    assert (x1 + x2 ** 2).homogeneous_components() == [(1, x1), (2, x2 ** 2)]
    assert Poly.zero(2).homogeneous_components() == []
    assert Poly.const(2, 7).homogeneous_components() == [(0, Poly.const(2, 7))]


def test_monomial_order_is_lex_ascending():
    assert monomials(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert monomials(3, 1) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert [e for e, _ in (x1 ** 2 + x1 * x2 + x2 ** 2).items()] == monomials(2, 2)


def test_text_and_json_forms():
    p = x1 ** 2 + 3 * x2
    assert str(p) == "3 * x2 + 1 * x1^2"
    assert Poly.from_json(2, p.to_json()) == p
    q = x1.scale(sqrt(2))
    assert Poly.from_json(2, q.to_json()) == q


def test_xsq():
    assert xsq(3) == Poly.var(3, 1) ** 2 + Poly.var(3, 2) ** 2 + Poly.var(3, 3) ** 2
    assert xsq(3, 2) == Poly.var(3, 1) ** 2 + Poly.var(3, 2) ** 2
