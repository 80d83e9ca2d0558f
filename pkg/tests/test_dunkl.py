import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from dunkl_monogenics.clifford import SpinorPoly
from dunkl_monogenics.dunkl import (
    DunklSetting, Weighted, apply_xun, dunkl_apply, h_operator, kelvin_I, kelvin_K, laplacian,
)
from dunkl_monogenics.poly import Poly, xsq
from dunkl_monogenics.roots import build_group

from .conftest import make_setting, polys
from .oracles import dunkl as sym_dunkl
from .oracles import sym_equal, to_sym


def scalar(p):
    return SpinorPoly.scalar(p)


def test_z2_dunkl_on_powers():
    s = make_setting("z2^2", ["1/2", "1/3"])
    k1 = mpq(1, 2)
    for m in range(7):
        got = dunkl_apply(s, 1, scalar(Poly.monomial((m, 0))))
        want = Poly.monomial((m - 1, 0), m + k1 * (1 - (-1) ** m)) if m else Poly.zero(2)
        assert got == scalar(want)
    assert dunkl_apply(s, 1, scalar(Poly.var(2, 2))).is_zero()


@pytest.mark.parametrize("group,kappa", [("z2^3", ["1/2", "1/3", "1/4"]), ("b2", ["1/2", "1/3"]),
                                         ("roots", ["1/3", "1/3", "1/3"])])
@given(data=st.data())
def test_dunkl_matches_definition(group, kappa, data):
    roots = [(1, -1, 0), (0, 1, -1), (1, 0, -1)] if group == "roots" else None
    rs = build_group(group, [mpq(k) for k in kappa], roots)
    s = DunklSetting(rs)
    p = data.draw(polys(s.d, 3))
    for j in range(1, s.d + 1):
        got = s.dunkl_poly(j, p)
        want = sym_dunkl(to_sym(p), j, rs.roots, rs.kappa, s.d)
        assert sym_equal(to_sym(got), want)


@given(polys(3, 4))
def test_dunkl_operators_commute(p):
    for s in (make_setting("z2^3", ["1/2", "1/3", "1/4"]),
              DunklSetting(build_group("roots", [mpq(1, 3)] * 3,
                                       [(1, -1, 0), (0, 1, -1), (1, 0, -1)]))):
        for i in range(1, 4):
            for j in range(i + 1, 4):
                assert s.dunkl_poly(i, s.dunkl_poly(j, p)) == s.dunkl_poly(j, s.dunkl_poly(i, p))


def test_dunkl_on_radial_power():
    s = make_setting("z2^3", ["1/2", "1/3", "1/4"])
    a = mpq(-7, 3)
    one = scalar(Poly.const(3, 1))
    for j in range(1, 4):
        got = dunkl_apply(s, j, Weighted.of(one, a))
        assert got == Weighted.of(scalar(Poly.var(3, j)), a - 2).scale(a)


def test_laplacian_and_h_examples():
    s = make_setting("z2^3", ["1/2", "1/3", "1/4"])
    assert laplacian(s, scalar(Poly.var(3, 1))).is_zero()
    # oracle: sum_i T_i(2 x_i) = sum_i 2(1 + 2 kappa_i)
    assert laplacian(s, scalar(xsq(3))) == scalar(Poly.const(3, 2 * 3 + 4 * s.gamma))
    beta = (2, 0, 1)
    x = scalar(Poly.monomial(beta))
    assert h_operator(s, x) == x.scale(3 + mpq(3, 2) + s.gamma)


def test_kelvin_K_examples():
    s = make_setting("z2^2", ["1/2", "1/3"])
    one = scalar(Poly.const(2, 1))
    assert kelvin_K(s, one) == Weighted.of(one, -(2 * s.gamma + s.d - 2))
    x1 = scalar(Poly.var(2, 1))
    assert kelvin_K(s, x1) == Weighted.of(x1, mpq(-11, 3))


def _random_spinor(s, data):
    comps = [data.draw(polys(s.d, 3)) for _ in range(s.dim)]
    return SpinorPoly(comps)


@given(data=st.data(), eps=st.sampled_from([-1, 1]))
def test_kelvin_involutions(data, eps):
    s = make_setting("z2^3", ["1/2", "1/3", "1/4"], eps)
    f = _random_spinor(s, data)
    assert kelvin_K(s, kelvin_K(s, f)) == f
    assert kelvin_I(s, kelvin_I(s, f)) == f.scale(eps)
    # I = xun |x|^-2 K, read off from the two defining formulas
    k = kelvin_K(s, f).shift(-2)
    assert kelvin_I(s, f) == Weighted(s.d, s.dim, [(t, apply_xun(s, p)) for t, p in k.terms()])


def test_kelvin_I_on_constant(eps):
    s = make_setting("z2^3", ["1/2", "1/3", "1/4"], eps)
    c = s.spinor(1)
    assert kelvin_I(s, c) == Weighted.of(apply_xun(s, c), -(2 * s.gamma + s.d))


def test_kelvin_relation_with_extra_eps_only_holds_for_positive_eps(eps):
    """The variant I = eps xun |x|^-2 K agrees with the definition only when eps = +1."""
    s = make_setting("z2^2", ["1/2", "1/3"], eps)
    f = s.spinor(0, Poly.var(2, 1))
    k = kelvin_K(s, f).shift(-2)
    variant = Weighted(s.d, s.dim, [(t, apply_xun(s, p).scale(eps)) for t, p in k.terms()])
    assert (kelvin_I(s, f) == variant) == (eps == 1)


def test_weighted_canonical_form():
    one = scalar(Poly.const(2, 1))
    r2 = scalar(xsq(2))
    w = Weighted(2, 1, [(mpq(1, 3), r2), (mpq(7, 3), one.scale(-1))])
    assert w.is_zero()
    v = Weighted(2, 1, [(0, r2), (mpq(1, 2), one)])
    exps = sorted(s for s, _ in v.terms())
    assert exps == [mpq(1, 2), mpq(2)]
    for a in exps:
        for b in exps:
            assert a == b or (a - b) % 2 != 0
    assert all(not p.is_zero() for _, p in v.terms())
    f = scalar(Poly.var(2, 1) + Poly.const(2, 3))
    assert Weighted.of(f).to_spinor() == f
    with pytest.raises(ValueError):
        Weighted.of(f, mpq(1, 2)).to_spinor()


def test_weighted_equality_is_functional():
    x = scalar(Poly.var(2, 1))
    assert Weighted.of(x * xsq(2), mpq(-3)) == Weighted.of(x, mpq(-1))


def test_setting_rejects_bad_eps():
    with pytest.raises(ValueError):
        DunklSetting(build_group("z2^2", [1, 1]), 0)
