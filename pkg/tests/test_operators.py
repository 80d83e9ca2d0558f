import pytest
from gmpy2 import mpq

from dunkl_monogenics.clifford import SpinorPoly
from dunkl_monogenics.dunkl import Weighted, apply_xun
from dunkl_monogenics.operators import (
    OperatorDomainError, Ops, acomm, comm, spanning_inputs, verify_identity,
)
from dunkl_monogenics.poly import Poly, monomials
from dunkl_monogenics.projections import dirac

from .conftest import make_setting


def test_m_on_one():
    for group, kappa in (("z2^3", ["1/2", "1/3", "1/4"]), ("b2", ["1/2", "1/3"])):
        s = make_setting(group, kappa)
        o = Ops(s)
        one = SpinorPoly.scalar(Poly.const(s.d, 1))
        for j in range(1, s.d + 1):
            assert o.m(j)(one) == SpinorPoly.scalar(Poly.var(s.d, j, 2 * s.gamma + s.d - 2))


def test_z_on_constant_spinor(z2_3):
    s, o, eps = z2_3, Ops(z2_3), z2_3.eps
    for j in range(1, 4):
        k = s.kappa(j)
        for i in range(s.dim):
            sp_ = s.spinor(i)
            xs = s.spinor(i, Poly.var(3, j))
            want = xs.scale(eps * (s.d + 2 * s.gamma)) - apply_xun(s, o.e(j)(sp_)).scale(1 + 2 * k)
            got = o.z(j)(sp_)
            assert got == want
            assert dirac(s, got).is_zero()


def test_dirac_on_linear(z2_3):
    s, o = z2_3, Ops(z2_3)
    for j in range(1, 4):
        sp_ = s.spinor(0)
        assert o.D(s.spinor(0, Poly.var(3, j))) == o.e(j)(sp_).scale(1 + 2 * s.kappa(j))


def test_verify_identity_examples(z2_3):
    o = Ops(z2_3)
    for j in range(1, 4):
        r = verify_identity(comm(o.D, o.z(j)), (2 * z2_3.eps) * (o.x(j) * o.D), z2_3, 4)
        assert r.ok and r.checked == 2 * 35
    assert verify_identity(acomm(o.D, o.xun), (2 * z2_3.eps) * o.H, z2_3, 4).ok
    assert verify_identity(comm(o.z(1), o.z(2)), o.zero, z2_3, 4).ok


def test_verify_identity_reports_counterexample(z2_2):
    o = Ops(z2_2)
    r = verify_identity(comm(o.D, o.xun), o.zero, z2_2, 3, name="false")
    assert not r.ok
    inp, lhs, rhs = r.counterexample
    assert rhs == "[0; 0]" and lhs != rhs
    assert r.line().startswith("[FAIL] false")


def test_operator_algebra(z2_2):
    s, o = z2_2, Ops(z2_2)
    f = s.spinor(1, Poly.monomial((2, 1)))
    assert (o.x(1) * o.T(1))(f) == o.x(1)(o.T(1)(f))
    assert (o.x(1) + 3)(f) == o.x(1)(f) + f.scale(3)
    assert (2 - o.x(1))(f) == f.scale(2) - o.x(1)(f)
    assert (o.T(1) ** 2)(f) == o.T(1)(o.T(1)(f))
    assert o.zero(f).is_zero()
    assert repr(o.zero) == "0"
    assert repr(comm(o.D, o.xun)) == "[D, xun]"


def test_polynomial_only_primitive_rejects_radial_input(z2_2):
    o = Ops(z2_2)
    w = Weighted.of(z2_2.spinor(0), mpq(1, 3))
    with pytest.raises(OperatorDomainError):
        o.EM(1)(w)


def test_spanning_inputs_count(z2_3):
    inputs = list(spanning_inputs(z2_3, 3))
    assert len(inputs) == sum(len(monomials(3, n)) for n in range(4)) * z2_3.dim


def test_partial_operators(z2_3):
    s, o = z2_3, Ops(z2_3)
    f = s.spinor(0, Poly.monomial((1, 1, 2)))
    # D_[2] and xun_[2] ignore the third variable
    assert o.DM(2)(f) == o.T(1)(o.e(1)(f)) + o.T(2)(o.e(2)(f))
    assert o.xunM(2)(f) == o.x(1)(o.e(1)(f)) + o.x(2)(o.e(2)(f))
    assert o.HM(2)(f) == f.scale(2 + 1 + s.gamma_partial(2))


def test_sum_weighted_sigma_matches_commutator(b2):
    o = Ops(b2)
    for j in (1, 2):
        for k in (1, 2):
            rhs = 2 * o.sum_weighted_sigma(lambda r: r[j - 1] * r[k - 1])
            if j == k:
                rhs = rhs + 1
            assert verify_identity(comm(o.T(j), o.x(k)), rhs, b2, 2).ok
