import json
from math import comb

import pytest
from gmpy2 import mpq

from dunkl_monogenics.bases import (
    BasisError, Bases, colinearity_ratio, constant_A, constant_a2, constant_b, constant_c,
    expected_dim,
)
from dunkl_monogenics.clifford import SpinorPoly
from dunkl_monogenics.linalg import vectorize
from dunkl_monogenics.operators import Ops
from dunkl_monogenics.poly import Poly, monomials
from dunkl_monogenics.projections import dirac

from . import oracles
from .conftest import make_setting


def test_constant_examples():
    k1, k2, g2 = mpq(1, 2), mpq(1, 3), mpq(5, 6)
    assert constant_A(0, k1, k2) == 1 + 2 * k2
    assert constant_a2(1, k2, g2) == 2 * k2 + 1 == constant_A(0, k1, k2)
    for m in range(6):
        assert constant_A(m, k1, k2) * constant_a2(m, k2, g2) == constant_a2(m + 1, k2, g2)
    for k in (3, 4):
        for n in range(3):
            assert constant_b(k, n, 0, mpq(1, 4), mpq(13, 12)) == 1
    assert constant_c((0, 0, 0), [k1, k2, mpq(1, 4)], [0, k1, g2, mpq(13, 12)]) == 1


def test_expected_dim():
    assert [expected_dim(3, n, 2) for n in range(5)] == [2, 4, 6, 8, 10]
    assert [expected_dim(2, n, 2) for n in range(4)] == [2, 2, 2, 2]
    assert expected_dim(1, 0, 1) == 1 and expected_dim(1, 3, 1) == 0
    assert expected_dim(4, 2, 4) == comb(4, 2) * 4


def test_maxwell_examples(z2_3):
    B = Bases(z2_3)
    b0 = B.maxwell_basis(0)
    assert b0.elements == [z2_3.spinor(i) for i in range(z2_3.dim)]
    b2 = B.maxwell_basis(2)
    assert len(b2) == 6 and b2.rank == 6 and b2.kernel
    assert all(j[-1] == 0 for j, _ in b2.labels)
    assert oracles.rank([vectorize(f, 2) for f in b2.elements]) == 6


def test_z_monogenic_first_order(z2_3):
    s, B, o = z2_3, Bases(z2_3), Ops(z2_3)
    for j in range(1, 4):
        beta = tuple(int(i == j - 1) for i in range(3))
        for i in range(s.dim):
            sp_ = s.spinor(i)
            want = s.spinor(i, Poly.var(3, j)).scale(s.eps * (s.d + 2 * s.gamma)) \
                - o.xun(o.e(j)(sp_)).scale(1 + 2 * s.kappa(j))
            assert B.z_monogenic(beta, i) == want


def test_recursion_operator(b2):
    s, B, o, eps = b2, Bases(b2), Ops(b2), b2.eps
    for n in range(3):
        for beta in monomials(2, n):
            for j in (1, 2):
                step = ((2 * eps * (n + mpq(s.d, 2) + s.gamma)) * o.x(j)
                        - (2 * eps) * (o.xun * o.O(j)) - o.xun * o.e(j) - eps * (o.xsq * o.T(j)))
                nxt = list(beta)
                nxt[j - 1] += 1
                for i in range(s.dim):
                    assert B.z_monogenic(nxt, i) == step(B.z_monogenic(beta, i))


def test_linear_dependence_relations(z2_3):
    s, B = z2_3, Bases(z2_3)
    zero = SpinorPoly.zero(3, s.dim)
    for eta in monomials(3, 2):
        for i in range(s.dim):
            total = zero
            for j in range(1, 4):
                beta = list(eta)
                beta[j - 1] += 1
                es = B.clifford_word([j], s.spinor(i))
                for k, c in enumerate(es.comps):
                    coeff = c.coefficient((0, 0, 0))
                    if coeff:
                        total = total + B.z_monogenic(beta, k).scale(coeff)
            assert total == zero


def test_ck_extend_examples(z2_2):
    s, B, eps = z2_2, Bases(z2_2), z2_2.eps
    for i in range(s.dim):
        sp_ = s.spinor(i)
        assert B.ck_extend(2, sp_) == sp_
        p = s.spinor(i, Poly.var(2, 1))
        got = B.ck_extend(2, p)
        corr = B.clifford_word([2, 1], sp_).map(lambda c: c.mul_var(2)).scale(
            eps * (1 + 2 * s.kappa(1)) / (1 + 2 * s.kappa(2)))
        assert got == p - corr
        assert dirac(s, got).is_zero()
        assert B.ck_basis(1).elements[i] == got


def test_ck_restriction_inverts_extension(z2_3):
    s, B = z2_3, Bases(z2_3)
    for k in (2, 3):
        for n in range(5):
            for e in monomials(k - 1, n):
                p = s.spinor(0, Poly.monomial(e + (0,) * (4 - k))) + s.spinor(
                    s.dim - 1, Poly.monomial(e + (0,) * (4 - k), mpq(-2, 3)))
                f = B.ck_extend(k, p)
                assert B.restrict(k, f) == p
                assert dirac(s, f, k).is_zero()


def test_ck_and_partial_z_bases(z2_3):
    B = Bases(z2_3)
    for n in range(4):
        for b in (B.ck_basis(n), B.partial_z_basis(n)):
            assert len(b) == (n + 1) * 2 == b.rank
            assert b.kernel
            assert oracles.rank([vectorize(f, n) for f in b.elements]) == len(b)


def test_partial_z_against_ck_in_two_dimensions(z2_2):
    s, B = z2_2, Bases(z2_2)
    a1 = constant_a2(1, s.kappa(2), s.gamma_partial(2))
    for i in range(s.dim):
        phi = B.partial_z_element((1, 0), i)
        ck = B.ck_extend(2, B.clifford_word([2, 1], s.spinor(i)).map(lambda c: c.mul_var(1)))
        assert phi == ck.scale(a1)


def test_partial_z_and_ck_are_proportional(z2_3):
    s, B = z2_3, Bases(z2_3)
    kap = [s.kappa(j) for j in range(1, 4)]
    gam = [0] + [s.gamma_partial(k) for k in range(1, 4)]
    for n in range(4):
        for j in B.multi_indices(n):
            for i in range(s.dim):
                phi = B.partial_z_element(j, i)
                psi = B.ck_element(j, B.j_dot(j, s.spinor(i)))
                assert colinearity_ratio(phi, psi) == constant_c(j, kap, gam)


def test_colinearity_ratio():
    a = SpinorPoly([Poly.var(2, 1), Poly.var(2, 2)])
    assert colinearity_ratio(a.scale(mpq(-3, 2)), a) == mpq(-3, 2)
    assert colinearity_ratio(a, SpinorPoly([Poly.var(2, 1), Poly.var(2, 1)])) is None


def test_fischer_examples():
    s = make_setting("z2^2", ["1/2", "1/3"])
    r, want, blocks = Bases(s).fischer_check(2)
    assert r == want == 6 and blocks == [2, 2, 2]
    assert Bases(s).fischer_check(0)[:2] == (2, 2)
    s3 = make_setting("z2^3", ["1/2", "1/3", "1/4"])
    r, want, _ = Bases(s3).fischer_check(3)
    assert r == want == comb(5, 2) * 2


def test_alternative_elimination(b2):
    B = Bases(b2)
    for n in range(4):
        b = B.maxwell_basis(n, drop=1)
        assert all(j[0] == 0 for j, _ in b.labels) and b.rank == len(b) == 2


def test_ck_requires_z2(b2):
    with pytest.raises(BasisError, match="CK requires Z2\\^d"):
        Bases(b2).ck_basis(1)
    with pytest.raises(BasisError, match="CK requires Z2\\^d"):
        Bases(b2).partial_z_basis(1)


def test_serialisation(z2_2):
    b = Bases(z2_2).maxwell_basis(1)
    b.meta = {"group": "z2^2"}
    obj = b.to_json_obj()
    assert set(obj) == {"meta", "elements", "certificates"}
    assert obj["certificates"] == {"rank": 2, "kernel": True}
    assert set(obj["elements"][0]) == {"label", "spinor_index", "components"}
    json.dumps(obj)
    assert b.to_csv().startswith("label,spinor_index,component,exponents,coefficient\n")
    tex = b.to_latex()
    assert tex.startswith("\\begin{tabular}") and "*" not in tex
