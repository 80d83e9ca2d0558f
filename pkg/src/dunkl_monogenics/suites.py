"""Named verification suites: each returns a list of :class:`IdentityReport`."""
from __future__ import annotations

import random

from gmpy2 import mpq

from .bases import (
    Bases, colinearity_ratio, constant_A, constant_a2, constant_B, constant_b,
    constant_c, expected_dim,
)
from .clifford import SpinorPoly
from .dunkl import DunklSetting, apply_xun, laplacian
from .linalg import solve, vectorize
from .operators import IdentityReport, Ops, acomm, comm, spanning_inputs, verify_identity
from .poly import Poly, monomials
from .projections import (
    dirac, h_to_m_projector, harmonic_projector, monogenic_projector, proj_harmonic,
    proj_monogenic, xu_harmonic,
)
from .scalar import format_scalar, pochhammer

__all__ = ["SUITES", "run_suite", "suite_names"]


def _scalar_inputs(setting, max_degree):
    return list(spanning_inputs(setting, max_degree, spinor_indices=[0]))


def _inputs(setting, max_degree):
    return list(spanning_inputs(setting, max_degree))


def _values(name, items):
    """Report over ``(label, lhs, rhs)`` triples compared exactly."""
    count = 0
    for label, lhs, rhs in items:
        count += 1
        if lhs != rhs:
            return IdentityReport(name, False, count, (str(label), str(lhs), str(rhs)))
    return IdentityReport(name, True, count)


def _ratios(name, items):
    """Report over ``(label, lhs, base, constant)``: lhs must equal constant * base.

    Colinearity is checked first; the observed ratio is reported next to the
    formula whenever the two disagree.
    """
    count = 0
    for label, lhs, base, const in items:
        count += 1
        r = colinearity_ratio(lhs, base)
        if r is None:
            return IdentityReport(name, False, count, (str(label), str(lhs), str(base)),
                                  note="not colinear")
        if r != const:
            return IdentityReport(
                name, False, count, None,
                note=f"at {label}: ratio {format_scalar(r)} != formula {format_scalar(const)}")
    return IdentityReport(name, True, count)


def _vec(j, d):
    return tuple(1 if i == j - 1 else 0 for i in range(d))


# -- osp(1|2) and sl(2) ---------------------------------------------------------------

def osp12(setting: DunklSetting, max_degree: int):
    o = Ops(setting)
    d, eps = setting.d, setting.eps
    roots = setting.roots
    inp = _inputs(setting, max_degree)
    out = []

    def check(lhs, rhs, name):
        out.append(verify_identity(lhs, rhs, setting, inputs=inp, name=name))

    check(comm(o.H, o.xsq), 2 * o.xsq, "[H, |x|^2] = 2|x|^2")
    check(comm(o.H, o.lap), -2 * o.lap, "[H, Lap] = -2 Lap")
    check(comm(o.lap, o.xsq), 4 * o.H, "[Lap, |x|^2] = 4H")
    for j in range(1, d + 1):
        check(comm(o.H, o.x(j)), o.x(j), f"[H, x{j}] = x{j}")
        check(comm(o.H, o.T(j)), -o.T(j), f"[H, T{j}] = -T{j}")
        check(comm(o.lap, o.x(j)), 2 * o.T(j), f"[Lap, x{j}] = 2 T{j}")
        check(comm(o.xsq, o.T(j)), -2 * o.x(j), f"[|x|^2, T{j}] = -2 x{j}")
        for k in range(j + 1, d + 1):
            check(comm(o.T(j), o.T(k)), o.zero, f"[T{j}, T{k}] = 0")
        for k in range(1, d + 1):
            rhs = 2 * o.sum_weighted_sigma(lambda r: r[j - 1] * r[k - 1])
            if j == k:
                rhs = rhs + 1
            check(comm(o.T(j), o.x(k)), rhs, f"[T{j}, x{k}] = delta + 2 sum kappa a_j a_k sigma")
    check(acomm(o.D, o.xun), (2 * eps) * o.H, "{D, xun} = 2 eps H")
    check(eps * o.D ** 2, o.lap, "eps D^2 = Lap")
    check(eps * o.xun ** 2, o.xsq, "eps xun^2 = |x|^2")
    check(comm(o.D, o.xsq), 2 * o.xun, "[D, |x|^2] = 2 xun")
    check(comm(o.xun, o.lap), -2 * o.D, "[xun, Lap] = -2 D")
    check(comm(o.D, o.H), o.D, "[D, H] = D")
    check(comm(o.xun, o.H), -o.xun, "[xun, H] = -xun")
    for j in range(1, d + 1):
        rhs = o.e(j) + (2 * eps) * o.O(j)
        check(comm(o.T(j), o.xun), rhs, f"[T{j}, xun] = e{j} + 2 sum kappa a_j dsig")
        check(comm(o.D, o.x(j)), rhs, f"[D, x{j}] = e{j} + 2 sum kappa a_j dsig")
    for a, alpha in enumerate(roots.roots):
        check(acomm(o.dsig(a), o.xun), o.zero, f"{{dsig{a}, xun}} = 0")
        check(acomm(o.dsig(a), o.D), o.zero, f"{{dsig{a}, D}} = 0")
        check(o.dsig(a) ** 2, eps * o.identity, f"dsig{a}^2 = eps")
        check(comm(o.D, o.sigma(a)), 2 * (o.Tvec(alpha) * o.dsig(a)),
              f"[D, sigma{a}] = 2 <T, a> dsig{a}")
        check(comm(o.xun, o.sigma(a)), 2 * (o.xvec(alpha) * o.dsig(a)),
              f"[xun, sigma{a}] = 2 <x, a> dsig{a}")
    sum_oe = _sum(o.O(j) * o.e(j) for j in range(1, d + 1))
    check(sum_oe, o.sum_kappa_sigma(), "sum_j O_j e_j = sum kappa sigma")
    if setting.is_z2:
        for M in range(1, d):
            check(acomm(o.DM(M), o.xunM(M)), (2 * eps) * o.HM(M),
                  f"{{D[{M}], xun[{M}]}} = 2 eps H[{M}]")
    return out


def _sum(ops):
    ops = list(ops)
    total = ops[0]
    for op in ops[1:]:
        total = total + op
    return total


# -- Laplace side ------------------------------------------------------------------------

def laplace_symmetries(setting: DunklSetting, max_degree: int):
    o = Ops(setting)
    d = setting.d
    inp = _scalar_inputs(setting, max_degree)
    out = []

    def check(lhs, rhs, name, inputs=inp):
        out.append(verify_identity(lhs, rhs, setting, inputs=inputs, name=name))

    for j in range(1, d + 1):
        check(comm(o.lap, o.m(j)), 4 * (o.x(j) * o.lap), f"[Lap, m{j}] = 4 x{j} Lap")
        check(o.m(j), -(o.K * o.T(j) * o.K), f"m{j} = -K T{j} K")
        for k in range(j + 1, d + 1):
            check(comm(o.m(j), o.m(k)), o.zero, f"[m{j}, m{k}] = 0")
    low = _scalar_inputs(setting, max(max_degree - 2, 0))
    for n in range(2, 3):
        for beta in monomials(d, n):
            check(o.mpow(beta), (-1) ** n * (o.K * o.Tpow(beta) * o.K),
                  f"m^{beta} = (-1)^n K T^beta K", inputs=low)
    proj_h = harmonic_projector(setting)
    harmonics = [proj_harmonic(setting, f) for f in inp]
    for j in range(1, d + 1):
        check(o.m(j), 2 * ((o.H - 2) * proj_h * o.x(j)), f"m{j} = 2(H-2) projH x{j} on H",
              inputs=harmonics)
    out.extend(xu_checks(setting, max_degree))
    return out


def xu_checks(setting: DunklSetting, max_degree: int):
    d = setting.d
    o = Ops(setting)
    one = SpinorPoly.scalar(Poly.const(d, 1))
    half_d = mpq(d, 2)
    thm, corr, harm = [], [], []
    for n in range(max_degree + 1):
        c = (-1) ** n * 2 ** n * pochhammer(setting.gamma - 1 + half_d, n)
        for beta in monomials(d, n):
            h = SpinorPoly.scalar(xu_harmonic(setting, beta))
            thm.append((beta, h, proj_harmonic(setting, SpinorPoly.scalar(Poly.monomial(beta)), n)
                        .scale(c)))
            corr.append((beta, o.mpow(beta)(one), h.scale((-1) ** n)))
            harm.append((beta, laplacian(setting, h), SpinorPoly.zero(d, 1)))
    rel = []
    for n in range(2, max_degree + 1):
        for eta in monomials(d, n - 2):
            total = SpinorPoly.zero(d, 1)
            for j in range(d):
                b = list(eta)
                b[j] += 2
                total = total + SpinorPoly.scalar(xu_harmonic(setting, b))
            rel.append((eta, total, SpinorPoly.zero(d, 1)))
    return [
        _values("H_beta = (-1)^n 2^n (gamma-1+d/2)_n projH(x^beta)", thm),
        _values("m^beta(1) = (-1)^n H_beta", corr),
        _values("Lap H_beta = 0", harm),
        _values("sum_j H_{eta+2 xi_j} = 0", rel),
    ]


# -- Dirac side --------------------------------------------------------------------------

def dirac_symmetries(setting: DunklSetting, max_degree: int):
    o = Ops(setting)
    d, eps = setting.d, setting.eps
    roots = setting.roots
    inp = _inputs(setting, max_degree)
    out = []

    def check(lhs, rhs, name, inputs=inp):
        out.append(verify_identity(lhs, rhs, setting, inputs=inputs, name=name))

    xun, H = o.xun, o.H
    for j in range(1, d + 1):
        z = o.z(j)
        check(comm(o.D, z), (2 * eps) * (o.x(j) * o.D), f"[D, z{j}] = 2 eps x{j} D")
        check(z, o.x(j) * acomm(o.D, xun) - xun * comm(o.D, o.x(j)) - eps * (o.xsq * o.T(j)),
              f"z{j} = x{j}{{D, xun}} - xun[D, x{j}] - eps|x|^2 T{j}")
        check(z, (2 * eps) * (o.x(j) * (o.E + (mpq(d, 2) + setting.gamma)))
              - xun * (o.e(j) + (2 * eps) * o.O(j)) - eps * (o.xsq * o.T(j)),
              f"z{j} = 2 eps x{j}(E+d/2+gamma) - xun(e{j} + 2 eps O{j}) - eps|x|^2 T{j}")
        for k in range(j + 1, d + 1):
            check(comm(z, o.z(k)), o.zero, f"[z{j}, z{k}] = 0")
    for k in range(1, d + 1):
        zk = o.z(k)
        check(comm(xun, zk), (-2 * eps) * (o.x(k) * xun)
              + xun * (o.e(k) + (2 * eps) * o.O(k)) * xun, f"[xun, z{k}]")
        for j in range(1, d + 1):
            check(comm(o.x(j), zk), (-2 * eps) * (o.x(j) * o.x(k))
                  - xun * comm(o.x(j), o.T(k)) * xun, f"[x{j}, z{k}]")
            check(comm(o.e(j), zk), (2 * eps) * (xun * o.T(k) * o.x(j) - o.x(j) * o.T(k) * xun),
                  f"[e{j}, z{k}]")
            rhs = ((2 * eps) * (o.x(k) * o.T(j) - o.x(j) * o.T(k))
                   + (2 * eps) * (comm(o.T(j), o.x(k)) * H) + o.e(j) * comm(xun, o.T(k))
                   - (2 * eps) * (o.O(j) * o.T(k) * xun + xun * o.T(k) * o.O(j)))
            check(comm(o.T(j), zk), rhs, f"[T{j}, z{k}]")
        for a in range(len(roots.roots)):
            image = roots.reflect(a, _vec(k, d))
            check(o.dsig(a) * zk, o.zvec(image) * o.dsig(a), f"dsig{a} z{k} = z_(sigma xi_{k}) dsig{a}")
    zvec = _sum(o.z(j) * o.e(j) for j in range(1, d + 1))
    check(zvec, (2 * eps) * (xun * (o.E + setting.gamma - o.sum_kappa_sigma()))
          - eps * (o.xsq * o.D), "sum_j z_j e_j = 2 eps xun(E + gamma - sum kappa sigma) - eps|x|^2 D")
    for j in range(1, d + 1):
        check(o.z(j), -(o.I * o.T(j) * o.I), f"z{j} = -I T{j} I")
    low = _inputs(setting, max(max_degree - 2, 0))
    for beta in monomials(d, 2):
        check(o.zpow(beta), (eps * (-1) ** 2) * (o.I * o.Tpow(beta) * o.I),
              f"z^{beta} = (-1)^n eps^(n-1) I T^beta I", inputs=low)
    check(o.I * o.I, eps * o.identity, "I^2 = eps")
    proj_m = monogenic_projector(setting)
    monos = [proj_monogenic(setting, f) for f in inp]
    for j in range(1, d + 1):
        check(o.z(j), (2 * eps) * (proj_m * o.x(j) * H), f"z{j} = 2 eps projM x{j} H on M",
              inputs=monos)
        check(o.z(j), (2 * eps) * ((H - 1) * proj_m * o.x(j)),
              f"z{j} = 2 eps (H-1) projM x{j} on M", inputs=monos)
    out.append(zandproj_check(setting, max_degree))
    if setting.is_z2:
        for M in range(2, d):
            for j in range(1, M + 1):
                check(comm(o.DM(M), o.zM(M, j)), (2 * eps) * (o.x(j) * o.DM(M)),
                      f"[D[{M}], z[{M}],{j}] = 2 eps x{j} D[{M}]")
                for k in range(j + 1, M + 1):
                    check(comm(o.zM(M, j), o.zM(M, k)), o.zero, f"[z[{M}],{j}, z[{M}],{k}] = 0")
    return out


def zandproj_check(setting, max_degree):
    eps = setting.eps
    o = Ops(setting)
    items = []
    for n in range(max_degree + 1):
        c = eps ** n * 2 ** n * pochhammer(setting.gamma + mpq(setting.d, 2), n)
        for beta in monomials(setting.d, n):
            for s in range(setting.dim):
                lhs = o.zpow(beta)(setting.spinor(s))
                rhs = proj_monogenic(setting, setting.monomial_spinor(beta, s), n).scale(c)
                items.append(((beta, s), lhs, rhs))
    return _values("z^beta s = eps^n 2^n (gamma+d/2)_n projM(x^beta s)", items)


# -- Kelvin transforms ---------------------------------------------------------------------

def kelvin(setting: DunklSetting, max_degree: int):
    o = Ops(setting)
    eps = setting.eps
    inp = _inputs(setting, max_degree)
    out = []

    def check(lhs, rhs, name, inputs=inp):
        out.append(verify_identity(lhs, rhs, setting, inputs=inputs, name=name))

    check(o.K * o.K, o.identity, "K^2 = 1")
    check(o.I * o.I, eps * o.identity, "I^2 = eps")
    # follows from the defining formula; an extra factor eps would break eps = -1
    check(o.I, o.xun * o.radial(-2) * o.K, "I = xun |x|^-2 K")
    for j in range(1, setting.d + 1):
        check(o.m(j), -(o.K * o.T(j) * o.K), f"m{j} = -K T{j} K")
        check(o.z(j), -(o.I * o.T(j) * o.I), f"z{j} = -I T{j} I")
    return out


# -- projections ------------------------------------------------------------------------------

def projections(setting: DunklSetting, max_degree: int):
    o = Ops(setting)
    inp = _inputs(setting, max_degree)
    ph, pm, phm = harmonic_projector(setting), monogenic_projector(setting), h_to_m_projector(setting)
    out = []

    def check(lhs, rhs, name, inputs=inp):
        out.append(verify_identity(lhs, rhs, setting, inputs=inputs, name=name))

    check(ph * ph, ph, "projH projH = projH")
    check(pm * pm, pm, "projM projM = projM")
    check(o.lap * ph, o.zero, "Lap projH = 0")
    check(o.D * pm, o.zero, "D projM = 0")
    monos = [proj_monogenic(setting, f) for f in inp]
    # projHM is undefined in degrees where n - 1 + d/2 + gamma vanishes
    base = mpq(setting.d, 2) + setting.gamma
    defined = [f for f in inp if f.degree() - 1 + base != 0]
    check(pm, phm * ph, "projM = projHM projH", inputs=defined)
    check(pm, o.identity, "projM = 1 on M", inputs=monos)
    check(phm, o.identity, "projHM = 1 on M",
          inputs=[f for f in monos if f.is_zero() or f.degree() - 1 + base != 0])
    scal = _scalar_inputs(setting, max_degree)
    harmonics = [proj_harmonic(setting, f) for f in scal]
    check(ph, o.identity, "projH = 1 on H", inputs=harmonics)
    for j in range(1, setting.d + 1):
        check(o.m(j), 2 * ((o.H - 2) * ph * o.x(j)), f"m{j} = 2(H-2) projH x{j} on H",
              inputs=harmonics)
        check(o.z(j), (2 * setting.eps) * ((o.H - 1) * pm * o.x(j)),
              f"z{j} = 2 eps (H-1) projM x{j} on M", inputs=monos)
    out.append(zandproj_check(setting, max_degree))
    return out


# -- bases ---------------------------------------------------------------------------------------

def bases(setting: DunklSetting, max_degree: int):
    B = Bases(setting)
    d, eps, dim = setting.d, setting.eps, setting.dim
    out = []
    certs = []
    for n in range(max_degree + 1):
        b = B.maxwell_basis(n, strict=False)
        want = expected_dim(d, n, dim)
        certs.append((n, (len(b), b.rank, b.kernel), (want, want, True)))
    out.append(_values("maxwell basis: size = rank = C(n+d-2,d-2) dim V, all in ker D", certs))
    if d > 1:
        alt = []
        for n in range(max_degree + 1):
            b = B.maxwell_basis(n, drop=1, strict=False)
            want = expected_dim(d, n, dim)
            alt.append((n, (len(b), b.rank, b.kernel), (want, want, True)))
        out.append(_values("maxwell basis dropping j_1: size = rank, all in ker D", alt))
    gen = []
    for n in range(max_degree + 1):
        g = B.generating_set(n)
        gen.append((n, (g.rank, g.kernel), (expected_dim(d, n, dim), True)))
    out.append(_values("generating set C_n spans M_n", gen))

    def zs(beta, vec: SpinorPoly):
        # Z^beta is linear in the spinor; expand in the standard basis
        total = SpinorPoly.zero(d, dim)
        for i, c in enumerate(vec.comps):
            coeff = c.coefficient((0,) * d)
            if coeff:
                total = total + B.z_monogenic(beta, i).scale(coeff)
        return total

    zero = SpinorPoly.zero(d, dim)
    rel1, rel2, rel3, rec = [], [], [], []
    for n in range(1, max_degree + 1):
        for eta in monomials(d, n - 1):
            for s in range(dim):
                total = zero
                for j in range(1, d + 1):
                    beta = list(eta)
                    beta[j - 1] += 1
                    total = total + zs(beta, B.clifford_word([j], setting.spinor(s)))
                rel1.append(((eta, s), total, zero))
                sp = B.clifford_word([d], setting.spinor(s)).scale(eps)
                lhs = B.z_monogenic(tuple(eta[:-1]) + (eta[-1] + 1,), s)
                rhs = zero
                for j in range(1, d):
                    beta = list(eta)
                    beta[j - 1] += 1
                    rhs = rhs - zs(beta, B.clifford_word([j], sp))
                rel3.append(((eta, s), lhs, rhs))
                for j in range(1, d + 1):
                    beta = list(eta)
                    beta[j - 1] += 1
                    rec.append(((eta, j, s), B.z_monogenic(beta, s),
                                B.z_recursion_step(eta, j, B.z_monogenic(eta, s))))
    for n in range(2, max_degree + 1):
        for eta in monomials(d, n - 2):
            for s in range(dim):
                total = zero
                for j in range(d):
                    beta = list(eta)
                    beta[j] += 2
                    total = total + B.z_monogenic(beta, s)
                rel2.append(((eta, s), total, zero))
    out.append(_values("sum_j Z^{eta+xi_j}_{e_j s} = 0", rel1))
    out.append(_values("sum_j Z^{eta+2xi_j}_s = 0", rel2))
    out.append(_values("Z^{eta+xi_d}_s = -sum_{j<d} Z^{eta+xi_j}_{e_j (eps e_d s)}", rel3))
    out.append(_values("Z^{beta+xi_j}_s from the recursion step", rec))
    out.append(_roundtrip(setting, B, max_degree))
    if all(k > 0 for k in setting.roots.kappa):
        fis = []
        for n in range(max_degree + 1):
            r, want, _ = B.fischer_check(n)
            fis.append((n, r, want))
        out.append(_values("Fischer decomposition P_n V = sum xun^(n-k) M_k", fis))
    if setting.is_z2:
        ck, pz, inv = [], [], []
        for n in range(max_degree + 1):
            want = expected_dim(d, n, dim)
            c = B.ck_basis(n, strict=False)
            p = B.partial_z_basis(n, strict=False)
            ck.append((n, (len(c), c.rank, c.kernel), (want, want, True)))
            pz.append((n, (len(p), p.rank, p.kernel), (want, want, True)))
        for k in range(2, d + 1):
            for n in range(max_degree + 1):
                for e in monomials(k - 1, n):
                    for s in range(dim):
                        p = setting.spinor(s, Poly.monomial(e + (0,) * (d - k + 1)))
                        f = B.ck_extend(k, p)
                        inv.append(((k, e, s), (B.restrict(k, f), B.is_monogenic(f, k)), (p, True)))
        out.append(_values("CK basis: size = rank, all in ker D", ck))
        out.append(_values("partial-z basis: size = rank, all in ker D", pz))
        out.append(_values("R_k CK_k = 1 and CK_k lands in ker D[k]", inv))
    return out


def _roundtrip(setting, B, max_degree):
    rng = random.Random(20240601)
    items = []
    d, dim = setting.d, setting.dim
    for n in range(max_degree + 1):
        basis = B.maxwell_basis(n, strict=False)
        if not basis.elements:
            continue
        mons = monomials(d, n)
        p = SpinorPoly.zero(d, dim)
        for _ in range(3):
            e = rng.choice(mons)
            p = p + setting.monomial_spinor(e, rng.randrange(dim), mpq(rng.randint(-5, 5), rng.randint(1, 4)))
        f = proj_monogenic(setting, p, n)
        kinds = [basis]
        if setting.is_z2:
            kinds += [B.ck_basis(n, strict=False), B.partial_z_basis(n, strict=False)]
        for b in kinds:
            coeffs = solve([vectorize(g, n) for g in b.elements], vectorize(f, n))
            if coeffs is None:
                items.append(((b.kind, n), "no solution", "solution"))
                continue
            back = SpinorPoly.zero(d, dim)
            for c, g in zip(coeffs, b.elements):
                if c:
                    back = back + g.scale(c)
            items.append(((b.kind, n), back, f))
    return _values("basis expansion round trip of projected monogenics", items)


# -- constants of the abelian case ---------------------------------------------------------

def abelian_constants(setting: DunklSetting, max_degree: int, m_max: int = 6,
                       jk_max: int = 4, n_max: int = 3):
    if not setting.is_z2:
        return [IdentityReport("abelian-case constants", True, 0, note="skipped: requires Z2^d")]
    d, eps, dim = setting.d, setting.eps, setting.dim
    if d < 2:
        return [IdentityReport("abelian-case constants", True, 0, note="skipped: needs d >= 2")]
    B = Bases(setting)
    o = B.ops
    kap = [setting.kappa(j) for j in range(1, d + 1)]
    gam = [mpq(0)] + [setting.gamma_partial(k) for k in range(1, d + 1)]
    out = []

    def x1(m, f):
        return f.map(lambda c: c.mul_var(1, m))

    def xun_pow(m, k, f):
        for _ in range(m):
            f = apply_xun(setting, f, upto=k)
        return f

    z2 = o.zM(2, 2)
    step, prop2 = [], []
    for s in range(dim):
        sp = setting.spinor(s)
        for m in range(m_max + 1):
            lhs = z2(B.ck_extend(2, x1(m, sp)))
            base = B.ck_extend(2, x1(m + 1, B.clifford_word([2, 1], sp)))
            step.append(((m, s), lhs, base, constant_A(m, kap[0], kap[1])))
        f = sp
        for j in range(m_max + 1):
            base = B.ck_extend(2, x1(j, B.clifford_word([2, 1] * j, sp)))
            prop2.append(((j, s), f, base, constant_a2(j, kap[1], gam[2])))
            f = z2(f)
    out.append(_ratios("z[2] CK_2(x1^m s) = A_m CK_2(x1^(m+1) e2e1 s)", step))
    out.append(_ratios("z[2]^j s = a_2^j CK_2(x1^j (e2e1)^j s)", prop2))

    dda = []
    for k in range(1, min(3, d) + 1):
        for n in range(n_max + 1):
            for i, f in enumerate(B.ck_monogenics(k, n)):
                for m in range(1, m_max + 1):
                    odd = m & 1
                    const = eps * (m + odd * (2 * n + k - 1 + 2 * gam[k]))
                    lhs = dirac(setting, xun_pow(m, k, f), k)
                    dda.append(((k, n, i, m), lhs, xun_pow(m - 1, k, f), const))
    out.append(_ratios("D[k](xun[k]^m f) = eps(m + odd(2n+k-1+2 gamma_k)) xun[k]^(m-1) f", dda))

    ind, prop = [], []
    for k in range(3, d + 1):
        zk = o.zM(k, k)
        for n in range(n_max + 1):
            for i, f in enumerate(B.ck_monogenics(k - 1, n)):
                ekf = B.clifford_word([k], f)
                for m in range(jk_max + 1):
                    lhs = zk(B.ck_extend(k, xun_pow(m, k - 1, f)))
                    base = B.ck_extend(k, xun_pow(m + 1, k - 1, ekf))
                    ind.append(((k, n, i, m), lhs, base,
                                constant_B(k, n, m, kap[k - 1], gam[k - 1])))
                g = f
                for j in range(jk_max + 1):
                    base = B.ck_extend(k, xun_pow(j, k - 1, B.clifford_word([k] * j, f)))
                    prop.append(((k, n, i, j), g, base, constant_b(k, n, j, kap[k - 1], gam[k])))
                    g = zk(g)
    if d >= 3:
        out.append(_ratios("z[k] CK_k(xun^m f) = B^m_{k,n} CK_k(xun^(m+1) e_k f)", ind))
        out.append(_ratios("z[k]^j f = b^j_{k,n} CK_k(xun^j e_k^j f)", prop))

    cons = []
    for m in range(m_max + 1):
        cons.append((("A", m), constant_A(m, kap[0], kap[1]) * constant_a2(m, kap[1], gam[2]),
                     constant_a2(m + 1, kap[1], gam[2])))
        for k in range(3, d + 1):
            for n in range(n_max + 1):
                cons.append((("B", k, n, m),
                             constant_B(k, n, m, kap[k - 1], gam[k - 1]) * constant_b(k, n, m, kap[k - 1], gam[k]),
                             constant_b(k, n, m + 1, kap[k - 1], gam[k])))
    out.append(_values("A_m a_2^m = a_2^(m+1) and B^m b^m = b^(m+1)", cons))

    link = []
    for n in range(max_degree + 1):
        for j in B.multi_indices(n):
            for s in range(dim):
                phi = B.partial_z_element(j, s)
                psi = B.ck_element(j, B.j_dot(j, setting.spinor(s)))
                link.append(((j, s), phi, psi, constant_c(j, kap, gam)))
    out.append(_ratios("Phi^j_s = c_j Psi^j_(j.s)", link))
    full = []
    for n in range(max_degree + 1):
        want = expected_dim(d, n, dim)
        c = B.ck_basis(n, strict=False)
        p = B.partial_z_basis(n, strict=False)
        full.append((n, (c.rank, c.kernel, p.rank, p.kernel), (want, True, want, True)))
    out.append(_values("CK and partial-z bases full rank, all in ker D", full))
    return out


SUITES = {
    "osp12": osp12,
    "laplace-symmetries": laplace_symmetries,
    "dirac-symmetries": dirac_symmetries,
    "kelvin": kelvin,
    "projections": projections,
    "bases": bases,
    "section5-constants": abelian_constants,
}


def suite_names():
    return list(SUITES) + ["all"]


def run_suite(name: str, setting: DunklSetting, max_degree: int):
    """Run one named suite (or ``all``) and return its reports in order."""
    if name == "all":
        reports = []
        for fn in SUITES.values():
            reports.extend(fn(setting, max_degree))
        return reports
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    return SUITES[name](setting, max_degree)
