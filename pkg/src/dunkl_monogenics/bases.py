"""Bases of Dunkl monogenics: Maxwell-type, Cauchy-Kovalevskaya and partial-z.

All three bases are indexed by multi-indices ``j`` with one coordinate forced
to zero (the last one by default) and by a spinor basis index ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from gmpy2 import mpq

from .clifford import SpinorPoly
from .dunkl import DunklSetting, apply_xun
from .linalg import rank, vectorize
from .operators import Ops
from .poly import Poly, monomials
from .projections import dirac
from .scalar import format_scalar, pochhammer

__all__ = [
    "BasisError", "BasisSet", "Bases", "expected_dim",
    "constant_A", "constant_a2", "constant_B", "constant_b", "constant_c",
    "colinearity_ratio",
]


class BasisError(ArithmeticError):
    """A constructed family is not a basis (rank deficiency or kernel failure)."""


def expected_dim(d: int, n: int, dim_v: int) -> int:
    """dim M_n(R^d; V) = C(n+d-2, d-2) * dim V."""
    if d == 1:
        return dim_v if n == 0 else 0
    return comb(n + d - 2, d - 2) * dim_v


# -- constants -----------------------------------------------------------------------

def _sign(k):
    return -1 if k & 1 else 1


def constant_A(m: int, kappa1, kappa2):
    return 1 + m + (1 - _sign(m)) * kappa1 + 2 * kappa2


def constant_a2(j: int, kappa2, gamma2):
    return (2 ** j * pochhammer(kappa2 + mpq(1, 2), (j + 1) // 2)
            * pochhammer(gamma2 + 1, j // 2))


def constant_B(k: int, n: int, m: int, kappa_k, gamma_km1):
    odd = (1 - _sign(m)) // 2
    return _sign(m + 1) * (m + 1 + odd * (2 * n + k - 2 + 2 * gamma_km1) + 2 * kappa_k)


def constant_b(k: int, n: int, j: int, kappa_k, gamma_k):
    return (_sign((j + 1) // 2) * 2 ** j * pochhammer(kappa_k + mpq(1, 2), (j + 1) // 2)
            * pochhammer(gamma_k + n + mpq(k, 2), j // 2))


def constant_c(j, kappa, gammas):
    """c_j for j = (j_1, ..., j_{d-1}, 0).

    ``kappa[i-1]`` is kappa_i and ``gammas[k]`` is gamma_k = kappa_1 + ... + kappa_k.
    """
    d = len(j)
    jj = (None,) + tuple(j)  # 1-based view
    sign = 1
    for k in range(3, d):
        for l in range(2, k):
            sign *= _sign(jj[k] * jj[l])
    n = sum(j)
    c = (sign * 2 ** n * pochhammer(mpq(1, 2) + kappa[1], (jj[1] + 1) // 2)
         * pochhammer(1 + gammas[2], jj[1] // 2)) if d >= 2 else mpq(1)
    for i in range(2, d):
        ji = jj[i]
        shift = sum(jj[1:i])
        c = c * (_sign((ji + 1) // 2) * pochhammer(mpq(1, 2) + kappa[i], (ji + 1) // 2)
                 * pochhammer(mpq(i + 1, 2) + gammas[i + 1] + shift, ji // 2))
    return c


def colinearity_ratio(a: SpinorPoly, b: SpinorPoly):
    """``r`` with ``a == r * b`` or ``None`` when the two are not colinear."""
    if b.is_zero():
        return 0 if a.is_zero() else None
    for comp in b.comps:
        if comp:
            e, c = comp.items()[0]
            idx = b.comps.index(comp)
            break
    r = a.comps[idx].coefficient(e) / c
    return r if a == b.scale(r) else None


# -- basis containers -------------------------------------------------------------------

@dataclass
class BasisSet:
    kind: str
    n: int
    labels: list
    elements: list
    rank: int = -1
    kernel: bool = False
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def to_json_obj(self):
        return {
            "meta": self.meta,
            "elements": [
                {"label": list(j), "spinor_index": s,
                 "components": [c.to_json() for c in f.comps]}
                for (j, s), f in zip(self.labels, self.elements)],
            "certificates": {"rank": self.rank, "kernel": self.kernel},
        }

    def to_csv(self) -> str:
        lines = ["label,spinor_index,component,exponents,coefficient"]
        for (j, s), f in zip(self.labels, self.elements):
            lab = "(" + " ".join(map(str, j)) + ")"
            for ci, c in enumerate(f.comps):
                for e, v in c.items():
                    lines.append(f"{lab},{s},{ci},{' '.join(map(str, e))},{format_scalar(v)}")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        rows = [r"\begin{tabular}{lll}", r"\hline",
                r"$\mathbf{j}$ & $s$ & element \\", r"\hline"]
        for (j, s), f in zip(self.labels, self.elements):
            comps = r" \\ ".join(_latex_poly(c) for c in f.comps)
            rows.append(f"$({','.join(map(str, j))})$ & {s} & "
                        rf"$\begin{{pmatrix}} {comps} \end{{pmatrix}}$ \\")
        rows += [r"\hline", r"\end{tabular}"]
        return "\n".join(rows) + "\n"


def _latex_scalar(c) -> str:
    text = format_scalar(c)
    return text.replace("*sqrt(", r"\sqrt{").replace("sqrt(", r"\sqrt{").replace(")", "}") \
        .replace("*i", r"\,i").replace("*", " ")


def _latex_poly(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for e, c in p.items():
        mono = " ".join(f"x_{{{i + 1}}}^{{{k}}}" if k > 1 else f"x_{{{i + 1}}}"
                        for i, k in enumerate(e) if k)
        cs = _latex_scalar(c)
        if mono:
            cs = "" if cs == "1" else "-" if cs == "-1" else f"({cs})"
        terms.append(f"{cs}{mono}" if mono else cs)
    return " + ".join(terms)


class Bases:
    """Constructions of monogenic bases for one :class:`DunklSetting`."""

    def __init__(self, setting: DunklSetting):
        self.s = setting
        self.ops = Ops(setting)
        self.d = setting.d
        self.eps = setting.eps
        self._z: dict = {}
        self._phi: dict = {}

    # -- helpers ------------------------------------------------------------------
    def _require_z2(self):
        if not self.s.is_z2:
            raise BasisError("CK requires Z2^d")

    def spinor(self, index: int) -> SpinorPoly:
        return self.s.spinor(index)

    def clifford_word(self, gens, f: SpinorPoly) -> SpinorPoly:
        """e_{g1} e_{g2} ... f (the rightmost generator acts first)."""
        for g in reversed(gens):
            f = f.left_mul(self.s.e_rows(g))
        return f

    def is_monogenic(self, f: SpinorPoly, upto: int | None = None) -> bool:
        return dirac(self.s, f, upto).is_zero()

    def certify(self, kind: str, n: int, labels, elements, strict=True) -> BasisSet:
        kernel = all(self.is_monogenic(f) for f in elements)
        vecs = [vectorize(f, n) for f in elements]
        r = rank(vecs) if vecs else 0
        want = expected_dim(self.d, n, self.s.dim)
        out = BasisSet(kind, n, list(labels), list(elements), r, kernel)
        if strict:
            if not kernel:
                raise BasisError(f"{kind} basis of degree {n}: element outside ker D")
            if r != want or len(elements) != want:
                raise BasisError(f"{kind} basis of degree {n}: rank {r} of "
                                 f"{len(elements)} elements, expected {want}")
        return out

    def multi_indices(self, n: int, drop: int | None = None):
        """Multi-indices of total degree n with coordinate ``drop`` zero."""
        k = self.d if drop is None else drop
        return [e for e in monomials(self.d, n) if e[k - 1] == 0]

    # -- Z^beta_s -----------------------------------------------------------------
    def z_monogenic(self, beta, s) -> SpinorPoly:
        """Z^beta_s = z_1^b1 ... z_d^bd s; ``s`` is a spinor index or spinor."""
        beta = tuple(beta)
        if isinstance(s, int):
            key = (beta, s)
            hit = self._z.get(key)
            if hit is not None:
                return hit
        if not any(beta):
            out = self.spinor(s) if isinstance(s, int) else s
        else:
            j = next(i for i, b in enumerate(beta) if b)
            rest = beta[:j] + (beta[j] - 1,) + beta[j + 1:]
            out = self.ops.z(j + 1)(self.z_monogenic(rest, s))
        if isinstance(s, int):
            self._z[key] = out
        return out

    def z_recursion_step(self, beta, j: int, f: SpinorPoly) -> SpinorPoly:
        """(2 eps (n + d/2 + gamma) x_j - 2 eps xun O_j - xun e_j - eps |x|^2 T_j) f."""
        o, eps = self.ops, self.eps
        n = sum(beta)
        c = 2 * eps * (n + mpq(self.d, 2) + self.s.gamma)
        op = c * o.x(j) - (2 * eps) * (o.xun * o.O(j)) - o.xun * o.e(j) - eps * (o.xsq * o.T(j))
        return op(f)

    def generating_set(self, n: int) -> BasisSet:
        labels = [(e, s) for e in monomials(self.d, n) for s in range(self.s.dim)]
        els = [self.z_monogenic(e, s) for e, s in labels]
        return self.certify("generating-set", n, labels, els, strict=False)

    def maxwell_basis(self, n: int, drop: int | None = None, strict=True) -> BasisSet:
        labels = [(e, s) for e in self.multi_indices(n, drop) for s in range(self.s.dim)]
        els = [self.z_monogenic(e, s) for e, s in labels]
        return self.certify("maxwell", n, labels, els, strict)

    # -- Cauchy-Kovalevskaya ------------------------------------------------------
    def ck_extend(self, k: int, p: SpinorPoly) -> SpinorPoly:
        """CK_{x_k}: homogeneous p in x_1..x_{k-1} to a D_[k]-monogenic.

        sum_a (-eps)^a x_k^(2a) D^(2a) p / (4^a a! (kappa_k + 1/2)_a)
          - eps/2 e_k x_k D sum_a (-eps)^a x_k^(2a) D^(2a) p / (4^a a! (kappa_k + 1/2)_(a+1))
        with D = D_[k-1].
        """
        self._require_z2()
        s = self.s
        for j in range(k, self.d + 1):
            if any(c.depends_on(j) for c in p.comps):
                raise ValueError(f"CK input depends on x{j}")
        if p.is_zero():
            return p
        n = p.degree()
        if not p.is_homogeneous(n):
            raise ValueError("CK input is not homogeneous")
        kap = s.kappa(k)
        half = kap + mpq(1, 2)
        out = SpinorPoly.zero(p.nvars, p.dim)
        cur = p  # D_[k-1]^(2a) p
        a = 0
        while not cur.is_zero():
            # (-eps)^a keeps both signs monogenic; it is 1 for eps = -1
            den = (-s.eps) ** a * 4 ** a * factorial(a)
            even = cur.map(lambda c: c.mul_var(k, 2 * a))
            out = out + even.scale(1 / (den * pochhammer(half, a)))
            d1 = dirac(s, cur, k - 1)
            if d1.is_zero():
                break
            odd = d1.map(lambda c: c.mul_var(k, 2 * a + 1)).left_mul(s.e_rows(k))
            out = out + odd.scale(-s.eps / (2 * den * pochhammer(half, a + 1)))
            cur = dirac(s, d1, k - 1)
            a += 1
        return out

    def restrict(self, k: int, f: SpinorPoly) -> SpinorPoly:
        return f.map(lambda c: c.set_zero(k))

    def ck_element(self, j, spinor: SpinorPoly, top: int | None = None) -> SpinorPoly:
        """Psi^j applied to an arbitrary constant spinor.

        With ``top = k < d`` the tower stops at CK_{x_k}, giving a
        D_[k]-monogenic in x_1..x_k indexed by j_1..j_{k-1}.
        """
        self._require_z2()
        top = self.d if top is None else top
        f = spinor.map(lambda c: c.mul_var(1, j[0])) if top > 1 else spinor
        for k in range(2, top + 1):
            f = self.ck_extend(k, f)
            if k < top:
                for _ in range(j[k - 1]):
                    f = apply_xun(self.s, f, upto=k)
        return f

    def ck_monogenics(self, k: int, n: int):
        """Basis of M_n(R^k; V) inside the d-variable polynomials."""
        if k == 1:
            return [self.spinor(s) for s in range(self.s.dim)] if n == 0 else []
        return [self.ck_element(j + (0,) * (self.d - k + 1), self.spinor(s), top=k)
                for j in monomials(k - 1, n) for s in range(self.s.dim)]

    def ck_basis(self, n: int, strict=True) -> BasisSet:
        self._require_z2()
        labels = [(e, s) for e in self.multi_indices(n) for s in range(self.s.dim)]
        els = [self.ck_element(e, self.spinor(s)) for e, s in labels]
        return self.certify("ck", n, labels, els, strict)

    # -- partial generalised symmetries -----------------------------------------
    def partial_z_element(self, j, spinor) -> SpinorPoly:
        """Phi^j = z_[d]^{j_{d-1}} ... z_[2]^{j_1} s (z_[2] acts first)."""
        key = (tuple(j), spinor) if isinstance(spinor, int) else None
        if key is not None and key in self._phi:
            return self._phi[key]
        f = self.spinor(spinor) if isinstance(spinor, int) else spinor
        for level in range(2, self.d + 1):
            op = self.ops.zM(level, level)
            for _ in range(j[level - 2]):
                f = op(f)
        if key is not None:
            self._phi[key] = f
        return f

    def partial_z_basis(self, n: int, strict=True) -> BasisSet:
        self._require_z2()
        labels = [(e, s) for e in self.multi_indices(n) for s in range(self.s.dim)]
        els = [self.partial_z_element(e, s) for e, s in labels]
        return self.certify("partial-z", n, labels, els, strict)

    def j_dot(self, j, spinor: SpinorPoly) -> SpinorPoly:
        """j . s = e_d^{j_{d-1}} ... e_3^{j_2} (e_2 e_1)^{j_1} s."""
        gens = []
        for i in range(self.d - 1, 1, -1):
            gens += [i + 1] * j[i - 1]
        gens += [2, 1] * j[0] if self.d >= 2 else []
        return self.clifford_word(gens, spinor)

    # -- Fischer decomposition ----------------------------------------------------
    def fischer_check(self, n: int):
        """Stack xun^(n-k) M_k for k = 0..n; returns (rank, expected, block sizes)."""
        vecs = []
        blocks = []
        for k in range(n + 1):
            b = self.maxwell_basis(k, strict=False)
            blocks.append(len(b))
            for f in b.elements:
                for _ in range(n - k):
                    f = apply_xun(self.s, f)
                vecs.append(vectorize(f, n))
        want = comb(n + self.d - 1, self.d - 1) * self.s.dim
        return rank(vecs), want, blocks

    def build(self, kind: str, n: int) -> BasisSet:
        if kind == "maxwell":
            return self.maxwell_basis(n)
        if kind == "ck":
            return self.ck_basis(n)
        if kind == "partial-z":
            return self.partial_z_basis(n)
        raise ValueError(f"unknown basis kind {kind!r}")
