"""Composable linear operators on P (x) V and a spanning-set identity checker.

Operators are small expression trees evaluated lazily.  ``A * B`` is the
composition (``B`` acts first), ``c * A`` scales, ``A + B`` / ``A - B`` add,
``A ** n`` iterates, and :func:`comm` / :func:`acomm` build the
(anti)commutator nodes.
"""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .clifford import CliffordElement, SpinorPoly
from .dunkl import (
    DunklSetting, Weighted, apply_xun, dunkl_apply, euler, h_operator, kelvin_I,
    kelvin_K, laplacian,
)
from .poly import monomials
from .scalar import Q, Scalar

__all__ = [
    "Operator", "Primitive", "Ops", "OperatorDomainError", "comm", "acomm",
    "verify_identity", "IdentityReport", "spanning_inputs", "values_equal",
]

_SCALARS = (int, Scalar, type(mpq()))


class OperatorDomainError(TypeError):
    """An operator was applied to an element outside its domain."""


def _add(a, b):
    if isinstance(a, Weighted) or isinstance(b, Weighted):
        if isinstance(a, SpinorPoly):
            a = Weighted.of(a)
        if isinstance(b, SpinorPoly):
            b = Weighted.of(b)
    return a + b


def values_equal(a, b) -> bool:
    if isinstance(a, Weighted) or isinstance(b, Weighted):
        if isinstance(a, SpinorPoly):
            a = Weighted.of(a)
        if isinstance(b, SpinorPoly):
            b = Weighted.of(b)
    return a == b


def _zero_like(f):
    if isinstance(f, Weighted):
        return Weighted(f.nvars, f.dim)
    return SpinorPoly.zero(f.nvars, f.dim)


class Operator:
    """Base class; subclasses implement :meth:`apply`."""

    def apply(self, f):  # pragma: no cover - abstract
        raise NotImplementedError

    def __call__(self, f):
        return self.apply(f)

    def __mul__(self, other):
        if isinstance(other, Operator):
            return Compose((self, other))
        if isinstance(other, _SCALARS):
            return Sum(((other, self),))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return Sum(((other, self),))
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Identity() * other
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum(((mpq(1), self), (mpq(1), other)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = Identity() * other
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum(((mpq(1), self), (mpq(-1), other)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Sum(((mpq(-1), self),))

    def __pow__(self, n: int):
        return Power(self, n)

    def named(self, name: str) -> "Operator":
        return Named(name, self)


class Identity(Operator):
    def apply(self, f):
        return f

    def __repr__(self):
        return "1"


class Primitive(Operator):
    """A named linear map.

    ``weighted`` selects behaviour on :class:`Weighted` input:
    ``"parts"`` (commutes with radial factors, applied part by part),
    ``"native"`` (``fn`` handles both kinds) or ``"polynomial"`` (only
    weighted elements that are really polynomials are accepted).
    """

    def __init__(self, name, fn, weighted="parts"):
        self.name = name
        self.fn = fn
        self.weighted = weighted

    def apply(self, f):
        if isinstance(f, Weighted):
            if self.weighted == "native":
                return self.fn(f)
            if self.weighted == "parts":
                return f.map_parts(self.fn)
            if f.is_polynomial():
                return self.fn(f.to_spinor())
            raise OperatorDomainError(f"{self.name} needs a polynomial argument")
        return self.fn(f)

    def __repr__(self):
        return self.name


class Named(Operator):
    def __init__(self, name, expr):
        self.name = name
        self.expr = expr

    def apply(self, f):
        return self.expr.apply(f)

    def __repr__(self):
        return self.name


class Sum(Operator):
    def __init__(self, terms):
        self.terms = tuple(terms)

    def apply(self, f):
        out = None
        for c, op in self.terms:
            v = op.apply(f)
            if c != 1:
                v = v.scale(c)
            out = v if out is None else _add(out, v)
        return out if out is not None else _zero_like(f)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, op in self.terms:
            parts.append(repr(op) if c == 1 else f"({c})*{op!r}")
        return "(" + " + ".join(parts) + ")"


class Compose(Operator):
    def __init__(self, factors):
        flat = []
        for op in factors:
            flat.extend(op.factors if isinstance(op, Compose) else (op,))
        self.factors = tuple(flat)

    def apply(self, f):
        for op in reversed(self.factors):
            f = op.apply(f)
        return f

    def __repr__(self):
        return " ".join(repr(op) for op in self.factors)


class Commutator(Operator):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def apply(self, f):
        return _add(self.a.apply(self.b.apply(f)), self.b.apply(self.a.apply(f)).scale(-1))

    def __repr__(self):
        return f"[{self.a!r}, {self.b!r}]"


class Anticommutator(Operator):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def apply(self, f):
        return _add(self.a.apply(self.b.apply(f)), self.b.apply(self.a.apply(f)))

    def __repr__(self):
        return f"{{{self.a!r}, {self.b!r}}}"


class Power(Operator):
    def __init__(self, base, n):
        if n < 0:
            raise ValueError("negative operator power")
        self.base, self.n = base, n

    def apply(self, f):
        for _ in range(self.n):
            f = self.base.apply(f)
        return f

    def __repr__(self):
        return f"({self.base!r})^{self.n}"


def comm(a: Operator, b: Operator) -> Operator:
    return Commutator(a, b)


def acomm(a: Operator, b: Operator) -> Operator:
    return Anticommutator(a, b)


class Ops:
    """Operator vocabulary of one :class:`DunklSetting`.

    Variables, Dunkl operators and Clifford generators are numbered from 1;
    roots from 0.
    """

    def __init__(self, setting: DunklSetting):
        self.s = setting
        self.d = setting.d
        self.eps = setting.eps
        self._cache: dict = {}

    def _memo(self, key, build):
        op = self._cache.get(key)
        if op is None:
            op = build()
            self._cache[key] = op
        return op

    # -- primitives ---------------------------------------------------------
    @property
    def identity(self):
        return Identity()

    @property
    def zero(self):
        return Sum(())

    def radial(self, power):
        """Multiplication by |x|^power (promotes to weighted elements)."""
        def fn(f):
            w = Weighted.of(f) if isinstance(f, SpinorPoly) else f
            return w.shift(power)
        return Primitive(f"|x|^({power})", fn, weighted="native")

    def const(self, c):
        return Q(c) * Identity() if isinstance(c, int) else c * Identity()

    def T(self, j):
        s = self.s
        return self._memo(("T", j), lambda: Primitive(
            f"T{j}", lambda f: dunkl_apply(s, j, f), weighted="native"))

    def x(self, j):
        return self._memo(("x", j), lambda: Primitive(
            f"x{j}", lambda f: f.map(lambda c: c.mul_var(j))))

    @property
    def xsq(self):
        s = self.s

        def fn(f):
            if isinstance(f, Weighted):
                return f.shift(2)
            return f * s.xsq
        return self._memo("xsq", lambda: Primitive("|x|^2", fn, weighted="native"))

    def xsqM(self, M):
        from .poly import xsq as _xsq
        r = _xsq(self.d, M)
        return self._memo(("xsqM", M), lambda: Primitive(f"|x|^2_[{M}]", lambda f: f * r))

    def e(self, j):
        rows = self.s.e_rows(j)
        return self._memo(("e", j), lambda: Primitive(f"e{j}", lambda f: f.left_mul(rows)))

    def clifford(self, element: CliffordElement, name=None):
        rows = self.s.clifford_rows(element)
        return Primitive(name or f"<{element}>", lambda f: f.left_mul(rows))

    def sigma(self, a):
        s = self.s
        return self._memo(("sigma", a), lambda: Primitive(
            f"sigma{a}", lambda f: f.map(lambda c: s.reflect_poly(a, c))))

    def dsig(self, a):
        """The double-cover element alpha_ sigma_alpha."""
        s = self.s
        rows = s.root_rows(a)
        return self._memo(("dsig", a), lambda: Primitive(
            f"dsig{a}", lambda f: f.map(lambda c: s.reflect_poly(a, c)).left_mul(rows)))

    @property
    def E(self):
        return self._memo("E", lambda: Primitive("E", euler, weighted="native"))

    def EM(self, M):
        return self._memo(("EM", M), lambda: Primitive(
            f"E[{M}]", lambda f: euler(f, upto=M), weighted="polynomial"))

    @property
    def H(self):
        s = self.s
        return self._memo("H", lambda: Primitive("H", lambda f: h_operator(s, f), weighted="native"))

    def HM(self, M):
        g = self.s.gamma_partial(M)
        return self._memo(("HM", M), lambda: (self.EM(M) + (mpq(M, 2) + g)).named(f"H[{M}]"))

    @property
    def lap(self):
        s = self.s
        return self._memo("lap", lambda: Primitive(
            "Lap", lambda f: laplacian(s, f), weighted="native"))

    @property
    def D(self):
        return self.DM(self.d)

    def DM(self, M):
        s = self.s

        def fn(f):
            out = None
            for j in range(1, M + 1):
                t = dunkl_apply(s, j, f)
                t = t.left_mul(s.e_rows(j)) if isinstance(t, SpinorPoly) else \
                    t.map_parts(lambda p, j=j: p.left_mul(s.e_rows(j)))
                out = t if out is None else _add(out, t)
            return out
        name = "D" if M == self.d else f"D[{M}]"
        return self._memo(("D", M), lambda: Primitive(name, fn, weighted="native"))

    @property
    def xun(self):
        return self.xunM(self.d)

    def xunM(self, M):
        s = self.s
        name = "xun" if M == self.d else f"xun[{M}]"
        return self._memo(("xun", M), lambda: Primitive(
            name, lambda f: apply_xun(s, f, upto=M)))

    @property
    def K(self):
        s = self.s
        return self._memo("K", lambda: Primitive("K", lambda f: kelvin_K(s, f), weighted="native"))

    @property
    def I(self):
        s = self.s
        return self._memo("I", lambda: Primitive("I", lambda f: kelvin_I(s, f), weighted="native"))

    def restrict(self, k):
        """R_k: evaluate x_k = 0."""
        return self._memo(("R", k), lambda: Primitive(
            f"R{k}", lambda f: f.map(lambda c: c.set_zero(k)), weighted="polynomial"))

    # -- derived operators ----------------------------------------------------
    def Tvec(self, v):
        """<T, v> = sum_j v_j T_j."""
        return Sum((c, self.T(j + 1)) for j, c in enumerate(v) if c)

    def xvec(self, v):
        return Sum((c, self.x(j + 1)) for j, c in enumerate(v) if c)

    def sum_kappa_sigma(self):
        roots = self.s.roots
        return Sum((roots.kappa[a], self.sigma(a)) for a in range(len(roots.roots)))

    def sum_weighted_sigma(self, weight):
        """sum_alpha kappa(alpha) weight(alpha) sigma_alpha."""
        roots = self.s.roots
        terms = []
        for a, r in enumerate(roots.roots):
            c = roots.kappa[a] * weight(r)
            if c:
                terms.append((c, self.sigma(a)))
        return Sum(terms)

    def O(self, j):
        """O_j = eps * sum_alpha kappa(alpha) alpha_j alpha_ sigma_alpha."""
        roots = self.s.roots

        def build():
            terms = [(self.eps * roots.kappa[a] * r[j - 1], self.dsig(a))
                     for a, r in enumerate(roots.roots) if r[j - 1] and roots.kappa[a]]
            return Sum(terms).named(f"O{j}")
        return self._memo(("O", j), build)

    def m(self, j):
        """m_j = 2 x_j (H - 1) - |x|^2 T_j."""
        return self._memo(("m", j), lambda: (
            2 * self.x(j) * (self.H - 1) - self.xsq * self.T(j)).named(f"m{j}"))

    def z(self, j):
        """z_j = 2 eps x_j H - xun T_j xun."""
        return self._memo(("z", j), lambda: (
            (2 * self.eps) * self.x(j) * self.H - self.xun * self.T(j) * self.xun).named(f"z{j}"))

    def zM(self, M, j):
        """Partial symmetry z_[M],j = 2 eps x_j H_[M] - xun_[M] T_j xun_[M]."""
        if not 1 <= j <= M:
            raise ValueError("partial symmetry needs 1 <= j <= M")
        return self._memo(("zM", M, j), lambda: (
            (2 * self.eps) * self.x(j) * self.HM(M)
            - self.xunM(M) * self.T(j) * self.xunM(M)).named(f"z[{M}],{j}"))

    def zvec(self, v):
        return Sum((c, self.z(j + 1)) for j, c in enumerate(v) if c)

    def mpow(self, beta):
        """m^beta = m_1^b1 ... m_d^bd."""
        return Compose([self.m(j + 1) ** b for j, b in enumerate(beta) if b] or [Identity()])

    def zpow(self, beta):
        return Compose([self.z(j + 1) ** b for j, b in enumerate(beta) if b] or [Identity()])

    def Tpow(self, beta):
        return Compose([self.T(j + 1) ** b for j, b in enumerate(beta) if b] or [Identity()])


# -- identity verification ---------------------------------------------------------

def spanning_inputs(setting: DunklSetting, max_degree: int, min_degree: int = 0,
                    spinor_indices=None):
    """Monomial times basis spinor, for all degrees in range."""
    idx = range(setting.dim) if spinor_indices is None else spinor_indices
    for n in range(min_degree, max_degree + 1):
        for e in monomials(setting.d, n):
            for i in idx:
                yield setting.monomial_spinor(e, i)


@dataclass
class IdentityReport:
    name: str
    ok: bool
    checked: int
    counterexample: tuple | None = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"[{status}] {self.name} ({self.checked} inputs)"
        if self.note:
            text += f" {self.note}"
        if self.counterexample:
            f, l, r = self.counterexample
            text += f"\n    input: {f}\n    lhs:   {l}\n    rhs:   {r}"
        return text


def verify_identity(lhs: Operator, rhs: Operator, setting: DunklSetting,
                    max_degree: int = 5, inputs=None, name: str | None = None,
                    ) -> IdentityReport:
    """Apply both sides to every spanning input; report the first mismatch."""
    if inputs is None:
        inputs = spanning_inputs(setting, max_degree)
    label = name or f"{lhs!r} == {rhs!r}"
    count = 0
    for f in inputs:
        count += 1
        a = lhs.apply(f)
        b = rhs.apply(f)
        if not values_equal(a, b):
            return IdentityReport(label, False, count, (str(f), str(a), str(b)))
    return IdentityReport(label, True, count)
