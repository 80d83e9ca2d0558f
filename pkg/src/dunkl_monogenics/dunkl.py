"""Dunkl operators, radially weighted elements and the Kelvin transforms."""
from __future__ import annotations

from gmpy2 import mpq

from .clifford import CliffordElement, SpinorPoly, SpinorSpace
from .poly import Poly, divide_by_linear_form, xsq
from .roots import RootSystem
from .scalar import Q, format_scalar

__all__ = [
    "DunklSetting", "Weighted",
    "dunkl_apply", "laplacian", "h_operator", "euler", "kelvin_K", "kelvin_I",
]


class DunklSetting:
    """A root system together with the Clifford sign ``eps`` and spinor space.

    Every operator in the package is evaluated relative to one setting.
    """

    def __init__(self, roots: RootSystem, eps: int = -1):
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        self.roots = roots
        self.eps = eps
        self.d = roots.d
        self.gamma = roots.gamma
        self.spin = SpinorSpace(self.d, eps)
        self.dim = self.spin.dim
        self.xsq = xsq(self.d)
        self._z2 = roots.is_z2()
        self._coord = [roots.is_coordinate_root(i) for i in range(len(roots.roots))]
        self._e = [self.spin.sparse(self.spin.generator(j)) for j in range(1, self.d + 1)]
        self._root_cliff = [
            self.spin.sparse(self.spin.to_matrix(self.vector_clifford(r)))
            for r in roots.roots]
        self._partials: dict = {}

    def __repr__(self):
        return f"DunklSetting({self.roots!r}, eps={self.eps:+d})"

    @property
    def is_z2(self):
        return self._z2

    # -- Clifford helpers -----------------------------------------------------
    def clifford(self, blades) -> CliffordElement:
        return CliffordElement(self.d, self.eps, blades)

    def vector_clifford(self, coords) -> CliffordElement:
        return CliffordElement.vector(self.d, self.eps, coords)

    def e_rows(self, j):
        return self._e[j - 1]

    def root_rows(self, index):
        return self._root_cliff[index]

    def clifford_rows(self, element: CliffordElement):
        return self.spin.sparse(self.spin.to_matrix(element))

    def partial(self, M: int):
        if M not in self._partials:
            self._partials[M] = self.roots.partial(M)
        return self._partials[M]

    def gamma_partial(self, M: int):
        return self.partial(M).gamma

    def kappa(self, j: int):
        """kappa_j of Z_2^d (multiplicity of the root xi_j)."""
        return self.roots.kappa_of_coordinate(j)

    # -- inputs ---------------------------------------------------------------
    def spinor(self, index: int, poly: Poly | None = None) -> SpinorPoly:
        return SpinorPoly.basis(self.d, self.dim, index, poly)

    def monomial_spinor(self, exps, index: int, coeff=1) -> SpinorPoly:
        return self.spinor(index, Poly.monomial(exps, coeff))

    # -- Dunkl operators on plain polynomials ----------------------------------
    def dunkl_poly(self, j: int, p: Poly) -> Poly:
        if self._z2:
            return _dunkl_z2(p, j, self.roots.kappa[j - 1])
        out = p.derivative(j)
        roots = self.roots
        for a, alpha in enumerate(roots.roots):
            aj = alpha[j - 1]
            k = roots.kappa[a]
            if not aj or not k:
                continue
            coord = self._coord[a]
            if coord is not None:
                i, _ = coord
                diff = _odd_part_over_var(p, i)
                out = out + diff.scale(k * aj * coord[1] * 2)
            else:
                diff = p - roots.apply_reflection(a, p)
                if diff:
                    out = out + divide_by_linear_form(diff, alpha).scale(k * aj)
        return out

    def reflect_poly(self, index: int, p: Poly) -> Poly:
        return self.roots.apply_reflection(index, p)


def _dunkl_z2(p: Poly, j: int, kappa) -> Poly:
    i = j - 1
    out = {}
    two_k = 2 * kappa
    for e, c in p.terms.items():
        b = e[i]
        if not b:
            continue
        f = e[:i] + (b - 1,) + e[i + 1:]
        factor = b + two_k if b & 1 else b
        if factor:
            out[f] = c * factor
    return Poly._raw(p.nvars, out)


def _odd_part_over_var(p: Poly, j: int) -> Poly:
    """(p - p|_{x_j -> -x_j}) / (2 x_j)."""
    i = j - 1
    out = {}
    for e, c in p.terms.items():
        if e[i] & 1:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c
    return Poly._raw(p.nvars, out)


# -- radially weighted elements ---------------------------------------------------

def _mod2_class(s):
    return s - 2 * (s // 2)


def _xsq_power(nvars, k):
    return xsq(nvars) ** k


def _strip_xsq(nvars, s, part: SpinorPoly):
    """Pull |x|^2 factors out of ``part`` (raising the exponent accordingly)."""
    r2 = xsq(nvars)
    while True:
        quotients = []
        for c in part.comps:
            if not c:
                quotients.append(c)
                continue
            q, r = c.divmod_by(r2, 1)
            if r:
                return s, part
            quotients.append(q)
        part = SpinorPoly(quotients)
        s = s + 2


class Weighted:
    """Finite sum of ``|x|^s * part`` with rational ``s`` and spinor-polynomial parts.

    Canonical form: one entry per class of ``s`` modulo 2, and each part is
    not divisible by ``|x|^2`` (such factors are moved into the exponent).
    Two canonical elements are equal exactly when they are equal as functions.
    """

    __slots__ = ("nvars", "dim", "parts")

    def __init__(self, nvars, dim, terms=()):
        self.nvars = nvars
        self.dim = dim
        groups: dict = {}
        for s, part in terms:
            if part.is_zero():
                continue
            s = Q(s) if not isinstance(s, type(mpq())) else s
            groups.setdefault(_mod2_class(s), []).append((s, part))
        parts = {}
        for cls in sorted(groups):
            items = groups[cls]
            low = min(s for s, _ in items)
            total = SpinorPoly.zero(nvars, dim)
            for s, part in items:
                k = int((s - low) // 2)
                total = total + (part * _xsq_power(nvars, k) if k else part)
            if total.is_zero():
                continue
            s, total = _strip_xsq(nvars, low, total)
            parts[s] = total
        self.parts = parts

    @classmethod
    def of(cls, f: SpinorPoly, s=0):
        return cls(f.nvars, f.dim, [(s, f)])

    def is_zero(self):
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def is_polynomial(self) -> bool:
        return all(s >= 0 and s.denominator == 1 and s % 2 == 0 for s in self.parts)

    def to_spinor(self) -> SpinorPoly:
        """Back to a spinor polynomial; ``ValueError`` if not polynomial."""
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        total = SpinorPoly.zero(self.nvars, self.dim)
        for s, part in self.parts.items():
            k = int(s) // 2
            total = total + (part * _xsq_power(self.nvars, k) if k else part)
        return total

    def terms(self):
        return sorted(self.parts.items())

    def __eq__(self, other):
        if isinstance(other, SpinorPoly):
            other = Weighted.of(other)
        if isinstance(other, Weighted):
            return self.parts == other.parts
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, SpinorPoly):
            other = Weighted.of(other)
        return Weighted(self.nvars, self.dim, list(self.parts.items()) + list(other.parts.items()))

    __radd__ = __add__

    def __neg__(self):
        return Weighted(self.nvars, self.dim, [(s, -p) for s, p in self.parts.items()])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return Weighted(self.nvars, self.dim, [(s, p.scale(c)) for s, p in self.parts.items()])

    def map_parts(self, fn):
        """Apply an operator that commutes with radial factors to every part."""
        return Weighted(self.nvars, self.dim, [(s, fn(p)) for s, p in self.parts.items()])

    def shift(self, ds):
        """Multiply by ``|x|^ds``."""
        return Weighted(self.nvars, self.dim, [(s + ds, p) for s, p in self.parts.items()])

    def homogeneous_pieces(self):
        """Yield ``(s, n, piece)`` with piece in P_n (x) V."""
        for s, part in self.parts.items():
            for n, piece in part.homogeneous_components():
                yield s, n, piece

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"{p} * |x|^({format_scalar(s)})" if s else str(p)
                          for s, p in self.terms())

    __repr__ = __str__


# -- operators acting on SpinorPoly or Weighted ---------------------------------------

def _spinor_dunkl(setting: DunklSetting, j: int, f: SpinorPoly) -> SpinorPoly:
    return SpinorPoly(setting.dunkl_poly(j, c) for c in f.comps)


def dunkl_apply(setting: DunklSetting, j: int, f):
    """T_j; on ``|x|^s p`` the radial factor contributes ``s |x|^(s-2) x_j p``."""
    if isinstance(f, SpinorPoly):
        return _spinor_dunkl(setting, j, f)
    terms = []
    for s, part in f.parts.items():
        terms.append((s, _spinor_dunkl(setting, j, part)))
        if s:
            terms.append((s - 2, part.map(lambda c: c.mul_var(j)).scale(s)))
    return Weighted(f.nvars, f.dim, terms)


def laplacian(setting: DunklSetting, f):
    out = None
    for j in range(1, setting.d + 1):
        t = dunkl_apply(setting, j, dunkl_apply(setting, j, f))
        out = t if out is None else out + t
    return out


def euler(f, upto: int | None = None):
    """Euler operator; on weighted input it counts total homogeneity ``n + s``.

    ``upto`` restricts to the first ``upto`` variables (no weighted support).
    """
    if isinstance(f, SpinorPoly):
        if upto is None:
            return f.map(Poly.euler)
        return f.map(lambda c: _partial_euler(c, upto))
    if upto is not None:
        raise TypeError("partial Euler operator is not defined on weighted elements")
    return Weighted(f.nvars, f.dim,
                    [(s, part.map(Poly.euler) + part.scale(s)) for s, part in f.parts.items()])


def _partial_euler(p: Poly, M: int) -> Poly:
    out = {}
    for e, c in p.terms.items():
        n = sum(e[:M])
        if n:
            out[e] = c * n
    return Poly._raw(p.nvars, out)


def h_operator(setting: DunklSetting, f):
    """H = E + d/2 + gamma."""
    shift = mpq(setting.d, 2) + setting.gamma
    return euler(f) + _scale(f, shift)


def _scale(f, c):
    return f.scale(c)


def kelvin_K(setting: DunklSetting, f):
    """K f(x) = |x|^-(2 gamma + d - 2) f(x / |x|^2)."""
    w = Weighted.of(f) if isinstance(f, SpinorPoly) else f
    c = 2 * setting.gamma + setting.d - 2
    terms = [(-c - s - 2 * n, piece) for s, n, piece in w.homogeneous_pieces()]
    return Weighted(w.nvars, w.dim, terms)


def kelvin_I(setting: DunklSetting, f):
    """I f(x) = xun |x|^-(2 gamma + d) f(x / |x|^2)."""
    w = Weighted.of(f) if isinstance(f, SpinorPoly) else f
    c = 2 * setting.gamma + setting.d
    terms = [(-c - s - 2 * n, apply_xun(setting, piece)) for s, n, piece in w.homogeneous_pieces()]
    return Weighted(w.nvars, w.dim, terms)


def apply_xun(setting: DunklSetting, f: SpinorPoly, upto: int | None = None) -> SpinorPoly:
    """Vector variable sum_j x_j e_j (first ``upto`` variables)."""
    M = setting.d if upto is None else upto
    out = None
    for j in range(1, M + 1):
        t = f.map(lambda c: c.mul_var(j)).left_mul(setting.e_rows(j))
        out = t if out is None else out + t
    return out
