"""Clifford algebra Cl(d) with e_i e_j + e_j e_i = 2 eps delta_ij, its spinor
module V, and spinor-valued polynomials P (x) V."""
from __future__ import annotations

from gmpy2 import mpq

from .poly import Poly
from .scalar import I, Q, format_scalar

__all__ = [
    "CliffordElement", "SpinorSpace", "SpinorPoly", "blade_name",
    "matmul", "identity_matrix",
]


def _reorder_sign(a: int, b: int) -> int:
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_name(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"e{k + 1}" for k in range(mask.bit_length()) if mask >> k & 1)


class CliffordElement:
    """Sparse blade-bitmask -> coefficient map; bit ``k`` stands for ``e_{k+1}``."""

    __slots__ = ("d", "eps", "blades")

    def __init__(self, d: int, eps: int, blades=None):
        self.d = d
        self.eps = eps
        self.blades = {m: c for m, c in (blades or {}).items() if c}

    @classmethod
    def scalar(cls, d, eps, c=1):
        return cls(d, eps, {0: Q(c) if isinstance(c, int) else c})

    @classmethod
    def generator(cls, d, eps, j):
        return cls(d, eps, {1 << (j - 1): mpq(1)})

    @classmethod
    def vector(cls, d, eps, coords):
        """sum_j coords[j-1] e_j, e.g. the Clifford image of a root."""
        return cls(d, eps, {1 << k: c for k, c in enumerate(coords) if c})

    def _check(self, other):
        if (self.d, self.eps) != (other.d, other.eps):
            raise ValueError("Clifford elements from different algebras")

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return (self.d, self.eps, self.blades) == (other.d, other.eps, other.blades)
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        out = dict(self.blades)
        for m, c in other.blades.items():
            out[m] = out.get(m, 0) + c
        return CliffordElement(self.d, self.eps, out)

    def __neg__(self):
        return CliffordElement(self.d, self.eps, {m: -c for m, c in self.blades.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.d, self.eps, {m: c * other for m, c in self.blades.items()})
        return blade_mul(self, other)

    def __rmul__(self, other):
        return CliffordElement(self.d, self.eps, {m: other * c for m, c in self.blades.items()})

    def __str__(self):
        if not self.blades:
            return "0"
        return " + ".join(f"{format_scalar(c)}*{blade_name(m)}"
                          for m, c in sorted(self.blades.items()))

    __repr__ = __str__


def blade_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Associative eps-signed Clifford product."""
    a._check(b)
    out: dict = {}
    eps = a.eps
    for ma, ca in a.blades.items():
        for mb, cb in b.blades.items():
            sign = _reorder_sign(ma, mb)
            if eps < 0 and bin(ma & mb).count("1") & 1:
                sign = -sign
            m = ma ^ mb
            v = ca * cb if sign > 0 else -(ca * cb)
            out[m] = out.get(m, 0) + v
    return CliffordElement(a.d, a.eps, out)


# -- exact matrices ------------------------------------------------------------

def identity_matrix(n):
    return tuple(tuple(mpq(1) if i == k else mpq(0) for k in range(n)) for i in range(n))


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][t] * b[t][k] for t in range(m) if a[i][t] and b[t][k]), mpq(0))
                       for k in range(p)) for i in range(n))


def _kron(a, b):
    return tuple(tuple(x * y for x in ra for y in rb) for ra in a for rb in b)


def _scale_matrix(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def _add_matrix(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


_ONE = ((mpq(1),),)
_PX = ((mpq(0), mpq(1)), (mpq(1), mpq(0)))
_PY = ((mpq(0), -I), (I, mpq(0)))
_PZ = ((mpq(1), mpq(0)), (mpq(0), mpq(-1)))
_P1 = identity_matrix(2)


def _kron_all(mats):
    out = _ONE
    for m in mats:
        out = _kron(out, m)
    return out


class SpinorSpace:
    """Concrete irreducible Cl(d)-module of dimension 2^floor(d/2).

    Generators come from the usual Pauli tensor pattern; for ``eps = -1``
    each generator is the ``eps = +1`` matrix times ``i``.
    """

    def __init__(self, d: int, eps: int):
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        self.d = d
        self.eps = eps
        k = d // 2
        self.dim = 2 ** k
        gens = []
        for j in range(k):
            left = [_PZ] * j
            right = [_P1] * (k - j - 1)
            gens.append(_kron_all(left + [_PX] + right))
            gens.append(_kron_all(left + [_PY] + right))
        if d % 2:
            gens.append(_kron_all([_PZ] * k))
        if eps < 0:
            gens = [_scale_matrix(I, g) for g in gens]
        self.generators = tuple(gens)
        self._sparse_cache: dict = {}

    def __repr__(self):
        return f"SpinorSpace(d={self.d}, eps={self.eps:+d}, dim={self.dim})"

    def generator(self, j: int):
        return self.generators[j - 1]

    def blade_matrix(self, mask: int):
        out = identity_matrix(self.dim)
        for k in range(self.d):
            if mask >> k & 1:
                out = matmul(out, self.generators[k])
        return out

    def to_matrix(self, element: CliffordElement):
        if (element.d, element.eps) != (self.d, self.eps):
            raise ValueError("element belongs to a different Clifford algebra")
        out = tuple(tuple(mpq(0) for _ in range(self.dim)) for _ in range(self.dim))
        for mask, c in element.blades.items():
            out = _add_matrix(out, _scale_matrix(c, self.blade_matrix(mask)))
        return out

    def pseudoscalar_value(self):
        """For odd d, the scalar by which e_1...e_d acts (the rep is not faithful)."""
        m = self.blade_matrix((1 << self.d) - 1)
        if all(m[i][k] == (m[0][0] if i == k else 0)
               for i in range(self.dim) for k in range(self.dim)):
            return m[0][0]
        return None

    def sparse(self, matrix):
        """Row-wise nonzero pattern [(col, coeff), ...] of a matrix."""
        key = id(matrix)
        hit = self._sparse_cache.get(key)
        if hit is not None and hit[0] is matrix:
            return hit[1]
        rows = tuple(tuple((k, c) for k, c in enumerate(row) if c) for row in matrix)
        self._sparse_cache[key] = (matrix, rows)
        return rows

    def format_matrix(self, matrix) -> str:
        return "\n".join("[" + ", ".join(format_scalar(c) for c in row) + "]" for row in matrix)


class SpinorPoly:
    """An element of P (x) V: one polynomial per spinor coordinate."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = tuple(comps)

    @property
    def nvars(self):
        return self.comps[0].nvars

    @property
    def dim(self):
        return len(self.comps)

    @classmethod
    def zero(cls, nvars, dim):
        return cls(Poly.zero(nvars) for _ in range(dim))

    @classmethod
    def basis(cls, nvars, dim, index, poly=None):
        """``poly * s_index`` for the standard spinor basis vector ``s_index``."""
        p = Poly.const(nvars, 1) if poly is None else poly
        return cls(p if i == index else Poly.zero(nvars) for i in range(dim))

    @classmethod
    def scalar(cls, poly: Poly):
        """A plain polynomial viewed as a one-component spinor field."""
        return cls((poly,))

    def __bool__(self):
        return any(self.comps)

    def is_zero(self):
        return not any(self.comps)

    def __eq__(self, other):
        if isinstance(other, SpinorPoly):
            return self.comps == other.comps
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        return SpinorPoly(a + b for a, b in zip(self.comps, other.comps))

    def __sub__(self, other):
        return SpinorPoly(a - b for a, b in zip(self.comps, other.comps))

    def __neg__(self):
        return SpinorPoly(-a for a in self.comps)

    def scale(self, c):
        return SpinorPoly(a.scale(c) for a in self.comps)

    def __mul__(self, c):
        if isinstance(c, Poly):
            return SpinorPoly(a * c for a in self.comps)
        return self.scale(c)

    __rmul__ = __mul__

    def map(self, fn):
        return SpinorPoly(fn(a) for a in self.comps)

    def left_mul(self, sparse_rows):
        """Apply a matrix given in :meth:`SpinorSpace.sparse` form."""
        nvars = self.nvars
        out = []
        for row in sparse_rows:
            acc = Poly.zero(nvars)
            for k, c in row:
                if self.comps[k]:
                    acc = acc + self.comps[k].scale(c)
            out.append(acc)
        return SpinorPoly(out)

    def degree(self):
        return max(c.degree() for c in self.comps)

    def is_homogeneous(self, n=None):
        degs = {sum(e) for c in self.comps for e in c.terms}
        if not degs:
            return True
        return len(degs) == 1 and (n is None or degs == {n})

    def homogeneous_components(self):
        degs = sorted({sum(e) for c in self.comps for e in c.terms})
        out = []
        for n in degs:
            out.append((n, SpinorPoly(
                Poly._raw(c.nvars, {e: v for e, v in c.terms.items() if sum(e) == n})
                for c in self.comps)))
        return out

    def __str__(self):
        return "[" + "; ".join(str(c) for c in self.comps) + "]"

    __repr__ = __str__

    def to_json(self):
        return [c.to_json() for c in self.comps]
