"""Root systems, reflections and multiplicity functions."""
from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .poly import Poly
from .scalar import Q, Scalar, parse_scalar, sqrt

__all__ = [
    "RootSystem", "PartialRealization", "RootSystemError",
    "z2", "b2", "from_roots", "build_group",
]


class RootSystemError(ValueError):
    pass


def _dot(u, v):
    total = mpq(0)
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def _as_scalar(x):
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, Scalar):
        return x
    return Q(x)


@dataclass(frozen=True)
class PartialRealization:
    """The sub-root-system supported on the first ``M`` coordinates."""

    M: int
    gamma: object
    root_indices: tuple[int, ...]


class RootSystem:
    """Normalised positive roots with a multiplicity function.

    Roots are indexed from 0; coordinates/variables from 1.  The Dunkl
    constant ``gamma`` is the sum of all multiplicities.
    """

    def __init__(self, roots, kappa, name: str | None = None):
        if len(roots) != len(kappa):
            raise RootSystemError("one multiplicity value per positive root is required")
        if not roots:
            raise RootSystemError("at least one root is required")
        self.d = len(roots[0])
        self.roots = [tuple(_as_scalar(a) for a in r) for r in roots]
        self.kappa = [_as_scalar(k) for k in kappa]
        self.name = name or "custom"
        for r in self.roots:
            if len(r) != self.d:
                raise RootSystemError("roots of differing lengths")
            if _dot(r, r) != 1:
                raise RootSystemError(f"non-unit root {tuple(map(str, r))}")
        for k in self.kappa:
            if isinstance(k, Scalar) and not k.is_real:
                raise RootSystemError("multiplicities must be real")
            if _nonneg(k) is False:
                raise RootSystemError(f"negative multiplicity {k}")
        self.gamma = sum(self.kappa, mpq(0))
        self.matrices = [self._reflection_matrix(r) for r in self.roots]
        self._kinds = [self._classify(m) for m in self.matrices]
        for m in self.matrices:
            if _matmul(m, m) != _identity(self.d):
                raise RootSystemError("reflection is not an involution")
        self._check_orbits()

    # -- construction helpers -----------------------------------------------
    def _reflection_matrix(self, alpha):
        d = self.d
        return tuple(tuple((1 if i == k else 0) - 2 * alpha[i] * alpha[k]
                           for k in range(d)) for i in range(d))

    @staticmethod
    def _classify(matrix):
        perm, signs = [], []
        for row in matrix:
            nz = [(k, a) for k, a in enumerate(row) if a]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                return ("general", matrix)
            perm.append(nz[0][0])
            signs.append(int(nz[0][1]))
        flips = [i for i in range(len(perm)) if perm[i] == i and signs[i] < 0]
        if all(perm[i] == i for i in range(len(perm))) and len(flips) == 1:
            return ("flip", flips[0] + 1)
        # x_i -> signs[i] x_{perm[i]} describes p(sigma x) with (sigma x)_i = signs[i] x_perm[i]
        return ("signed", (tuple(perm), tuple(signs)))

    def _check_orbits(self):
        for a in range(len(self.roots)):
            for b, beta in enumerate(self.roots):
                image = self.reflect(a, beta)
                neg = tuple(-t for t in image)
                match = [c for c, r in enumerate(self.roots) if r == image or r == neg]
                if not match:
                    raise RootSystemError(
                        "root list is not closed under its reflections")
                if self.kappa[match[0]] != self.kappa[b]:
                    raise RootSystemError(
                        "multiplicity function is not invariant on root orbits")

    # -- queries -------------------------------------------------------------
    def __repr__(self):
        return f"RootSystem({self.name}, d={self.d}, gamma={self.gamma})"

    @property
    def rank_count(self):
        return len(self.roots)

    def reflect(self, index: int, y):
        """sigma_alpha(y) = y - 2 <y, alpha> alpha."""
        alpha = self.roots[index]
        t = 2 * _dot(y, alpha)
        return tuple(yi - t * ai for yi, ai in zip(y, alpha))

    def apply_reflection(self, index: int, p: Poly) -> Poly:
        """(sigma_alpha f)(x) = f(sigma_alpha x); sigma_alpha is its own inverse."""
        kind, data = self._kinds[index]
        if kind == "flip":
            return p.flip(data)
        if kind == "signed":
            return p.signed_permutation(*data)
        return p.linear_substitution(data)

    def is_coordinate_root(self, index: int):
        """Return (j, sign) if the root is +-xi_j, else None."""
        nz = [(k, a) for k, a in enumerate(self.roots[index]) if a]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            return nz[0][0] + 1, int(nz[0][1])
        return None

    def is_z2(self) -> bool:
        """True when the positive roots are exactly xi_1, ..., xi_d."""
        if len(self.roots) != self.d:
            return False
        return all(self.is_coordinate_root(i) == (i + 1, 1) for i in range(self.d))

    def kappa_of_coordinate(self, j: int):
        """kappa_j for Z_2^d."""
        return self.kappa[j - 1]

    def partial(self, M: int) -> PartialRealization:
        idx = tuple(i for i, r in enumerate(self.roots)
                    if all(not a for a in r[M:]))
        gamma = sum((self.kappa[i] for i in idx), mpq(0))
        return PartialRealization(M, gamma, idx)


def _nonneg(k):
    if not isinstance(k, Scalar):
        return k >= 0
    # a + b sqrt(m) >= 0
    a, b, m = k.a, k.b, k.m
    if a >= 0 and b >= 0:
        return True
    if a <= 0 and b <= 0:
        return False
    if a >= 0:
        return a * a >= m * b * b
    return m * b * b >= a * a


def _identity(d):
    return tuple(tuple(1 if i == k else 0 for k in range(d)) for i in range(d))


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][t] * b[t][k] for t in range(n)), mpq(0))
                       for k in range(n)) for i in range(n))


# -- families ------------------------------------------------------------------

def z2(kappa) -> RootSystem:
    """The abelian group Z_2^d with positive roots xi_1..xi_d."""
    d = len(kappa)
    roots = [tuple(1 if i == j else 0 for i in range(d)) for j in range(d)]
    return RootSystem(roots, kappa, name=f"z2^{d}")


def b2(kappa_short, kappa_long) -> RootSystem:
    """B_2 with roots xi_1, xi_2, (xi_1 +- xi_2)/sqrt(2)."""
    h = 1 / sqrt(2)
    roots = [(1, 0), (0, 1), (h, h), (h, -h)]
    return RootSystem(roots, [kappa_short, kappa_short, kappa_long, kappa_long], name="b2")


def from_roots(roots, kappa, normalize: bool = True) -> RootSystem:
    """Explicit positive roots; unnormalised roots are rescaled exactly."""
    fixed = []
    for r in roots:
        r = tuple(_as_scalar(a) for a in r)
        n2 = _dot(r, r)
        if n2 != 1:
            if not normalize:
                raise RootSystemError(f"non-unit root {tuple(map(str, r))}")
            if isinstance(n2, Scalar):
                raise RootSystemError("root norm is not expressible in the configured field")
            norm = sqrt(n2)
            r = tuple(a / norm for a in r)
        fixed.append(r)
    try:
        return RootSystem(fixed, kappa)
    except ValueError as exc:
        if isinstance(exc, RootSystemError):
            raise
        raise RootSystemError(f"roots need more than one radical: {exc}") from exc


_Z2 = re.compile(r"^z2\^(\d+)$", re.IGNORECASE)


def build_group(family: str, kappa, roots=None) -> RootSystem:
    """Build a root system from a textual family name.

    ``family`` is ``"z2^d"`` (kappa: d values), ``"b2"`` (kappa: short, long)
    or ``"roots"`` (explicit ``roots`` list, one kappa per root).
    """
    kappa = [_as_scalar(k) for k in kappa]
    fam = family.strip().lower()
    m = _Z2.match(fam)
    if m:
        d = int(m.group(1))
        if d < 1:
            raise RootSystemError("z2^d needs d >= 1")
        if len(kappa) != d:
            raise RootSystemError(f"z2^{d} needs {d} multiplicities, got {len(kappa)}")
        return z2(kappa)
    if fam == "b2":
        if len(kappa) != 2:
            raise RootSystemError("b2 needs two multiplicities (short, long)")
        return b2(*kappa)
    if fam == "roots":
        if roots is None:
            raise RootSystemError("explicit root list missing")
        return from_roots(roots, kappa)
    raise RootSystemError(f"unknown group family {family!r}")
