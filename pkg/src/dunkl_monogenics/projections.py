"""Harmonic and monogenic projections and Xu's harmonics H_beta."""
from __future__ import annotations

from math import factorial

from gmpy2 import mpq

from .clifford import SpinorPoly
from .dunkl import DunklSetting, apply_xun, dunkl_apply, kelvin_K, laplacian
from .operators import Primitive
from .poly import Poly
from .scalar import pochhammer

__all__ = [
    "ProjectionError", "proj_harmonic", "proj_monogenic", "proj_h_to_m", "xu_harmonic",
    "dirac", "harmonic_projector", "monogenic_projector", "h_to_m_projector",
]


class ProjectionError(ArithmeticError):
    """A projection constant has a vanishing denominator."""


def dirac(setting: DunklSetting, f: SpinorPoly, upto: int | None = None) -> SpinorPoly:
    """D f = sum_j e_j T_j f (first ``upto`` variables)."""
    M = setting.d if upto is None else upto
    out = SpinorPoly.zero(f.nvars, f.dim)
    for j in range(1, M + 1):
        t = dunkl_apply(setting, j, f)
        if t:
            out = out + t.left_mul(setting.e_rows(j))
    return out


def _degree_of(f: SpinorPoly, n):
    if f.is_zero():
        return 0 if n is None else n
    if not f.is_homogeneous(n):
        raise ValueError("input is not homogeneous" if n is None
                         else f"input is not homogeneous of degree {n}")
    return f.degree() if n is None else n


def proj_harmonic(setting: DunklSetting, p: SpinorPoly, n: int | None = None) -> SpinorPoly:
    """Projection P_n (x) V -> H_n (x) V.

    sum_j |x|^(2j) Lap^j p / (4^j j! (-n - d/2 - gamma + 2)_j)
    """
    n = _degree_of(p, n)
    a = -n - mpq(setting.d, 2) - setting.gamma + 2
    out = p
    term = p
    for j in range(1, n // 2 + 1):
        term = laplacian(setting, term)
        if term.is_zero():
            break
        den = 4 ** j * factorial(j) * pochhammer(a, j)
        if not den:
            raise ProjectionError(f"harmonic projection denominator vanishes (n={n}, j={j})")
        out = out + (term * setting.xsq ** j).scale(1 / den)
    return out


def proj_monogenic(setting: DunklSetting, p: SpinorPoly, n: int | None = None) -> SpinorPoly:
    """Projection P_n (x) V -> M_n, as a three-part alternating sum."""
    n = _degree_of(p, n)
    eps = setting.eps
    base = mpq(setting.d, 2) + setting.gamma
    out = p
    # odd part: D^(2j+1) p
    odd = dirac(setting, p)
    for j in range(0, (n + 1) // 2 + 1):
        if odd.is_zero():
            break
        den = 2 ** (2 * j + 1) * factorial(j) * pochhammer(n - j - 1 + base, j + 1)
        if not den:
            raise ProjectionError(f"monogenic projection denominator vanishes (n={n}, j={j})")
        v = odd
        for _ in range(2 * j + 1):
            v = apply_xun(setting, v)
        c = -eps * (-1) ** j / den
        out = out + v.scale(c)
        odd = dirac(setting, dirac(setting, odd))
    # even part: Lap^j p
    term = p
    for j in range(1, n // 2 + 1):
        term = laplacian(setting, term)
        if term.is_zero():
            break
        den = 4 ** j * factorial(j) * pochhammer(n - j + base, j)
        if not den:
            raise ProjectionError(f"monogenic projection denominator vanishes (n={n}, j={j})")
        out = out + (term * setting.xsq ** j).scale(mpq((-1) ** j) / den)
    return out


def proj_h_to_m(setting: DunklSetting, h: SpinorPoly, n: int | None = None) -> SpinorPoly:
    """(1 - eps xun D / (2(n - 1 + d/2 + gamma))) h for a harmonic h of degree n."""
    n = _degree_of(h, n)
    den = 2 * (n - 1 + mpq(setting.d, 2) + setting.gamma)
    if not den:
        raise ProjectionError(f"harmonic-to-monogenic denominator vanishes (n={n})")
    corr = apply_xun(setting, dirac(setting, h))
    return h - corr.scale(setting.eps / den)


def xu_harmonic(setting: DunklSetting, beta) -> Poly:
    """H_beta = K T^beta K(1), computed through radially weighted elements."""
    beta = tuple(beta)
    if len(beta) != setting.d:
        raise ValueError("multi-index length differs from the dimension")
    f = kelvin_K(setting, SpinorPoly.scalar(Poly.const(setting.d, 1)))
    for j in range(setting.d, 0, -1):
        for _ in range(beta[j - 1]):
            f = dunkl_apply(setting, j, f)
    f = kelvin_K(setting, f)
    if not f.is_polynomial():
        raise ArithmeticError(f"Kelvin sandwich left a non-polynomial residue: {f}")
    return f.to_spinor().comps[0]


def _per_degree(fn):
    def apply(f):
        if f.is_zero():
            return f
        out = SpinorPoly.zero(f.nvars, f.dim)
        for n, piece in f.homogeneous_components():
            out = out + fn(piece, n)
        return out
    return apply


def harmonic_projector(setting: DunklSetting) -> Primitive:
    return Primitive("projH", _per_degree(lambda p, n: proj_harmonic(setting, p, n)),
                     weighted="polynomial")


def monogenic_projector(setting: DunklSetting) -> Primitive:
    return Primitive("projM", _per_degree(lambda p, n: proj_monogenic(setting, p, n)),
                     weighted="polynomial")


def h_to_m_projector(setting: DunklSetting) -> Primitive:
    return Primitive("projHM", _per_degree(lambda p, n: proj_h_to_m(setting, p, n)),
                     weighted="polynomial")
