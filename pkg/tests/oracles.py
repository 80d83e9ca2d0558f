"""Independent reference computations built on sympy.

Nothing here reuses the package's arithmetic: polynomials are converted to
sympy expressions, operators are applied from their textbook definitions,
and ranks come from sympy's own elimination.
"""
import sympy as sp

from dunkl_monogenics.poly import Poly
from dunkl_monogenics.scalar import format_scalar


def symbols(d):
    return sp.symbols(f"x1:{d + 1}")


def to_sym_scalar(c):
    return sp.sympify(format_scalar(c), locals={"i": sp.I, "sqrt": sp.sqrt})


def to_sym(p: Poly):
    xs = symbols(p.nvars)
    return sp.Add(*[to_sym_scalar(c) * sp.Mul(*[x ** k for x, k in zip(xs, e)])
                    for e, c in p.terms.items()])


def sym_equal(a, b):
    return sp.simplify(sp.expand(a - b)) == 0


def dunkl(expr, j, roots, kappa, d):
    """T_j f = d_j f + sum_alpha kappa alpha_j (f - f(sigma x)) / <alpha, x>."""
    xs = symbols(d)
    out = sp.diff(expr, xs[j - 1])
    for alpha, k in zip(roots, kappa):
        a = [to_sym_scalar(c) for c in alpha]
        if a[j - 1] == 0 or k == 0:
            continue
        dot = sum(ai * xi for ai, xi in zip(a, xs))
        norm2 = sum(ai * ai for ai in a)
        refl = {xi: xi - 2 * dot * ai / norm2 for xi, ai in zip(xs, a)}
        diff = expr - expr.subs(refl, simultaneous=True)
        out += to_sym_scalar(k) * a[j - 1] * sp.cancel(sp.expand(diff) / dot)
    return sp.expand(out)


def rank(rows):
    if not rows:
        return 0
    return sp.Matrix([[to_sym_scalar(a) for a in r] for r in rows]).rank(simplify=True)
