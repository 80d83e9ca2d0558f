"""Exact rank and solve over the coefficient field, via fraction-free elimination."""
from __future__ import annotations

from math import lcm

from gmpy2 import mpq, mpz

from .clifford import SpinorPoly
from .poly import monomials
from .scalar import is_rational

__all__ = ["vectorize", "coordinate_labels", "rank", "solve", "echelon"]


def coordinate_labels(nvars: int, dim: int, n: int):
    """Coordinate order of :func:`vectorize`: monomial-major, spinor index minor."""
    return [(e, i) for e in monomials(nvars, n) for i in range(dim)]


def vectorize(f: SpinorPoly, n: int):
    """Coefficient vector of ``f`` in P_n (x) V."""
    if not f.is_homogeneous(n):
        raise ValueError(f"element is not homogeneous of degree {n}")
    zero = mpq(0)
    out = []
    for e in monomials(f.nvars, n):
        for c in f.comps:
            out.append(c.terms.get(e, zero))
    return out


def _integerize(rows):
    """Scale rational rows to integer rows (row scaling preserves rank)."""
    out = []
    for row in rows:
        den = 1
        for a in row:
            if a:
                den = lcm(den, int(mpq(a).denominator))
        out.append([mpz(mpq(a) * den) for a in row])
    return out


def echelon(rows):
    """Bareiss row echelon form; returns (matrix, pivot columns).

    Pivots are the first nonzero entry found scanning down each column.
    Over the integers every division is exact; other entries use exact
    field division, which is equally exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    if all(is_rational(a) for r in m for a in r):
        m = _integerize(m)
        integral = True
    else:
        integral = False
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][col]), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[r]
            for k in range(col + 1, ncols):
                v = piv * row_i[k] - a * row_r[k]
                if integral:
                    q, rem = divmod(v, prev)
                    if rem:
                        raise ArithmeticError("Bareiss division was not exact")
                    row_i[k] = q
                else:
                    row_i[k] = v / prev
            row_i[col] = 0
        prev = piv
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows) -> int:
    _, pivots = echelon(rows)
    return len(pivots)


def solve(rows, target):
    """Coefficients ``c`` with ``sum_i c[i] * rows[i] == target``, or ``None``."""
    if not rows:
        return [] if not any(target) else None
    nvec = len(rows)
    length = len(target)
    # Columns of the system are the given vectors; augment with the target.
    system = [[rows[i][k] for i in range(nvec)] + [target[k]] for k in range(length)]
    ech, pivots = echelon(system)
    if nvec in pivots:
        return None
    coeffs = [mpq(0)] * nvec
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        row = ech[r]
        acc = row[nvec]
        for k in pivots[r + 1:]:
            acc = acc - row[k] * coeffs[k]
        coeffs[col] = acc / row[col] if not isinstance(row[col], type(mpz())) else mpq(acc) / row[col]
    return coeffs
