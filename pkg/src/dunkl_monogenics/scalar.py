"""Exact coefficient arithmetic.

Rational numbers are plain ``gmpy2.mpq`` values. Anything involving a real
quadratic radical ``sqrt(m)`` or the imaginary unit is a :class:`Scalar`,
which always normalises back to ``mpq`` when its irrational parts vanish.
Both kinds mix freely under ``+ - * /``.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from numbers import Integral

from gmpy2 import mpq, mpz

__all__ = [
    "Q", "Scalar", "I", "sqrt", "is_rational", "pochhammer",
    "parse_scalar", "format_scalar", "conjugate", "real_part", "imag_part",
]


def Q(x=0, den=None):
    """Coerce ``x`` (int, str ``"p/q"``, Fraction, mpq) to an exact rational."""
    if den is not None:
        return mpq(x, den)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def is_rational(x) -> bool:
    return not isinstance(x, Scalar)


class Scalar:
    """``a + b*sqrt(m) + i*(c + d*sqrt(m))`` with rational a, b, c, d.

    Instances are immutable and never represent a rational number; the
    constructor helper :func:`_make` returns ``mpq`` in that case.
    ``m`` is a squarefree integer > 1, or 0 when no radical part is present.
    Combining values with two different radicals raises ``ValueError``.
    """

    __slots__ = ("a", "b", "c", "d", "m")

    def __init__(self, a, b, c, d, m):
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self.m = m

    # -- helpers -----------------------------------------------------------
    def _parts(self):
        return self.a, self.b, self.c, self.d, self.m

    @property
    def is_real(self) -> bool:
        return not self.c and not self.d

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    __str__ = lambda self: format_scalar(self)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.m))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._parts() == other._parts()
        if isinstance(other, _RATIONAL_TYPES):
            return False
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return True

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d, self.m)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        a2, b2, c2, d2, m2 = _split(other)
        m = _join_radicals(self.m, m2)
        return _make(self.a + a2, self.b + b2, self.c + c2, self.d + d2, m)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        a2, b2, c2, d2, m2 = _split(other)
        m = _join_radicals(self.m, m2)
        return _make(self.a - a2, self.b - b2, self.c - c2, self.d - d2, m)

    def __rsub__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        a1, b1, c1, d1, m1 = self._parts()
        if not isinstance(other, Scalar):
            o = mpq(other)
            return _make(a1 * o, b1 * o, c1 * o, d1 * o, m1)
        a2, b2, c2, d2, m2 = other._parts()
        m = _join_radicals(m1, m2)
        if not (b1 or d1 or b2 or d2):
            # Gaussian rationals
            return _make(a1 * a2 - c1 * c2, 0, a1 * c2 + c1 * a2, 0, 0)
        # (u1 + i v1)(u2 + i v2) with u, v in Q(sqrt m)
        ur, us = _qmul(a1, b1, a2, b2, m)
        vr, vs = _qmul(c1, d1, c2, d2, m)
        wr, ws = _qmul(a1, b1, c2, d2, m)
        xr, xs = _qmul(c1, d1, a2, b2, m)
        return _make(ur - vr, us - vs, wr + xr, ws + xs, m)

    __rmul__ = __mul__

    def inverse(self):
        a, b, c, d, m = self._parts()
        # norm u^2 + v^2 of u + i v, an element of Q(sqrt m)
        nr, ns = _qmul(a, b, a, b, m)
        vr, vs = _qmul(c, d, c, d, m)
        nr, ns = nr + vr, ns + vs
        # 1 / (nr + ns sqrt m)
        den = nr * nr - m * ns * ns
        if den == 0:
            raise ZeroDivisionError("division by zero")
        ir, is_ = nr / den, -ns / den
        ar, as_ = _qmul(a, b, ir, is_, m)
        cr, cs = _qmul(c, d, ir, is_, m)
        return _make(ar, as_, -cr, -cs, m)

    def __truediv__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        if not isinstance(other, Scalar):
            o = mpq(other)
            if o == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / o)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, _NUMBER_TYPES):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, (int, Integral)):
            return NotImplemented
        if n < 0:
            return (self.inverse()) ** (-n)
        result = mpq(1)
        base = self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result


_RATIONAL_TYPES = (int, Integral, type(mpq()), type(mpz()), Fraction)
_NUMBER_TYPES = _RATIONAL_TYPES + (Scalar,)


def _split(x):
    if isinstance(x, Scalar):
        return x._parts()
    return mpq(x), 0, 0, 0, 0


def _join_radicals(m1, m2):
    if m1 and m2 and m1 != m2:
        raise ValueError(f"mixed radicals sqrt({m1}) and sqrt({m2}) are not supported")
    return m1 or m2


def _qmul(a1, b1, a2, b2, m):
    return a1 * a2 + m * b1 * b2, a1 * b2 + b1 * a2


def _make(a, b, c, d, m):
    if not b and not d:
        m = 0
        if not c:
            return mpq(a)
    return Scalar(mpq(a), mpq(b), mpq(c), mpq(d), m)


def _squarefree_split(n: int):
    """Return (k, r) with n = k^2 * r and r squarefree."""
    k, r, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            r *= p
        p += 1
    return k, r * n


def sqrt(x):
    """Exact square root of a non-negative rational.

    Returns ``mpq`` for perfect squares and a radical :class:`Scalar`
    otherwise; negative arguments give an imaginary result.
    """
    if isinstance(x, Scalar):
        raise ValueError(f"square root of {x} is outside the supported field")
    q = Q(x)
    if q == 0:
        return q
    if q < 0:
        return sqrt(-q) * I
    num, den = int(q.numerator), int(q.denominator)
    # sqrt(num/den) = sqrt(num*den)/den
    k, r = _squarefree_split(num * den)
    if r == 1:
        return mpq(k, den)
    return Scalar(mpq(0), mpq(k, den), mpq(0), mpq(0), r)


I = Scalar(mpq(0), mpq(0), mpq(1), mpq(0), 0)


def conjugate(x):
    """Complex conjugate (the radical is real and left alone)."""
    if not isinstance(x, Scalar):
        return x
    return _make(x.a, x.b, -x.c, -x.d, x.m)


def real_part(x):
    if not isinstance(x, Scalar):
        return x
    return _make(x.a, x.b, 0, 0, x.m)


def imag_part(x):
    if not isinstance(x, Scalar):
        return mpq(0)
    return _make(x.c, x.d, 0, 0, x.m)


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    result = mpq(1)
    for k in range(n):
        result = (a + k) * result
    return result


# -- text form ---------------------------------------------------------------

def _fmt_real(r, s, m):
    """Format r + s*sqrt(m) ; empty string when zero."""
    out = ""
    if r:
        out = str(r)
    if s:
        mag = "" if abs(s) == 1 else f"{abs(s)}*"
        term = f"{mag}sqrt({m})"
        if s < 0:
            out = f"{out}-{term}"
        else:
            out = f"{out}+{term}" if out else term
    return out


def format_scalar(x) -> str:
    """Canonical text: ``"p/q"``, ``"p/q+r/s*sqrt(m)"``, ``"...+(...)*i"``."""
    if not isinstance(x, Scalar):
        return str(mpq(x))
    re = _fmt_real(x.a, x.b, x.m)
    if not x.c and not x.d:
        return re
    if x.d:
        im = f"({_fmt_real(x.c, x.d, x.m)})*i"
        sep = "+"
    else:
        mag = "" if abs(x.c) == 1 else f"{abs(x.c)}*"
        im = f"{mag}i"
        sep = "-" if x.c < 0 else "+"
        if not re and x.c < 0:
            return f"-{im}"
    return f"{re}{sep}{im}" if re else im


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_scalar(text: str):
    """Parse the text form produced by :func:`format_scalar`.

    Accepts sums/products/quotients of integers, ``sqrt(<int>)`` and ``i``.
    """
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return mpq(node.value)
        if isinstance(node, ast.Name) and node.id in ("i", "I"):
            return I
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                return lhs / rhs
            if not (isinstance(rhs, type(mpq())) and rhs.denominator == 1):
                raise ValueError("only integer powers are allowed")
            return lhs ** int(rhs)
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id == "sqrt" and len(node.args) == 1):
            return sqrt(ev(node.args[0]))
        raise ValueError(f"unsupported syntax in scalar {text!r}")

    return ev(tree)
