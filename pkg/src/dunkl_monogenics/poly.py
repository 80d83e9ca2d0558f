"""Sparse exact multivariate polynomials."""
from __future__ import annotations

from gmpy2 import mpq

from .scalar import Q, format_scalar, parse_scalar

__all__ = ["Poly", "monomials", "divide_by_linear_form", "xsq", "linear_form"]


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree ``degree``, in the monomial order.

    The order lists ``(0,...,0,n)`` first and ``(n,0,...,0)`` last, which is
    plain lexicographic order on the tuples.
    """
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left + 1):
            rec(prefix + (k,), left - k, slots - 1)

    rec((), degree, nvars)
    return out


class Poly:
    """A polynomial in ``nvars`` variables: exponent tuple -> coefficient.

    Zero coefficients are never stored, so equality is dictionary equality.
    Variables are numbered from 1 in the public API (``x1 .. xd``).
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c=1):
        c = c if not isinstance(c, (int, str)) else Q(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, j, coeff=1):
        e = [0] * nvars
        e[j - 1] = 1
        return cls._raw(nvars, {tuple(e): Q(coeff) if isinstance(coeff, int) else coeff})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        c = Q(coeff) if isinstance(coeff, int) else coeff
        return cls._raw(len(exps), {exps: c} if c else {})

    # -- basic protocol ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in the monomial order."""
        return sorted(self.terms.items())

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), mpq(0))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = " ".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}"
                            for i, k in enumerate(e) if k)
            cs = format_scalar(c)
            parts.append(f"{cs} * {mono}" if mono else cs)
        return " + ".join(parts)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            other = Poly.const(self.nvars, other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return self + (-other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v = v - c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.nvars, out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return Poly._raw(self.nvars, {})
        if c == 1:
            return self
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                out[e] = w
        return Poly._raw(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Q(c) if isinstance(c, int) else 1 / c)

    def __pow__(self, n: int):
        result = Poly.const(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    # -- structure ---------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, n=None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (n is None or degs == {n})

    def homogeneous_components(self) -> list[tuple[int, "Poly"]]:
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            groups.setdefault(sum(e), {})[e] = c
        return [(n, Poly._raw(self.nvars, groups[n])) for n in sorted(groups)]

    def depends_on(self, j: int) -> bool:
        return any(e[j - 1] for e in self.terms)

    # -- primitive actions -------------------------------------------------
    def mul_var(self, j: int, power: int = 1):
        """Multiply by ``x_j ** power``."""
        i = j - 1
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i] += power
            out[tuple(f)] = c
        return Poly._raw(self.nvars, out)

    def derivative(self, j: int):
        i = j - 1
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                out[tuple(f)] = c * k
        return Poly._raw(self.nvars, out)

    def euler(self):
        """Euler operator sum_j x_j d/dx_j: scales x^b by |b|_1."""
        out = {}
        for e, c in self.terms.items():
            n = sum(e)
            if n:
                out[e] = c * n
        return Poly._raw(self.nvars, out)

    def set_zero(self, j: int):
        """Evaluate ``x_j = 0``."""
        i = j - 1
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if not e[i]})

    def flip(self, j: int):
        """Substitute ``x_j -> -x_j``."""
        i = j - 1
        return Poly._raw(self.nvars, {e: (-c if e[i] & 1 else c)
                                      for e, c in self.terms.items()})

    def signed_permutation(self, perm, signs):
        """Substitute ``x_i -> signs[i] * x_{perm[i]}`` (0-based data)."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            neg = False
            for i, k in enumerate(e):
                if k:
                    f[perm[i]] += k
                    if signs[i] < 0 and k & 1:
                        neg = not neg
            out[tuple(f)] = -c if neg else c
        return Poly._raw(self.nvars, out)

    def linear_substitution(self, matrix):
        """Return ``p(A x)`` where ``(A x)_i = sum_k A[i][k] x_k``."""
        images = []
        for row in matrix:
            images.append(Poly(self.nvars, {
                tuple(1 if t == k else 0 for t in range(self.nvars)): a
                for k, a in enumerate(row) if a}))
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        result = Poly.zero(self.nvars)
        for e, c in self.terms.items():
            term = Poly.const(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def divmod_by(self, divisor: "Poly", j: int):
        """Division with respect to the variable ``x_j``.

        ``divisor`` must have a constant leading coefficient in ``x_j``.
        Returns ``(quotient, remainder)`` where the remainder has ``x_j``-degree
        below that of the divisor.
        """
        i = j - 1
        top = max((e[i] for e in divisor.terms), default=-1)
        if top < 0:
            raise ZeroDivisionError("division by the zero polynomial")
        leads = [(e, c) for e, c in divisor.terms.items() if e[i] == top]
        if len(leads) != 1 or any(k for t, k in enumerate(leads[0][0]) if t != i):
            raise ValueError("divisor needs a constant leading coefficient in the pivot variable")
        lead = leads[0][1]
        inv_lead = 1 / lead
        rest = {e: c for e, c in divisor.terms.items() if e[i] != top}
        rem = dict(self.terms)
        quo: dict = {}
        while True:
            cand = [e for e in rem if e[i] >= top]
            if not cand:
                break
            e = max(cand, key=lambda t: t[i])
            c = rem.pop(e) * inv_lead
            qe = list(e)
            qe[i] -= top
            qe = tuple(qe)
            v = quo.get(qe)
            quo[qe] = c if v is None else v + c
            for f, d in rest.items():
                g = tuple(a + b for a, b in zip(qe, f))
                w = rem.get(g, 0) - c * d
                if w:
                    rem[g] = w
                else:
                    rem.pop(g, None)
        return Poly(self.nvars, quo), Poly._raw(self.nvars, rem)

    def divide_exact(self, divisor: "Poly", j: int):
        q, r = self.divmod_by(divisor, j)
        if r:
            raise ArithmeticError(f"{divisor} does not divide the polynomial (remainder {r})")
        return q

    # -- serialisation -----------------------------------------------------
    def to_json(self):
        return [[list(e), format_scalar(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, nvars, data):
        return cls(nvars, {tuple(e): parse_scalar(c) for e, c in data})


def linear_form(alpha) -> Poly:
    """The polynomial <alpha, x>."""
    d = len(alpha)
    return Poly(d, {tuple(1 if t == k else 0 for t in range(d)): a
                    for k, a in enumerate(alpha) if a})


def xsq(nvars: int, upto: int | None = None) -> Poly:
    """|x|^2 = x_1^2 + ... + x_M^2 (M = ``upto``, default all variables)."""
    m = nvars if upto is None else upto
    one = mpq(1)
    return Poly._raw(nvars, {tuple(2 if t == k else 0 for t in range(nvars)): one
                             for k in range(m)})


def divide_by_linear_form(p: Poly, alpha) -> Poly:
    """Exact quotient of ``p`` by <alpha, x>.

    The pivot is the first coordinate where ``alpha`` is nonzero; a nonzero
    remainder raises ``ArithmeticError``.
    """
    pivot = next(k for k, a in enumerate(alpha) if a) + 1
    return p.divide_exact(linear_form(alpha), pivot)
