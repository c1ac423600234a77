"""Polynomials in t whose coefficients are polynomials in a parameter m.

These stand for elements of Q(m)[t] with denominators cleared. The
coefficient of ``t**i`` is the :class:`Poly` (in m) stored at index i.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .linalg import bareiss_det
from .poly import Poly, poly_gcd


def _as_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly([c])


class BivarPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @classmethod
    def from_t_poly(cls, p: Poly) -> "BivarPoly":
        return cls([Poly([c]) for c in p.coeffs])

    @classmethod
    def from_nested(cls, rows) -> "BivarPoly":
        """Build from ``rows[i][j]`` = coefficient of t^i m^j."""
        return cls([Poly(r) for r in rows])

    @property
    def degree(self) -> int:
        """Degree in t (-1 for zero)."""
        return len(self.coeffs) - 1

    @property
    def degree_m(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    @property
    def lc(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else Poly()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Poly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Poly()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BivarPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"BivarPoly({[list(c.coeffs) for c in self.coeffs]!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "t", param: str = "m") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if c.is_const():
                a = c[0]
                if mono and abs(a) == 1:
                    body = ("-" if a < 0 else "") + mono
                else:
                    body = f"{a}*{mono}" if mono else str(a)
            else:
                body = f"({c.format(param)})" + (f"*{mono}" if mono else "")
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, Poly):
            return BivarPoly([other])
        if isinstance(other, (int, Fraction)):
            return BivarPoly([Poly([other])])
        return NotImplemented

    def __neg__(self) -> "BivarPoly":
        return BivarPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivarPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BivarPoly":
        return (-self) + other

    def __mul__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BivarPoly()
        out = [Poly()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return BivarPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Poly) -> "BivarPoly":
        return BivarPoly([x * c for x in self.coeffs])

    def shift_up(self, k: int) -> "BivarPoly":
        return BivarPoly([Poly()] * k + list(self.coeffs)) if self.coeffs else self

    def neg_var(self) -> "BivarPoly":
        """p(-t, m)."""
        return BivarPoly([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def deriv_t(self) -> "BivarPoly":
        return BivarPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def swap_vars(self) -> "BivarPoly":
        """Exchange the roles of t and m."""
        dm = self.degree_m
        rows = [[c[j] for c in self.coeffs] for j in range(dm + 1)]
        return BivarPoly([Poly(r) for r in rows])

    def at_t(self, t) -> Poly:
        """Specialize t, giving a polynomial in m."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def at_m(self, m) -> Poly:
        """Specialize the parameter, giving a polynomial in t."""
        return Poly([c(m) for c in self.coeffs])

    def __call__(self, t, m):
        return self.at_m(m)(t)

    # content / division in Z[m][t] -------------------------------------

    def content(self) -> Poly:
        """gcd (in Q[m], primitive in Z[m]) of the t-coefficients."""
        g = Poly()
        for c in self.coeffs:
            g = c.primitive() if g.is_zero() else poly_gcd(g, c)
            if g.degree == 0:
                break
        return g

    def primitive(self) -> "BivarPoly":
        """Divide out the Z[m] content and the integer content; lc(lc) > 0."""
        if not self.coeffs:
            return self
        g = self.content()
        cs = [c.exact_div(g) for c in self.coeffs]
        n, d = 0, 1
        for c in cs:
            for x in c.coeffs:
                f = Fraction(x)
                n = gcd(n, f.numerator)
                d = lcm(d, f.denominator)
        k = Fraction(n, d)
        if cs[-1].lc < 0:
            k = -k
        return BivarPoly([c * (1 / k) for c in cs])

    def prem(self, other: "BivarPoly") -> "BivarPoly":
        """Pseudo-remainder lc(b)^(da-db+1) * a mod b, exact in Z[m][t]."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-division by zero")
        r = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        e = len(r) - 1 - db + 1
        if e <= 0:
            return self
        while len(r) - 1 >= db and r:
            lcr = r[-1]
            k = len(r) - 1 - db
            r = [c * lcb for c in r]
            for j, c in enumerate(other.coeffs):
                r[k + j] = r[k + j] - lcr * c
            e -= 1
            while r and r[-1].is_zero():
                r.pop()
        return BivarPoly(r).scale(lcb ** e) if e > 0 else BivarPoly(r)

    def exact_div(self, other: "BivarPoly") -> "BivarPoly":
        """Quotient in Q[m][t]; raises if ``other`` does not divide exactly."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        r = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("not divisible")
            return BivarPoly()
        q = [Poly()] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            qk = r[k + db].exact_div(lcb)
            q[k] = qk
            if not qk.is_zero():
                for j, c in enumerate(other.coeffs):
                    r[k + j] = r[k + j] - qk * c
        if any(not c.is_zero() for c in r[:db]):
            raise ArithmeticError("not divisible")
        return BivarPoly(q)


def bivar_gcd(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    """gcd in Q(m)[t], normalized primitive in Z[m][t] (primitive PRS).

    The Z[m]-content common to a and b is not a unit in Z[m][t] but is a
    unit in Q(m)[t]; it is therefore dropped.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.prem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive()


def sylvester_matrix(a: BivarPoly, b: BivarPoly) -> list[list[Poly]]:
    da, db = a.degree, b.degree
    n = da + db
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(db):
        rows.append([Poly()] * i + ac + [Poly()] * (n - i - da - 1))
    for i in range(da):
        rows.append([Poly()] * i + bc + [Poly()] * (n - i - db - 1))
    return rows


def resultant(a, b) -> Poly:
    """Res_t(a, b) as a polynomial in m (Sylvester determinant).

    Accepts :class:`BivarPoly` or plain t-polynomials (treated as constant
    in m). Nonzero iff a and b are coprime in Q(m)[t].
    """
    if isinstance(a, Poly):
        a = BivarPoly.from_t_poly(a)
    if isinstance(b, Poly):
        b = BivarPoly.from_t_poly(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if a.degree == 0 and b.degree == 0:
        return Poly([1])
    if a.degree == 0:
        return a[0] ** b.degree
    if b.degree == 0:
        return b[0] ** a.degree
    mat = sylvester_matrix(a, b)
    return bareiss_det(mat, Poly(), Poly([1]), lambda x, y: x.exact_div(y))


def discriminant(p: BivarPoly) -> Poly:
    """Res_t(p, dp/dt) as a polynomial in m (zero roots mark multiple t-roots)."""
    return resultant(p, p.deriv_t())
