"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored low-to-high; ``coeffs[i]`` multiplies ``x**i``.
Integral values are kept as ``int`` so that the common all-integer case
stays fast, and any ``Fraction`` is demoted to ``int`` when its
denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"non-rational coefficient {c!r}")


def _strip(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Poly:
    """Immutable dense polynomial over Q.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", tuple(_strip([_norm(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    # basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # evaluation -------------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lc = Fraction(other.lc)
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lc
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # transforms -------------------------------------------------------

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def neg_var(self) -> "Poly":
        """p(-x)."""
        return Poly([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def shift_up(self, k: int) -> "Poly":
        """x**k * p(x)."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def truncate(self, n: int) -> "Poly":
        """Keep terms of degree < n."""
        return Poly(self.coeffs[:n])

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def trailing_zeros(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    # content ----------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with p/c primitive in Z[x]; 0 for the zero poly."""
        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            f = Fraction(c)
            num = gcd(num, f.numerator)
            den = den * f.denominator // gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Primitive integer polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly([Fraction(x) / c for x in self.coeffs])

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = Fraction(self.lc)
        return Poly([Fraction(c) / lc for c in self.coeffs])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor over Q, returned primitive in Z[x] with lc > 0."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, (a % b).primitive()
    return a.primitive()


def sqf_part(p: Poly) -> Poly:
    """Square-free part of p (same roots, all simple)."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.deriv())
    return p.exact_div(g) if g.degree > 0 else p


def poly_from_roots(roots: Sequence) -> Poly:
    p = Poly([1])
    for r in roots:
        p = p * Poly([-r, 1])
    return p


T = Poly([0, 1])
ONE = Poly([1])
ZERO = Poly()
