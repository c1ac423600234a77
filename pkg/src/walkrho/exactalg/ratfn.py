"""Reduced rational functions num/den in t, univariate or over Q(m)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bivar import BivarPoly, bivar_gcd
from .poly import Poly, poly_gcd

PolyLike = Union[Poly, BivarPoly]


class PoleAtOriginError(ValueError):
    """The denominator vanishes at t = 0."""


@dataclass(frozen=True)
class RatFn:
    num: PolyLike
    den: PolyLike

    @property
    def symbolic(self) -> bool:
        return isinstance(self.den, BivarPoly)

    def at_m(self, m) -> "RatFn":
        if not self.symbolic:
            return self
        return RatFn(self.num.at_m(m), self.den.at_m(m))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __call__(self, t, m=None):
        if self.symbolic:
            return Fraction(self.num(t, m)) / self.den(t, m)
        return Fraction(self.num(t)) / self.den(t)

    def equals(self, other: "RatFn") -> bool:
        """Equality as rational functions (cross-multiplication)."""
        return (self.num * other.den) == (other.num * self.den)


def _const_term(p: PolyLike):
    return p[0]


def ratfn_reduce(f: RatFn) -> RatFn:
    """Cancel gcd(num, den) and normalize so that den(0) = 1 where possible.

    For symbolic functions the result is primitive in Z[m][t]; den(0) is
    scaled to 1 whenever it is a constant.
    """
    num, den = f.num, f.den
    if isinstance(num, Poly) and isinstance(den, BivarPoly):
        num = BivarPoly.from_t_poly(num)
    if isinstance(den, Poly) and isinstance(num, BivarPoly):
        den = BivarPoly.from_t_poly(den)
    c0 = _const_term(den)
    if (isinstance(c0, Poly) and c0.is_zero()) or c0 == 0:
        raise PoleAtOriginError("pole at origin: denominator has zero constant term")

    if isinstance(den, Poly):
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = Fraction(den[0])
        return RatFn(num * (1 / c), den * (1 / c))

    g = bivar_gcd(num, den)
    if g.degree > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    # strip the Z[m]-content shared by numerator and denominator
    cn, cd = num.content(), den.content()
    if not num.is_zero():
        common = poly_gcd(cn, cd)
        if common.degree > 0:
            num = BivarPoly([c.exact_div(common) for c in num])
            den = BivarPoly([c.exact_div(common) for c in den])
    c0 = den[0]
    if c0.is_const():
        k = Fraction(1) / c0[0]
        num = num.scale(Poly([k]))
        den = den.scale(Poly([k]))
    return RatFn(num, den)


def series_coeffs(f: RatFn, order: int) -> list:
    """Coefficients of t^0..t^order of the expansion of f at 0.

    Entries are exact rationals, or :class:`Poly` in m for symbolic f.
    Requires den(0) to be a nonzero constant.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = f.num, f.den
    c0 = den[0]
    if isinstance(c0, Poly):
        if not c0.is_const() or c0.is_zero():
            raise ValueError("denominator constant term must be a nonzero constant")
        inv = Fraction(1) / c0[0]
        zero = Poly()
    else:
        if c0 == 0:
            raise PoleAtOriginError("pole at origin: denominator has zero constant term")
        inv = Fraction(1) / c0
        zero = 0
    out = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den[j] * out[k - j]
        if isinstance(acc, Poly):
            acc = acc * inv
        else:
            acc = acc * inv
            if isinstance(acc, Fraction) and acc.denominator == 1:
                acc = acc.numerator
        out.append(acc)
    return out


def series_mul(a: list, b: list, order: int) -> list:
    """Truncated Cauchy product of two coefficient lists."""
    out = []
    for k in range(order + 1):
        acc = 0
        for i in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
            acc += a[i] * b[k - i]
        out.append(acc)
    return out
