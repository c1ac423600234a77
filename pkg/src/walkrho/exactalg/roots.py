"""Certified real-root isolation by Sturm sequences and rational bisection."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import Poly, poly_gcd, sqf_part


class NoPositiveRootError(ValueError):
    pass


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of a square-free polynomial (each term made primitive)."""
    seq = [p.primitive(), p.deriv().primitive()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r * (1 / r.content()))
    return seq


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at_inf(p: Poly, positive: bool) -> int:
    s = _sign(p.lc)
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def sign_variations(seq: list[Poly], x) -> int:
    """Sign changes of the chain at x; x may be +inf/-inf as float."""
    if x == float("inf"):
        signs = [_sign_at_inf(q, True) for q in seq]
    elif x == float("-inf"):
        signs = [_sign_at_inf(q, False) for q in seq]
    else:
        signs = [q.sign_at(x) for q in seq]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo=None, hi=None, seq: Optional[list[Poly]] = None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    ``None`` for an endpoint means the corresponding infinity.
    """
    if p.degree <= 0:
        return 0
    if seq is None:
        seq = sturm_sequence(sqf_part(p))
    a = float("-inf") if lo is None else lo
    b = float("inf") if hi is None else hi
    return sign_variations(seq, a) - sign_variations(seq, b)


def cauchy_bound(p: Poly) -> Fraction:
    """Power of two strictly above every root modulus."""
    lc = abs(Fraction(p.lc))
    b = 1 + max(abs(Fraction(c)) / lc for c in p.coeffs[:-1]) if p.degree > 0 else Fraction(1)
    k = Fraction(1)
    while k <= b:
        k *= 2
    return k


@dataclass(frozen=True)
class RootBracket:
    """Isolating interval (lo, hi) for a simple real root of ``poly``.

    ``poly`` is square-free, has opposite signs at the endpoints, and has
    exactly one real root strictly between them. ``exact`` is set when
    bisection hit the root exactly.
    """

    lo: Fraction
    hi: Fraction
    poly: Poly
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        return (self.lo + self.hi) / 2

    def is_certified(self) -> bool:
        return (
            self.lo < self.hi
            and self.poly.sign_at(self.lo) * self.poly.sign_at(self.hi) < 0
            and count_roots(self.poly, self.lo, self.hi) == 1
        )

    def refine(self, tol) -> "RootBracket":
        """Bisect until width <= tol."""
        tol = Fraction(tol)
        if self.width <= tol:
            return self
        if self.exact is not None:
            return _exact_bracket(self.exact, self.lo, self.hi, self.poly, tol)
        lo, hi, p = self.lo, self.hi, self.poly
        slo = p.sign_at(lo)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            sm = p.sign_at(mid)
            if sm == 0:
                return _exact_bracket(mid, lo, hi, p, tol)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return RootBracket(lo, hi, p)

    def halve(self) -> "RootBracket":
        return self.refine(self.width / 2)


def _exact_bracket(x: Fraction, lo: Fraction, hi: Fraction, p: Poly, tol: Fraction) -> RootBracket:
    half = tol / 2
    return RootBracket(max(lo, x - half), min(hi, x + half), p, exact=x)


def _split_point(q: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point of (lo, hi) that is not a root of q."""
    mid = (lo + hi) / 2
    while q.sign_at(mid) == 0:
        mid = (mid + hi) / 2
    return mid


def isolate_smallest_positive_root(p: Poly, tol) -> RootBracket:
    """Certified bracket of width <= tol around the smallest positive root."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    k = p.trailing_zeros()
    if k:
        p = Poly(p.coeffs[k:])
    q = sqf_part(p)
    if q.degree <= 0:
        raise NoPositiveRootError("no positive root: polynomial is constant")
    seq = sturm_sequence(q)
    if count_roots(q, Fraction(0), None, seq) == 0:
        raise NoPositiveRootError(f"no positive root of {p}")
    lo, hi = Fraction(0), cauchy_bound(q)
    # invariant: no root in (0, lo], at least one in (lo, hi), q(lo), q(hi) != 0
    while count_roots(q, lo, hi, seq) != 1:
        mid = _split_point(q, lo, hi)
        if count_roots(q, lo, mid, seq) >= 1:
            hi = mid
        else:
            lo = mid
    return snap_rational(RootBracket(lo, hi, q)).refine(tol)


def snap_rational(br: RootBracket) -> RootBracket:
    """Detect a rational root exactly.

    A rational root of the primitive integer polynomial has denominator
    dividing its leading coefficient L; once the bracket is narrower than
    1/(2 L^2) the nearest fraction with denominator <= L is the only
    candidate.
    """
    if br.exact is not None:
        return br
    q = br.poly.primitive()
    L = abs(q.lc)
    br = br.refine(Fraction(1, 2 * L * L + 1))
    if br.exact is not None:
        return br
    cand = br.mid.limit_denominator(L)
    if br.lo < cand < br.hi and q(cand) == 0:
        return RootBracket(br.lo, br.hi, br.poly, exact=cand)
    return br


def isolate_real_roots(p: Poly, lo=None, hi=None) -> list[RootBracket]:
    """Isolating brackets for all real roots of p in the open interval (lo, hi).

    ``None`` means the corresponding infinity. Finite endpoints that are
    themselves roots are excluded.
    """
    q = sqf_part(p)
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    b = cauchy_bound(q)
    a0 = -b if lo is None else Fraction(lo)
    b0 = b if hi is None else Fraction(hi)
    if a0 >= b0:
        return []
    if q.sign_at(a0) == 0:
        a0 = _nudge_right(q, a0, b0, seq)
    if q.sign_at(b0) == 0:
        b0 = _nudge_left(q, a0, b0, seq)
    out: list[RootBracket] = []
    stack = [(a0, b0)]
    while stack:
        a, c = stack.pop()
        n = count_roots(q, a, c, seq)
        if n == 0:
            continue
        if n == 1:
            out.append(RootBracket(a, c, q))
            continue
        mid = _split_point(q, a, c)
        stack.append((a, mid))
        stack.append((mid, c))
    return sorted(out, key=lambda br: br.lo)


def _nudge_right(q, a, b, seq):
    step = b - a
    while count_roots(q, a, a + step, seq) != 0:
        step /= 2
    return a + step


def _nudge_left(q, a, b, seq):
    step = b - a
    while count_roots(q, b - step, b, seq) != 1 or q.sign_at(b - step) == 0:
        step /= 2
    return b - step


def compare_roots(a: RootBracket, b: RootBracket) -> int:
    """Certified sign of (root of a) - (root of b): -1, 0 or 1.

    Each root lies strictly inside its bracket. Equality is proven by a
    common factor having a root inside the overlap of both brackets.
    """
    if a.exact is not None and b.exact is not None:
        return _sign(a.exact - b.exact)
    g = poly_gcd(a.poly, b.poly)
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if g.degree > 0:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if count_roots(g, lo, hi) >= 1:
                return 0
        a, b = a.halve(), b.halve()
