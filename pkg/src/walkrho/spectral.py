"""Certified spectral radius through the dominant pole of H_A.

rho(A) = 1/r, where r is the smallest positive root of det(I - tM). For
a nonnegative matrix the Perron root is an eigenvalue of maximal
modulus, so its reciprocal is the positive root of Q closest to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .digraph import Digraph, is_strongly_connected
from .exactalg import NoPositiveRootError, Poly, RootBracket, compare_roots, isolate_smallest_positive_root
from .walkgen import det_i_minus_tm


@dataclass(frozen=True)
class SpectralResult:
    rho_lo: Fraction
    rho_hi: Fraction
    pole: Optional[RootBracket]
    exact: Optional[Fraction] = None
    nilpotent: bool = False
    method: str = "sturm-bisection on det(I - tM)"
    check_method: str = "power iteration on M + I (optional)"

    @property
    def mid(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        return (self.rho_lo + self.rho_hi) / 2

    @property
    def width(self) -> Fraction:
        return self.rho_hi - self.rho_lo

    def __float__(self) -> float:
        return float(self.mid)


def _rho_from_pole(pole: RootBracket, tol: Fraction) -> tuple[RootBracket, Fraction, Fraction]:
    if pole.exact is not None:
        rho = 1 / pole.exact
        return pole, rho, rho
    while not (pole.lo > 0 and 1 / pole.lo - 1 / pole.hi <= tol):
        pole = pole.halve()
        if pole.exact is not None:
            return _rho_from_pole(pole, tol)
    return pole, 1 / pole.hi, 1 / pole.lo


def dominant_pole(Q: Poly, tol) -> SpectralResult:
    """Spectral data from a denominator Q with Q(0) = 1.

    ``tol`` bounds the width of the rho bracket. A Q without positive
    roots means every eigenvalue is zero.
    """
    tol = Fraction(tol)
    try:
        pole = isolate_smallest_positive_root(Q, tol)
    except NoPositiveRootError:
        if Q.degree > 0 and any(c for c in Q.coeffs[1:]):
            # nonnegative matrices always have a positive root unless nilpotent
            raise
        return SpectralResult(Fraction(0), Fraction(0), None, exact=Fraction(0), nilpotent=True)
    pole, lo, hi = _rho_from_pole(pole, tol)
    exact = 1 / pole.exact if pole.exact is not None else None
    return SpectralResult(lo, hi, pole, exact=exact)


def spectral_radius(A: Digraph, tol) -> SpectralResult:
    """Certified bracket of width <= tol around rho(A).

    Nilpotent adjacency (no cycle) gives an exact zero with ``nilpotent``
    set.
    """
    return dominant_pole(det_i_minus_tm(A), tol)


def compare_spectral(a: SpectralResult, b: SpectralResult) -> int:
    """Certified sign of rho(a) - rho(b)."""
    if a.nilpotent or b.nilpotent:
        if a.nilpotent and b.nilpotent:
            return 0
        return -1 if a.nilpotent else 1
    # larger rho means smaller pole
    return -compare_roots(a.pole, b.pole)


def power_iteration_estimate(A: Digraph, iters: int) -> Fraction:
    """Growth ratio of 1^T (M+I)^k 1 after ``iters`` steps, minus 1.

    The shift makes an irreducible M primitive, so the ratio converges to
    rho even for periodic digraphs. Integer arithmetic throughout.
    """
    v = [1] * A.n
    prev = A.n
    ratio = Fraction(0)
    for _ in range(iters):
        w = list(v)
        for i, r in enumerate(A.rows):
            j = 0
            while r:
                if r & 1:
                    w[i] += v[j]
                r >>= 1
                j += 1
        total = sum(w)
        ratio = Fraction(total, prev)
        v, prev = w, total
    return ratio - 1


def verify_perron(A: Digraph, result: SpectralResult, iters: int, tol=Fraction(1, 10**6)) -> bool:
    """Power-iteration estimate lies in [rho_lo - tol, rho_hi + tol]."""
    if not is_strongly_connected(A):
        raise ValueError("verify_perron needs a strongly connected digraph")
    est = power_iteration_estimate(A, iters)
    tol = Fraction(tol)
    return result.rho_lo - tol <= est <= result.rho_hi + tol
