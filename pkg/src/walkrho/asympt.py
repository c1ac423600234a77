"""Perturbation expansion of the dominant pole of a near-complete family.

For a seed digraph R with s edges and c two-edge walks, the complement
family A(m) = embed_complement(R, m) has

    1 / H_A(t) = 1 - (m+1) t + s t^2 - c t^3 + t^4 B(t) / A(t),

and its dominant pole r(m) expands in eps = 1/(m+1) as
r = eps * (1 + sum_i w_i eps^i). Two engines are provided: a symbolic
order-by-order solve for the w_i, and an exact interpolation fit of
certified poles in powers of 1/m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .digraph import Digraph, FamilySpec
from .exactalg import BivarPoly, Poly
from .spectral import dominant_pole
from .walkgen import family_series_symbolic, walk_count, walk_series_rational


@dataclass(frozen=True)
class PoleProblem:
    s: int
    c: int
    a: tuple[int, ...]  # a_1..a_N2 of A(t) = 1 + a_1 t + ...
    b: tuple[int, ...]  # b_0..b_N1 of B(t)
    v: int = 0  # vertex count of the seed, needed only to rebuild H_R(-t)

    @property
    def A(self) -> Poly:
        return Poly((1,) + tuple(self.a))

    @property
    def B(self) -> Poly:
        return Poly(self.b)

    def denominator(self) -> BivarPoly:
        """A(t)(1 - (m+1)t + s t^2 - c t^3) + t^4 B(t), whose smallest root is r(m)."""
        cubic = BivarPoly([Poly([1]), Poly([-1, -1]), Poly([self.s]), Poly([-self.c])])
        return BivarPoly.from_t_poly(self.A) * cubic + BivarPoly.from_t_poly(self.B.shift_up(4))


def pole_problem_from_family(R: Digraph) -> PoleProblem:
    """Split H_R(-t) into the cubic head and the tail t^4 B(t)/A(t)."""
    if R.edge_count == 0:
        raise ValueError("seed digraph needs at least one edge")
    HR = walk_series_rational(R)
    num, den = HR.num.neg_var(), HR.den.neg_var()
    s = R.edge_count
    c = walk_count(R, 2)
    head = Poly([1, -R.n, s, -c])
    tail = num - den * head
    if tail.trailing_zeros() < 4 and not tail.is_zero():
        raise ArithmeticError("series head mismatch; walk counts inconsistent")
    B = Poly(tail.coeffs[4:]) if not tail.is_zero() else Poly()
    a = tuple(int(x) for x in den.coeffs[1:])
    b = tuple(int(x) for x in B.coeffs) or (0,)
    return PoleProblem(s=s, c=c, a=a, b=b, v=R.n)


# truncated power series helpers (lists of Fractions, index = power of eps)

def _mul(x: list, y: list, n: int) -> list:
    out = [Fraction(0)] * n
    for i, xi in enumerate(x[:n]):
        if xi:
            for j, yj in enumerate(y[: n - i]):
                out[i + j] += xi * yj
    return out


def _compose(coeffs: Sequence, inner: list, n: int) -> list:
    """sum_k coeffs[k] * inner^k, inner without constant term."""
    out = [Fraction(0)] * n
    for ck in reversed(list(coeffs)):
        out = _mul(out, inner, n)
        out[0] += ck
    return out


@dataclass(frozen=True)
class EpsilonExpansion:
    w: tuple[Fraction, ...]  # w_1..w_K

    @property
    def order(self) -> int:
        return len(self.w)

    def eps_coeffs(self) -> list[Fraction]:
        """e_1..e_{K+1} with r(eps) = sum_j e_j eps^j."""
        return [Fraction(1)] + list(self.w)

    def inverse_m_coeffs(self, K: int | None = None) -> list[Fraction]:
        """d_1..d_K with r = sum_j d_j m^{-j}, from eps = x/(1+x), x = 1/m."""
        e = self.eps_coeffs()
        if K is None:
            K = len(e)
        if K > len(e):
            raise ValueError(f"expansion only known through eps^{len(e)}")
        n = K + 1
        eps = [Fraction(0)] + [Fraction((-1) ** (j - 1)) for j in range(1, n)]
        r = _compose([Fraction(0)] + e[:K], eps, n)
        return r[1:n]

    def eval_eps(self, eps) -> Fraction:
        eps = Fraction(eps)
        return sum((c * eps ** (j + 1) for j, c in enumerate(self.eps_coeffs())), Fraction(0))


def epsilon_expansion(P: PoleProblem, order: int) -> EpsilonExpansion:
    """Solve for w_1..w_order order by order.

    With t = eps T and T = 1 + Y the pole equation divided by eps reads

        A(eps(1+Y)) (-Y + s eps^2 (1+Y)^2 - c eps^3 (1+Y)^3)
            + eps^4 (1+Y)^4 B(eps(1+Y)) = 0.

    The eps^k coefficient is -w_k plus terms in w_1..w_{k-1}, so each
    w_k is the eps^k coefficient of the left side evaluated with w_k = 0.
    """
    if order < 1:
        raise ValueError("order must be positive")
    n = order + 1
    A = [Fraction(1)] + [Fraction(x) for x in P.a]
    B = [Fraction(x) for x in P.b]
    w = [Fraction(0)] * n  # w[0] unused (Y has no constant term)

    def residual(wv: list) -> list:
        Y = list(wv)
        T = [Fraction(1)] + Y[1:]
        u = [Fraction(0)] + T[: n - 1]  # eps * T
        Au = _compose(A, u, n)
        Bu = _compose(B, u, n)
        T2 = _mul(T, T, n)
        T3 = _mul(T2, T, n)
        T4 = _mul(T3, T, n)
        inner = [-y for y in Y]
        for k in range(n - 2):
            inner[k + 2] += P.s * T2[k]
        for k in range(n - 3):
            inner[k + 3] -= P.c * T3[k]
        out = _mul(Au, inner, n)
        tail = _mul(T4, Bu, n)
        for k in range(n - 4):
            out[k + 4] += tail[k]
        return out

    for k in range(1, n):
        w[k] = Fraction(0)
        w[k] = residual(w)[k]
    return EpsilonExpansion(tuple(w[1:]))


@dataclass(frozen=True)
class LaurentFit:
    coeffs: tuple[int, ...]  # d_1..d_K
    residuals: tuple[Fraction, ...]  # max_m |r(m) - sum_{i<=j} d_i m^-i| * m^(j+1), j = 1..K
    raw: tuple[Fraction, ...] = field(default=(), repr=False)  # interpolated coefficients
    sample_ms: tuple[int, ...] = ()
    max_fraction_error: Fraction = Fraction(0)


class ExpansionOrderError(ValueError):
    pass


def family_poles(den: BivarPoly, ms: Sequence[int], tol) -> dict[int, Fraction]:
    """Certified dominant poles (midpoints of width <= tol brackets) per sample m."""
    out = {}
    for m in sorted(ms):
        res = dominant_pole(den.at_m(m), Fraction(1, 10**6))
        pole = res.pole.refine(tol)
        out[m] = pole.mid
    return out


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(mat)
    a = [list(row) + [b] for row, b in zip(mat, rhs)]
    for k in range(n):
        piv = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / pk
            if f:
                row_i, row_k = a[i], a[k]
                for j in range(k, n + 1):
                    row_i[j] -= f * row_k[j]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = a[k][n] - sum(a[k][j] * x[j] for j in range(k + 1, n))
        x[k] = acc / a[k][k]
    return x


def _interpolate(points: dict[int, Fraction]) -> list[Fraction]:
    """Coefficients g_0.. of the polynomial through (1/m, m r(m))."""
    ms = sorted(points)
    xs = [Fraction(1, m) for m in ms]
    ys = [points[m] * m for m in ms]
    mat = [[x**k for k in range(len(xs))] for x in xs]
    return _solve(mat, ys)


def laurent_fit(
    family: FamilySpec,
    orders: int,
    sample_ms: Sequence[int],
    tol=None,
    max_fraction_error=Fraction(1, 1000),
) -> LaurentFit:
    """Integer Laurent coefficients d_1..d_orders of r(m) in powers of 1/m.

    Poles at every sample m are certified to width ``tol`` (default
    2^-(12 N + 64) for N samples) and interpolated exactly by a polynomial
    of degree N-1 in 1/m; the surplus terms absorb the tail of the
    series. The leading ``orders`` coefficients must be within
    ``max_fraction_error`` of integers, and must agree with a refit that
    drops the largest m.
    """
    ms = sorted(set(sample_ms))
    if len(ms) <= orders:
        raise ValueError("need more sample points than fitted orders")
    if ms[0] < family.seed.n - 1:
        raise ValueError("sample m too small for the seed")
    if tol is None:
        tol = Fraction(1, 2 ** (12 * len(ms) + 64))
    den = family_series_symbolic(family.seed).den
    poles = family_poles(den, ms, tol)
    g = _interpolate(poles)
    g_check = _interpolate({m: poles[m] for m in ms[:-1]})
    d = [round(x) for x in g[:orders]]
    worst = max(abs(x - k) for x, k in zip(g[:orders], d))
    d_check = [round(x) for x in g_check[:orders]]
    if worst > max_fraction_error or d != d_check:
        raise ExpansionOrderError(
            f"expansion order too high for sample precision: worst distance to an integer {float(worst):.3g}"
        )
    residuals = []
    for j in range(1, orders + 1):
        worst_j = Fraction(0)
        for m in ms:
            approx = sum(Fraction(d[i - 1], m**i) for i in range(1, j + 1))
            worst_j = max(worst_j, abs(poles[m] - approx) * m ** (j + 1))
        residuals.append(worst_j)
    # the scaled residual of the last order is bounded by the next coefficient's size
    bound = abs(g[orders]) + 1 + sum(abs(x) / ms[0] ** (k + 1) for k, x in enumerate(g[orders + 1 :]))
    if residuals[-1] > 2 * bound:
        raise ExpansionOrderError("residuals do not shrink like the next omitted power")
    return LaurentFit(tuple(d), tuple(residuals), tuple(g), tuple(ms), worst)


def family_pole(family: FamilySpec | Digraph, m: int, tol) -> Fraction:
    """Certified dominant pole of the family at one m (bracket midpoint)."""
    seed = family.seed if isinstance(family, FamilySpec) else family
    den = family_series_symbolic(seed).den
    return family_poles(den, [m], tol)[m]
