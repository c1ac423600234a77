"""Walk counts, the walk generating function H_A(t), and reciprocity.

Convention: chi_0 = 1 and chi_k = 1^T M^(k-1) 1 for k >= 1, so chi_1 is
the vertex count, chi_2 the edge count, and the t^3 coefficient of H_A
counts walks with two edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, complement
from .exactalg import BivarPoly, Poly, RatFn, bareiss_det, ratfn_reduce, series_mul


@dataclass(frozen=True)
class WalkSeries:
    source: Digraph
    chi: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.chi[k]

    def __len__(self) -> int:
        return len(self.chi)


def _step(A: Digraph, v: list[int]) -> list[int]:
    out = []
    for r in A.rows:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc += v[j]
            r >>= 1
            j += 1
        out.append(acc)
    return out


def walk_counts(A: Digraph, max_len: int) -> list[int]:
    """[walk_count(A, 0), ..., walk_count(A, max_len)]."""
    v = [1] * A.n
    out = [A.n]
    for _ in range(max_len):
        v = _step(A, v)
        out.append(sum(v))
    return out


def walk_count(A: Digraph, length: int) -> int:
    """Number of directed walks with ``length`` edges, 1^T M^length 1."""
    if length < 0:
        raise ValueError("walk length must be nonnegative")
    return walk_counts(A, length)[-1]


def walk_series(A: Digraph, order: int) -> WalkSeries:
    """chi_0..chi_order."""
    chi = [1] + (walk_counts(A, order - 1) if order >= 1 else [])
    return WalkSeries(A, tuple(chi))


def det_i_minus_tm(A: Digraph) -> Poly:
    """Q(t) = det(I - tM) by fraction-free elimination over Z[t]."""
    n = A.n
    mat = []
    for i, r in enumerate(A.rows):
        row = []
        for j in range(n):
            row.append(Poly([int(i == j), -(r >> j & 1)]))
        mat.append(row)
    return bareiss_det(mat, Poly(), Poly([1]), lambda a, b: a.exact_div(b))


def walk_series_rational(A: Digraph) -> RatFn:
    """H_A(t) = P(t)/Q(t), gcd-reduced with den(0) = 1.

    P is recovered as Q times the truncated walk series; P has degree at
    most n (it equals Q + t * 1^T adj(I - tM) 1).
    """
    Q = det_i_minus_tm(A)
    n = A.n
    chi = walk_series(A, n).chi
    P = (Q * Poly(chi)).truncate(n + 1)
    return ratfn_reduce(RatFn(P, Q))


def family_series_symbolic(R: Digraph) -> RatFn:
    """H_A(t) over Q(m) for A = embed_complement(R, m).

    Uses H_A(t) = 1 / (H_R(-t) - (m + 1 - v_R) t): padding R with isolated
    vertices only adds to the linear coefficient, and complementation
    inverts the series at -t.
    """
    if R.n < 1:
        raise ValueError("seed digraph must have at least one vertex")
    HR = walk_series_rational(R)
    num_r = BivarPoly.from_t_poly(HR.num.neg_var())
    den_r = BivarPoly.from_t_poly(HR.den.neg_var())
    # (m + 1 - v) t, as a polynomial in t with coefficients in m
    pad = BivarPoly([Poly(), Poly([1 - R.n, 1])])
    return ratfn_reduce(RatFn(den_r, num_r - pad * den_r))


def reciprocity_defect(A: Digraph, order: int) -> list[Fraction]:
    """Coefficients of t^0..t^order of H_A(t) H_{complement A}(-t) - 1."""
    a = list(walk_series(A, order).chi)
    b = list(walk_series(complement(A), order).chi)
    b = [c if k % 2 == 0 else -c for k, c in enumerate(b)]
    prod = series_mul(a, b, order)
    prod[0] -= 1
    return [Fraction(c) for c in prod]
