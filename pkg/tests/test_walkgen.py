from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs, random_digraph
from walkrho.digraph import Digraph, complete_digraph, embed_complement, empty_digraph, make_ml, saturated_star
from walkrho.exactalg import BivarPoly, Poly, RatFn, series_coeffs
from walkrho.walkgen import (
    det_i_minus_tm,
    family_series_symbolic,
    reciprocity_defect,
    walk_count,
    walk_counts,
    walk_series,
    walk_series_rational,
)

M6_ALT = Digraph.from_matrix([[1, 1, 1], [1, 1, 0], [1, 0, 0]])


def matrix_power_walks(A: Digraph, k: int) -> int:
    """Oracle: 1^T M^k 1 with numpy object arithmetic."""
    mat = np.array(A.matrix(), dtype=object)
    v = np.ones(A.n, dtype=object)
    for _ in range(k):
        v = mat.dot(v)
    return int(sum(v))


def edge_pair_walks(A: Digraph) -> int:
    """Oracle: count pairs of consecutive edges directly."""
    E = A.edges()
    return sum(1 for (a, b) in E for (c, d) in E if b == c)


def bpoly(rows):
    """BivarPoly from t-indexed lists of m coefficients."""
    return BivarPoly([Poly(r) for r in rows])


def test_walk_count_examples():
    assert walk_count(saturated_star(6), 2) == 14
    assert walk_count(M6_ALT, 2) == 14
    assert walk_count(empty_digraph(5), 1) == 0
    assert walk_count(saturated_star(9), 2) == edge_pair_walks(saturated_star(9)) == 29
    assert walk_count(empty_digraph(3), 0) == 3


@given(digraphs())
def test_walk_counts_match_matrix_powers(A):
    counts = walk_counts(A, 6)
    assert counts == [matrix_power_walks(A, k) for k in range(7)]
    assert counts[2] == edge_pair_walks(A)


def test_walk_series_convention():
    chi = walk_series(saturated_star(6), 4).chi
    assert chi[0] == 1 and chi[1] == 4 and chi[2] == 6 and chi[3] == 14


def test_rational_series_examples():
    for n in (1, 3, 5):
        f = walk_series_rational(complete_digraph(n))
        assert (f.num, f.den) == (Poly([1]), Poly([1, -n]))
    f = walk_series_rational(Digraph.from_matrix([[0, 1], [1, 0]]))
    assert (f.num, f.den) == (Poly([1, 1]), Poly([1, -1]))
    f = walk_series_rational(embed_complement(saturated_star(2), 5))
    assert (f.num, f.den) == (Poly([1, 1]), Poly([1, -5, -4]))


def test_det_i_minus_tm_small():
    assert det_i_minus_tm(complete_digraph(3)) == Poly([1, -3])
    assert det_i_minus_tm(Digraph.from_matrix([[0, 1], [1, 0]])) == Poly([1, 0, -1])


@settings(max_examples=80, deadline=None)
@given(digraphs())
def test_rational_series_matches_walk_counts(A):
    f = walk_series_rational(A)
    Q = det_i_minus_tm(A)
    N = 2 * max(Q.degree, 0) + 1
    assert series_coeffs(f, N) == list(walk_series(A, N).chi)
    # degree of the unreduced numerator never exceeds n
    assert f.num.degree <= A.n


def test_family_series_examples():
    f = family_series_symbolic(saturated_star(2))
    assert f.num == bpoly([[1], [1]])
    assert f.den == bpoly([[1], [0, -1], [1, -1]])
    p = family_series_symbolic(saturated_star(6))
    assert p.num == bpoly([[1], [1], [-2]])
    assert p.den == bpoly([[1], [0, -1], [3, -1], [-6, 2]])
    q = family_series_symbolic(M6_ALT)
    assert q.num == bpoly([[1], [2], [-1], [-1]])
    assert q.den == bpoly([[1], [1, -1], [3, -2], [-2, 1], [-2, 1]])
    loop = family_series_symbolic(Digraph.from_matrix([[1]]))
    assert loop.num == bpoly([[1], [1]]) and loop.den == bpoly([[1], [0, -1], [0, -1]])


@settings(max_examples=40, deadline=None)
@given(digraphs(max_n=4), st.integers(0, 4))
def test_family_series_specializes(R, extra):
    m = max(R.n - 1, 1) + extra
    fam = family_series_symbolic(R).at_m(m)
    direct = walk_series_rational(embed_complement(R, m))
    assert fam.equals(direct)
    assert series_coeffs(fam, 8) == series_coeffs(direct, 8)


@given(digraphs(max_n=5))
def test_complement_head_coefficients(R):
    m = R.n + 1
    chi = series_coeffs(family_series_symbolic(R).at_m(m), 3)
    # t^2 of the inverse series is s and t^3 is -c
    inv = series_coeffs(RatFn(family_series_symbolic(R).at_m(m).den, family_series_symbolic(R).at_m(m).num), 3)
    assert inv[2] == R.edge_count
    assert inv[3] == -walk_count(R, 2)
    assert chi[1] == m + 1


def test_reciprocity_examples():
    assert all(d == 0 for d in reciprocity_defect(complete_digraph(4), 10))
    assert all(d == 0 for d in reciprocity_defect(make_ml(5, 3), 15))


def test_reciprocity_random(rng):
    for _ in range(200):
        A = random_digraph(rng)
        assert reciprocity_defect(A, 25) == [Fraction(0)] * 26


def test_walk_count_rejects_negative():
    with pytest.raises(ValueError):
        walk_count(complete_digraph(2), -1)
