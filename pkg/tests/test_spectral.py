import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import digraphs
from walkrho.digraph import Digraph, complete_digraph, embed_complement, make_ml, reverse_labels, saturated_star
from walkrho.spectral import compare_spectral, power_iteration_estimate, spectral_radius, verify_perron

TOL = Fraction(1, 10**12)


def numpy_rho(A: Digraph) -> float:
    if A.n == 0:
        return 0.0
    return float(max(abs(np.linalg.eigvals(np.array(A.matrix(), dtype=float)))))


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_complete_is_exact(n):
    res = spectral_radius(complete_digraph(n), TOL)
    assert res.exact == n and res.rho_lo == res.rho_hi == n


def test_s2_closed_form_m5():
    res = spectral_radius(embed_complement(saturated_star(2), 5), TOL)
    ref = 2 * 4 / (-5 + math.sqrt(41))
    assert abs(float(res) - ref) < 1e-10
    assert abs(float(res) - 5.7015621187) < 1e-9


def test_nilpotent():
    res = spectral_radius(Digraph.from_edges(2, [(1, 2)]), TOL)
    assert res.nilpotent and res.exact == 0


@settings(max_examples=80, deadline=None)
@given(digraphs())
def test_matches_numpy_and_bound(A):
    res = spectral_radius(A, TOL)
    assert abs(float(res) - numpy_rho(A)) < 1e-7
    assert res.width <= TOL
    k = A.edge_count
    assert res.rho_hi - TOL <= 0 or (res.rho_hi - TOL) ** 2 <= k
    if res.pole is not None:
        # 1/pole and rho brackets agree
        assert res.rho_lo <= 1 / res.pole.mid <= res.rho_hi


@settings(max_examples=40, deadline=None)
@given(digraphs(max_n=5))
def test_invariant_under_transpose_and_relabel(A):
    a = spectral_radius(A, TOL)
    assert compare_spectral(a, spectral_radius(A.transpose(), TOL)) == 0
    assert compare_spectral(a, spectral_radius(reverse_labels(A), TOL)) == 0


def test_compare_distinguishes_close_values():
    a = spectral_radius(make_ml(6, 5), TOL)
    b = spectral_radius(make_ml(6, 4), TOL)
    assert compare_spectral(a, b) == 1 and compare_spectral(b, a) == -1


def test_power_iteration():
    assert power_iteration_estimate(complete_digraph(6), 5) == 6
    assert verify_perron(complete_digraph(6), spectral_radius(complete_digraph(6), TOL), 10)
    g = make_ml(5, 3)
    assert verify_perron(g, spectral_radius(g, TOL), 200)
    a1 = embed_complement(saturated_star(6), 7)
    assert verify_perron(a1, spectral_radius(a1, TOL), 200)


def test_power_iteration_periodic():
    # a 2-cycle is periodic; the shift by I still converges
    g = Digraph.from_matrix([[0, 1], [1, 0]])
    assert abs(float(power_iteration_estimate(g, 60)) - 1) < 1e-12


def test_verify_perron_needs_strong_connectivity():
    g = Digraph.from_edges(2, [(1, 2)])
    with pytest.raises(ValueError):
        verify_perron(g, spectral_radius(g, TOL), 5)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_perfect_square_equality(m):
    res = spectral_radius(complete_digraph(m), TOL)
    assert res.exact ** 2 == m * m
