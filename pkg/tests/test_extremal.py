import json
import math
from fractions import Fraction
from itertools import combinations

import pytest

from walkrho.digraph import (
    Digraph,
    FamilySpec,
    canonical_form,
    complete_digraph,
    corner_hole,
    is_partition_shaped,
    is_strongly_connected,
    make_ml,
    saturated_star,
)
from walkrho.exactalg import BivarPoly, Poly
from walkrho.extremal import (
    SearchTooLargeError,
    SharedPoleBranchError,
    backelin_argmax,
    difference_polynomial,
    dominance_check,
    enumerate_pdi,
    exhaustive_rho_max,
    no_crossing_certificate,
    pdi_connectivity,
    reversal_classes,
)
from walkrho.spectral import compare_spectral, spectral_radius
from walkrho.walkgen import walk_count

M6_ALT = Digraph.from_matrix([[1, 1, 1], [1, 1, 0], [1, 0, 0]])


def pdi_bruteforce(m, s):
    """Oracle: all (m+1)^2 - s edge matrices filtered by shape."""
    n = m + 1
    found = set()
    for zeros in combinations(range(n * n), s):
        rows = [(1 << n) - 1] * n
        for c in zeros:
            rows[c // n] &= ~(1 << (c % n))
        g = Digraph(n, tuple(rows))
        if is_partition_shaped(g):
            found.add(g)
    return found


def test_pdi_small_matches_bruteforce():
    members = enumerate_pdi(5, 2)
    assert len(members) == 2
    assert set(members) == pdi_bruteforce(5, 2)
    assert set(enumerate_pdi(3, 3)) == pdi_bruteforce(3, 3)


def test_pdi_cardinality_independent_of_m():
    assert len(enumerate_pdi(10, 3)) == len(enumerate_pdi(20, 3)) == 3


def test_pdi_rejects_bad_parameters():
    with pytest.raises(ValueError):
        enumerate_pdi(5, 0)
    with pytest.raises(ValueError):
        enumerate_pdi(3, 6)


@pytest.mark.parametrize("m,s", [(4, 3), (5, 2), (6, 5), (7, 7), (9, 9)])
def test_pdi_members_connected_when_s_at_most_m(m, s):
    for g in enumerate_pdi(m, s):
        assert is_partition_shaped(g)
        assert is_strongly_connected(g)
        assert g.edge_count == (m + 1) ** 2 - s


def test_pdi_members_can_disconnect_for_large_s():
    # s >= m + 1 allows a whole zero row
    conn = pdi_connectivity(4, 6)
    assert conn[(5, 1)] is False and conn[(2, 1, 1, 1, 1)] is False
    assert conn[(3, 2, 1)] is True


def test_backelin_examples():
    r4 = backelin_argmax(4, 5)
    assert r4.value == 8
    assert complete_digraph(2) in r4.argmax
    r6 = backelin_argmax(6, 6)
    assert r6.value == 14
    assert set(r6.details["argmax_up_to_reversal"]) == {canonical_form(saturated_star(6)), canonical_form(M6_ALT)}
    # reversing every edge keeps walk counts, so the reversed star is also a maximizer
    assert canonical_form(saturated_star(6).transpose()) in r6.argmax
    r5 = backelin_argmax(5, 6)
    assert r5.argmax == [canonical_form(saturated_star(5))]


def test_backelin_report_invariants():
    rep = backelin_argmax(5, 5)
    assert rep.examined == math.comb(25, 5) == rep.universe["size"]
    for g in rep.argmax:
        assert walk_count(g, 2) == rep.value and g.edge_count == 5
    assert "heuristic" in rep.notes[0]


def test_backelin_refuses_large_universe():
    with pytest.raises(SearchTooLargeError):
        backelin_argmax(12, 7)


def test_backelin_deterministic():
    a, b = backelin_argmax(6, 5), backelin_argmax(6, 5)
    assert a.argmax == b.argmax and a.value == b.value


def test_exhaustive_small():
    rep = exhaustive_rho_max(2, 4, Fraction(1, 10**9))
    assert rep.value == {"rho_lo": 2, "rho_hi": 2}
    assert rep.argmax == [complete_digraph(2)]
    rep = exhaustive_rho_max(3, 7, Fraction(1, 10**9))
    assert rep.examined == 36
    assert rep.details["max_equals_partition_shaped_max"]
    assert rep.details["rho_le_sqrt_k"]
    shaped = [canonical_form(g) for g in rep.details["partition_shaped_argmax"]]
    assert any(g in rep.argmax for g in shaped)


def test_exhaustive_refuses_large_universe():
    with pytest.raises(SearchTooLargeError):
        exhaustive_rho_max(6, 18, Fraction(1, 10**6))


def test_report_serialization():
    rep = exhaustive_rho_max(2, 3, Fraction(1, 10**9))
    doc = json.loads(rep.to_json())
    assert doc["examined"] == 4
    assert "examined: 4" in rep.to_text()


def test_dominance_s7():
    rep = dominance_check(30, 7, 12)
    assert rep.details["violations"] == []
    star_c = rep.details["star_c"]
    for comp in rep.details["competitors"].values():
        assert comp["t3_diff"] == comp["c_minus_d"] > 0
        assert star_c - comp["d"] == comp["c_minus_d"]


def test_dominance_s6_reports_equal_c_competitor():
    rep = dominance_check(20, 6, 8)
    assert [v["partition"] for v in rep.details["violations"]] == [(3, 2, 1)]


def test_dominance_excludes_s4():
    with pytest.raises(ValueError):
        dominance_check(10, 4, 6)


def test_difference_polynomial_s7():
    fits = difference_polynomial(7, 6, range(20, 41))
    assert fits
    for f in fits.values():
        assert f["exact_fit"] and f["degree"] == 3
        assert f["leading"] == 4 * f["c_minus_d"]


def test_certificate_s6():
    A, B = FamilySpec(saturated_star(6)), FamilySpec(M6_ALT)
    strict4 = no_crossing_certificate(A, B, 4)
    assert not strict4.granted
    assert strict4.resultant.primitive() == Poly([82, -41, 5])
    assert strict4.sign_at_m_min == -1
    assert abs(float(strict4.diff_at_m_min) + 0.003) < 1e-3
    (root,) = strict4.offending
    assert abs(float(root.mid) - (41 + 41**0.5) / 10) < 1e-5
    assert no_crossing_certificate(A, B, 5).granted
    refined = no_crossing_certificate(A, B, 4, refine=True)
    assert refined.granted


def test_certificate_identical_families():
    with pytest.raises(SharedPoleBranchError):
        no_crossing_certificate(FamilySpec(saturated_star(6)), FamilySpec(saturated_star(6)), 4)


@pytest.mark.parametrize("m_min", [1, 2, 10])
def test_certificate_linear_denominators(m_min):
    a = BivarPoly([Poly([1]), Poly([0, -1])])  # 1 - m t
    b = BivarPoly([Poly([1]), Poly([-1, -1])])  # 1 - (m+1) t
    cert = no_crossing_certificate(a, b, m_min)
    assert cert.granted and cert.sign_at_m_min == 1


def test_reversal_classes():
    star = saturated_star(6)
    assert reversal_classes([star, star.transpose()]) == reversal_classes([star])


def test_corner_hole_is_the_5_vertex_maximizer():
    # 25 - 4 ones: the corner-hole matrix beats G(4, 5) and attains the exhaustive maximum
    tol = Fraction(1, 10**9)
    hole = spectral_radius(corner_hole(4), tol)
    assert compare_spectral(hole, spectral_radius(make_ml(4, 5), tol)) == 1
    rep = exhaustive_rho_max(5, 21, tol)
    assert rep.value["rho_lo"] <= hole.rho_hi and hole.rho_lo <= rep.value["rho_hi"]
    assert canonical_form(corner_hole(4)) in rep.argmax
