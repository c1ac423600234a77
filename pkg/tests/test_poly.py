from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from walkrho.exactalg import Poly, poly_from_roots, poly_gcd, sqf_part

x = sympy.Symbol("x")
int_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=7)


def to_sympy(p: Poly):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in p.coeffs])) or [0], x)


def test_degree_and_zero():
    assert Poly().degree == -1
    assert Poly([0, 0]).is_zero()
    assert Poly([1, 2, 0]).degree == 1
    assert Poly([3, 0, 5]).lc == 5


def test_format():
    assert Poly([1, -2, 0, 1]).format("t") == "t^3 - 2*t + 1"


def test_arithmetic_small():
    a = Poly([1, 1])
    b = Poly([-1, 1])
    assert a * b == Poly([-1, 0, 1])
    assert a + b == Poly([0, 2])
    assert a - a == Poly()
    assert a**3 == Poly([1, 3, 3, 1])


def test_neg_var_and_compose():
    p = Poly([1, 2, 3])
    assert p.neg_var() == Poly([1, -2, 3])
    assert p.compose(Poly([0, 2])) == Poly([1, 4, 12])


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))


@given(int_lists, int_lists)
def test_mul_matches_sympy(a, b):
    pa, pb = Poly(a), Poly(b)
    assert to_sympy(pa * pb) == to_sympy(pa) * to_sympy(pb)


@given(int_lists, int_lists.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    pa, pb = Poly(a), Poly(b)
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


@settings(max_examples=60)
@given(int_lists.filter(lambda c: any(c)), int_lists.filter(lambda c: any(c)))
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(Poly(a), Poly(b))
    ref = sympy.gcd(to_sympy(Poly(a)), to_sympy(Poly(b)))
    assert g.degree == ref.degree()
    # both divide each other up to a unit
    assert (to_sympy(g).rem(ref)).is_zero and (ref.rem(to_sympy(g))).is_zero


def test_sqf_part_removes_multiplicity():
    p = poly_from_roots([1, 1, 2, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)])
    q = sqf_part(p)
    assert q.degree == 3
    assert all(q(r) == 0 for r in (1, 2, Fraction(1, 3)))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.fractions(-3, 3, max_denominator=7))
def test_evaluation_matches_horner_oracle(c, t):
    p = Poly(c)
    assert p(t) == sum(Fraction(ci) * t**i for i, ci in enumerate(c))
