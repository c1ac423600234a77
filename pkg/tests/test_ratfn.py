from fractions import Fraction

import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from walkrho.exactalg import BivarPoly, PoleAtOriginError, Poly, RatFn, ratfn_reduce, series_coeffs, series_mul

coef = st.integers(-6, 6)


@st.composite
def reduced_ratfns(draw):
    num = Poly(draw(st.lists(coef, min_size=1, max_size=4)))
    den = Poly([1] + draw(st.lists(coef, min_size=0, max_size=3)))
    assume(not num.is_zero())
    return ratfn_reduce(RatFn(num, den))


def pade(coeffs, p, q):
    """Independent oracle: solve for b_1..b_q with b_0 = 1, then a = (b * series) mod t^(p+1)."""
    c = lambda k: sympy.Rational(coeffs[k]) if 0 <= k < len(coeffs) else 0
    b = sympy.symbols(f"b1:{q + 1}") if q else ()
    eqs = [c(k) + sum(b[j - 1] * c(k - j) for j in range(1, q + 1)) for k in range(p + 1, p + q + 1)]
    sol = sympy.solve(eqs, b, dict=True)[0] if q else {}
    bs = [1] + [sol.get(bj, 0) for bj in b]
    a = [sum(bs[j] * c(k - j) for j in range(0, min(k, q) + 1)) for k in range(p + 1)]
    return a, bs


def test_reduce_examples():
    f = ratfn_reduce(RatFn(Poly([-1, 0, 1]), Poly([-1, 1])))
    assert f.num == Poly([1, 1]) and f.den == Poly([1])
    g = ratfn_reduce(RatFn(Poly([1, 1]), Poly([1, -1])))
    assert (g.num, g.den) == (Poly([1, 1]), Poly([1, -1]))
    h = ratfn_reduce(RatFn(Poly([2, 2]), Poly([2, -2])))
    assert (h.num, h.den) == (Poly([1, 1]), Poly([1, -1]))


def test_pole_at_origin_rejected():
    try:
        ratfn_reduce(RatFn(Poly([1]), Poly([0, 1])))
    except PoleAtOriginError:
        return
    raise AssertionError("expected PoleAtOriginError")


def test_geometric_series():
    assert series_coeffs(RatFn(Poly([1]), Poly([1, -1])), 4) == [1, 1, 1, 1, 1]


def test_symbolic_series_s2():
    # (1+t)/(1 - m t - (m-1) t^2): third coefficient (m+1)^2 - 2
    f = RatFn(BivarPoly([Poly([1]), Poly([1])]), BivarPoly([Poly([1]), Poly([0, -1]), Poly([1, -1])]))
    c = series_coeffs(f, 2)
    assert c[0] == Poly([1]) and c[1] == Poly([1, 1])
    assert c[2] == Poly([1, 1]) ** 2 - Poly([2])


def test_symbolic_series_cubic_head():
    # 1/(1 - (m+1)t + 6t^2 - 14t^3), checked against long division by sympy
    t, m = sympy.symbols("t m")
    f = RatFn(BivarPoly([Poly([1])]), BivarPoly([Poly([1]), Poly([-1, -1]), Poly([6]), Poly([-14])]))
    c = series_coeffs(f, 5)
    ref = sympy.series(1 / (1 - (m + 1) * t + 6 * t**2 - 14 * t**3), t, 0, 6).removeO()
    for k, ck in enumerate(c):
        got = sum(sympy.Rational(v) * m**j for j, v in enumerate(ck.coeffs))
        assert sympy.expand(got - ref.coeff(t, k)) == 0


@settings(max_examples=60, deadline=None)
@given(reduced_ratfns())
def test_pade_reconstruction(f):
    p, q = max(f.num.degree, 0), max(f.den.degree, 0)
    coeffs = series_coeffs(f, p + q)
    a, b = pade(coeffs, p, q)
    rebuilt = RatFn(Poly([Fraction(int(x.p), int(x.q)) for x in map(sympy.Rational, a)]),
                    Poly([Fraction(int(x.p), int(x.q)) for x in map(sympy.Rational, b)]))
    assert rebuilt.equals(f)


@given(reduced_ratfns(), reduced_ratfns())
def test_series_linearity(f, g):
    s = RatFn(f.num * g.den + g.num * f.den, f.den * g.den)
    n = 8
    lhs = series_coeffs(s, n)
    rhs = [x + y for x, y in zip(series_coeffs(f, n), series_coeffs(g, n))]
    assert lhs == rhs


@given(reduced_ratfns(), reduced_ratfns())
def test_series_product(f, g):
    n = 7
    prod = series_coeffs(RatFn(f.num * g.num, f.den * g.den), n)
    assert prod == series_mul(series_coeffs(f, n), series_coeffs(g, n), n)
