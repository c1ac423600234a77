"""Walk generating functions, the complement identity and certified spectral radii.

Run with ``python demos/01_walk_series_and_rho.py``.
"""

from fractions import Fraction

from walkrho.digraph import complement, embed_complement, make_ml, saturated_star
from walkrho.exactalg import series_coeffs
from walkrho.spectral import power_iteration_estimate, spectral_radius, verify_perron
from walkrho.walkgen import family_series_symbolic, reciprocity_defect, walk_series_rational

# G(5,3): the complete digraph on 5 vertices plus a sixth vertex with 3 edges.
G = make_ml(5, 3)
print(G, end="\n\n")

# H(t) = sum of walk counts is rational with denominator det(I - tM).
H = walk_series_rational(G)
print("H_G(t) =", f"({H.num}) / ({H.den})")
print("first coefficients:", series_coeffs(H, 6))

# The series of a digraph and of its complement at -t multiply to 1.
print("complement defect through t^15 is zero:", not any(reciprocity_defect(G, 15)))
print("complement has", complement(G).edge_count, "edges")

# That identity turns a small seed R into a closed form for a whole family
# of near-complete digraphs, uniformly in m.
f = family_series_symbolic(saturated_star(6))
print("\nfamily series for the 6-edge star seed:")
print("  num:", f.num.format())
print("  den:", f.den.format())

# rho is 1 / (smallest positive root of det(I - tM)); the bracket is exact
# arithmetic throughout, and power iteration on M + I is an independent check.
A = embed_complement(saturated_star(6), 7)
res = spectral_radius(A, Fraction(1, 10**20))
print(f"\nrho(A) in [{float(res.rho_lo):.15f}, {float(res.rho_hi):.15f}]")
print("power iteration (200 steps):", float(power_iteration_estimate(A, 200)))
print("consistent:", verify_perron(A, res, 200))
