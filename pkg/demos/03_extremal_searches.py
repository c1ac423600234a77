"""Brute-force searches at desk scale.

Which s-edge digraphs have the most two-edge walks, whether the best
spectral radius is always attained by a partition-shaped matrix, and the
4-edge exception where the best matrix is not G(m, 2m-3).
"""

from fractions import Fraction

from walkrho.digraph import corner_hole, make_ml
from walkrho.extremal import backelin_argmax, dominance_check, exhaustive_rho_max
from walkrho.spectral import compare_spectral, spectral_radius

for s in (3, 4, 5, 6):
    rep = backelin_argmax(s)
    print(f"s={s}: max two-edge walks {rep.value}, maximizers:")
    for g in rep.details["argmax_up_to_reversal"]:
        print("   ", " ".join(str(g).split()[1:]))

rep = exhaustive_rho_max(4, 13, Fraction(1, 10**9))
print("\nall 4-vertex digraphs with 13 edges:", rep.examined)
print("max rho ~", float(rep.value["rho_lo"]), "| attained by a partition-shaped matrix:",
      rep.details["max_equals_partition_shaped_max"])

for m in (5, 6):
    hole = spectral_radius(corner_hole(m), Fraction(1, 10**12))
    gm = spectral_radius(make_ml(m, 2 * m - 3), Fraction(1, 10**12))
    print(f"m={m}: corner hole {float(hole):.10f} vs G(m,2m-3) {float(gm):.10f} -> sign {compare_spectral(hole, gm)}")

# For s = 7 the star complement beats every other partition-shaped
# competitor coefficient by coefficient from t^3 on.
dom = dominance_check(30, 7, 12)
print("\ndominance at m=30, s=7: violations =", dom.details["violations"])
