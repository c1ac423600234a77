"""Exact polynomial, rational-function, series and real-root primitives."""

from .bivar import BivarPoly, bivar_gcd, discriminant, resultant, sylvester_matrix
from .linalg import bareiss_det
from .poly import ONE, T, ZERO, Poly, poly_from_roots, poly_gcd, sqf_part
from .ratfn import PoleAtOriginError, RatFn, ratfn_reduce, series_coeffs, series_mul
from .roots import (
    NoPositiveRootError,
    RootBracket,
    compare_roots,
    count_roots,
    isolate_real_roots,
    isolate_smallest_positive_root,
    sturm_sequence,
)

IntPoly = Poly

__all__ = [
    "BivarPoly",
    "IntPoly",
    "NoPositiveRootError",
    "ONE",
    "PoleAtOriginError",
    "Poly",
    "RatFn",
    "RootBracket",
    "T",
    "ZERO",
    "bareiss_det",
    "bivar_gcd",
    "discriminant",
    "compare_roots",
    "count_roots",
    "isolate_real_roots",
    "isolate_smallest_positive_root",
    "poly_from_roots",
    "poly_gcd",
    "ratfn_reduce",
    "resultant",
    "series_coeffs",
    "series_mul",
    "sqf_part",
    "sturm_sequence",
    "sylvester_matrix",
]
