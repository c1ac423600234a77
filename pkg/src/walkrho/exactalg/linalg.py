"""Fraction-free determinant (Bareiss) over exact rings with exact division."""

from __future__ import annotations

from typing import Callable, Sequence


def bareiss_det(matrix: Sequence[Sequence], zero, one, exact_div: Callable):
    """Determinant of a square matrix via Bareiss elimination.

    ``exact_div(a, b)`` must return the exact quotient a/b; Bareiss
    guarantees every division performed here is exact. Zero pivots are
    handled by row exchange.
    """
    n = len(matrix)
    if n == 0:
        return one
    a = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            for r in range(k + 1, n):
                if a[r][k] != zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                row_i[j] = exact_div(num, prev)
            row_i[k] = zero
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
