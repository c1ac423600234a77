"""Compiled enumeration kernel for the two-edge-walk maximization.

Walks with two edges number sum_v indeg(v) * outdeg(v), so the value is
updated incrementally while a depth-first walk visits every s-subset of
the vb*vb adjacency cells (cell = i*vb + j encodes the edge i -> j).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def walk2_search(vb, s, collect, out):
    """Enumerate all s-subsets; return (best value, #attaining it, #examined).

    When ``collect`` equals the best value, bitmasks of the maximizers are
    written to ``out`` (up to its length).
    """
    ncell = vb * vb
    indeg = np.zeros(vb, np.int64)
    outdeg = np.zeros(vb, np.int64)
    cells = np.zeros(s, np.int64)
    placed = np.zeros(s, np.bool_)
    vals = np.zeros(s + 1, np.int64)
    best = -1
    nbest = 0
    examined = 0
    d = 0
    cells[0] = -1
    while d >= 0:
        if placed[d]:
            c = cells[d]
            outdeg[c // vb] -= 1
            indeg[c % vb] -= 1
            placed[d] = False
        c = cells[d] + 1
        if c > ncell - (s - d):
            d -= 1
            continue
        cells[d] = c
        i = c // vb
        j = c % vb
        delta = indeg[i]
        outdeg[i] += 1
        delta += outdeg[j]
        indeg[j] += 1
        placed[d] = True
        vals[d + 1] = vals[d] + delta
        if d + 1 == s:
            examined += 1
            v = vals[s]
            if v > best:
                best = v
                nbest = 0
            if v == best:
                if v == collect and nbest < out.shape[0]:
                    mask = np.int64(0)
                    for k in range(s):
                        mask |= np.int64(1) << cells[k]
                    out[nbest] = mask
                nbest += 1
        else:
            d += 1
            cells[d] = c
            placed[d] = False
    return best, nbest, examined


def walk2_maximizers(vb: int, s: int) -> tuple[int, list[int], int]:
    """Best two-edge-walk count over all s-edge digraphs on vb labeled vertices."""
    if vb * vb > 62:
        raise ValueError("bitmask kernel supports at most 62 cells")
    empty = np.zeros(0, np.int64)
    best, nbest, examined = walk2_search(vb, s, -1, empty)
    out = np.zeros(nbest, np.int64)
    best2, nbest2, _ = walk2_search(vb, s, best, out)
    assert best2 == best and nbest2 == nbest
    return int(best), [int(x) for x in out], int(examined)
