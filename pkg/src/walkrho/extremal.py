"""Exhaustive searches and certificates over near-complete digraphs.

Partition-shaped members of DI(m, s) are indexed by the partition of s
formed by their zero cells: the zeros of embed_complement(Y, m), where
Y is the Young-diagram matrix of the partition, sit in the bottom-right
corner.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Optional, Sequence, Union

from .digraph import (
    Digraph,
    FamilySpec,
    canonical_form,
    embed_complement,
    is_partition_shaped,
    is_strongly_connected,
    saturated_star,
)
from .exactalg import (
    BivarPoly,
    Poly,
    RootBracket,
    compare_roots,
    count_roots,
    discriminant,
    isolate_real_roots,
    isolate_smallest_positive_root,
    resultant,
)
from .spectral import SpectralResult, compare_spectral, dominant_pole
from .walkgen import det_i_minus_tm, family_series_symbolic, walk_counts

TWO_WALK_LIMIT = 10**8
EXHAUSTIVE_LIMIT = 10**7


class SearchTooLargeError(ValueError):
    pass


class SharedPoleBranchError(ValueError):
    pass


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _jsonable(x):
    if isinstance(x, Fraction):
        return _frac_text(x)
    if isinstance(x, Digraph):
        return x.to_dgm().rstrip("\n").split("\n")
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Poly):
        return str(x)
    return x


@dataclass
class SearchReport:
    universe: dict
    examined: int
    value: Any
    argmax: list[Digraph]
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"universe: {json.dumps(_jsonable(self.universe), sort_keys=True)}"]
        lines.append(f"examined: {self.examined}")
        lines.append(f"value: {_jsonable(self.value)}")
        lines.append(f"argmax_count: {len(self.argmax)}")
        for k, g in enumerate(self.argmax):
            lines.append(f"argmax[{k}]: {' '.join(g.to_dgm().split())}")
        lines.append(f"elapsed_s: {self.elapsed:.3f}")
        for note in self.notes:
            lines.append(f"note: {note}")
        for key in sorted(self.details):
            lines.append(f"{key}: {json.dumps(_jsonable(self.details[key]), sort_keys=True)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "universe": _jsonable(self.universe),
            "examined": self.examined,
            "value": _jsonable(self.value),
            "argmax": [_jsonable(g) for g in self.argmax],
            "elapsed_s": round(self.elapsed, 3),
            "notes": list(self.notes),
            "details": _jsonable(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# partitions --------------------------------------------------------------

def partitions(s: int, max_part: int, max_len: int):
    """Partitions of s (weakly decreasing tuples) with bounded parts and length."""

    def rec(rest, cap, length):
        if rest == 0:
            yield ()
            return
        if length == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p, length - 1):
                yield (p,) + tail

    yield from rec(s, max_part, max_len)


def young_matrix(lam: Sequence[int]) -> Digraph:
    """Digraph whose adjacency is the Young diagram of lam (top-left anchored)."""
    n = max(len(lam), lam[0] if lam else 0, 1)
    rows = tuple((1 << p) - 1 for p in lam) + (0,) * (n - len(lam))
    return Digraph(n, rows)


def pdi_members(m: int, s: int) -> list[tuple[tuple[int, ...], Digraph]]:
    if s < 1:
        raise ValueError("s must be positive")
    if not (m + 1) ** 2 - s > m * m + 1:
        raise ValueError(f"need (m+1)^2 - s > m^2 + 1, i.e. s < 2m (m={m}, s={s})")
    out = []
    for lam in partitions(s, m + 1, m + 1):
        out.append((lam, embed_complement(young_matrix(lam), m)))
    return out


def enumerate_pdi(m: int, s: int) -> list[Digraph]:
    """Partition-shaped digraphs on m+1 vertices with (m+1)^2 - s edges.

    Members with an all-zero row or column (possible once s >= m+1) are
    not strongly connected; ``pdi_connectivity`` reports them.
    """
    return [g for _, g in pdi_members(m, s)]


def pdi_connectivity(m: int, s: int) -> dict[tuple[int, ...], bool]:
    return {lam: is_strongly_connected(g) for lam, g in pdi_members(m, s)}


# two-edge-walk maximization ---------------------------------------------

def _mask_to_digraph(mask: int, vb: int) -> Digraph:
    rows = [0] * vb
    for cell in range(vb * vb):
        if mask >> cell & 1:
            rows[cell // vb] |= 1 << (cell % vb)
    return Digraph(vb, tuple(rows))


def _canonical_set(graphs) -> list[Digraph]:
    compressed = {g.induced(g.active_vertices()) for g in graphs}
    canon = {canonical_form(g) for g in compressed}
    return sorted(canon, key=lambda g: (g.n, g.to_dgm()))


def reversal_classes(graphs: Sequence[Digraph]) -> list[Digraph]:
    """Classes under vertex permutation and edge reversal; reversal preserves all walk counts."""
    reps = set()
    for g in graphs:
        a, b = canonical_form(g), canonical_form(g.transpose())
        reps.add(min(a, b, key=lambda h: (h.n, h.to_dgm())))
    return sorted(reps, key=lambda g: (g.n, g.to_dgm()))


def backelin_argmax(s: int, vbound: Optional[int] = None) -> SearchReport:
    """All s-edge digraphs on vbound labeled vertices maximizing two-edge walks."""
    from ._kernels import walk2_maximizers

    if s < 1:
        raise ValueError("s must be positive")
    vb = min(s + 1, 7) if vbound is None else vbound
    if vb < 2:
        raise ValueError("vbound must be at least 2")
    size = math.comb(vb * vb, s)
    if size > TWO_WALK_LIMIT:
        raise SearchTooLargeError(f"universe C({vb * vb},{s}) = {size} exceeds {TWO_WALK_LIMIT}")
    t0 = time.perf_counter()
    best, masks, examined = walk2_maximizers(vb, s)
    argmax = _canonical_set(_mask_to_digraph(mk, vb) for mk in masks)
    return SearchReport(
        universe={"s": s, "vbound": vb, "size": size},
        examined=examined,
        value=best,
        argmax=argmax,
        elapsed=time.perf_counter() - t0,
        notes=[f"vertex bound {vb} is a heuristic, not a proof of exhaustiveness over all vertex counts"],
        details={"labeled_maximizers": len(masks), "argmax_up_to_reversal": reversal_classes(argmax)},
    )


# exhaustive spectral search -------------------------------------------------

def _all_digraphs(n: int, k: int):
    cells = [(i, j) for i in range(n) for j in range(n)]
    for combo in combinations(range(n * n), k):
        rows = [0] * n
        for c in combo:
            i, j = cells[c]
            rows[i] |= 1 << j
        yield Digraph(n, tuple(rows))


def _argmax_by_rho(items: list[tuple[Poly, SpectralResult]]) -> list[int]:
    """Indices of the items with maximal rho (certified ties)."""
    best: list[int] = []
    for idx, (_, res) in enumerate(items):
        if not best:
            best = [idx]
            continue
        cmp = compare_spectral(res, items[best[0]][1])
        if cmp > 0:
            best = [idx]
        elif cmp == 0:
            best.append(idx)
    return best


def exhaustive_rho_max(n: int, k: int, tol) -> SearchReport:
    """Certified rho for every n-vertex digraph with k edges; report the maximizers.

    Also compares against the partition-shaped subset, and records
    whether every rho obeys rho <= sqrt(k) + tol.
    """
    tol = Fraction(tol)
    size = math.comb(n * n, k)
    if size > EXHAUSTIVE_LIMIT:
        raise SearchTooLargeError(f"universe C({n * n},{k}) = {size} exceeds {EXHAUSTIVE_LIMIT}")
    t0 = time.perf_counter()
    by_q: dict[Poly, list[Digraph]] = {}
    shaped_qs: set[Poly] = set()
    examined = 0
    for g in _all_digraphs(n, k):
        examined += 1
        q = det_i_minus_tm(g)
        by_q.setdefault(q, []).append(g)
        if is_partition_shaped(g):
            shaped_qs.add(q)
    items = [(q, dominant_pole(q, tol)) for q in by_q]
    top = _argmax_by_rho(items)
    shaped_items = [it for it in items if it[0] in shaped_qs]
    shaped_top = _argmax_by_rho(shaped_items) if shaped_items else []
    best = items[top[0]][1]
    shaped_attains_max = bool(shaped_top) and compare_spectral(shaped_items[shaped_top[0]][1], best) == 0
    bound_ok = all(_below_sqrt(res, k, tol) for _, res in items)
    maximizers = [g for i in top for g in by_q[items[i][0]]]
    return SearchReport(
        universe={"n": n, "k": k, "size": size},
        examined=examined,
        value={"rho_lo": best.rho_lo, "rho_hi": best.rho_hi},
        argmax=_canonical_set(maximizers),
        elapsed=time.perf_counter() - t0,
        details={
            "distinct_char_polys": len(items),
            "max_equals_partition_shaped_max": shaped_attains_max,
            "partition_shaped_count": sum(len(by_q[q]) for q in shaped_qs),
            "partition_shaped_argmax": [g for i in shaped_top for g in by_q[shaped_items[i][0]] if is_partition_shaped(g)],
            "rho_le_sqrt_k": bound_ok,
        },
    )


def _below_sqrt(res: SpectralResult, k: int, tol: Fraction) -> bool:
    """Certified rho_hi <= sqrt(k) + tol."""
    x = res.rho_hi - tol
    return x <= 0 or x * x <= k


# coefficient dominance --------------------------------------------------------

def dominance_check(m: int, s: int, order: int) -> SearchReport:
    """chi_i of the star complement against every other PDI(m, s) member, i <= order.

    Members with the same walk series as the star complement (its
    transpose, for even s) are reported as ties rather than competitors.
    """
    if s == 4:
        raise ValueError("dominance_check excludes s = 4")
    t0 = time.perf_counter()
    star = saturated_star(s)
    A = embed_complement(star, m)
    chi_a = [1] + walk_counts(A, order - 1)
    c = walk_counts(star, 2)[2]
    violations = []
    ties = []
    per = {}
    examined = 0
    for lam, B in pdi_members(m, s):
        if B == A:
            continue
        examined += 1
        chi_b = [1] + walk_counts(B, order - 1)
        if chi_b == chi_a:
            ties.append(lam)
            continue
        diffs = [x - y for x, y in zip(chi_a, chi_b)]
        d = walk_counts(young_matrix(lam), 2)[2]
        per[lam] = {"d": d, "c_minus_d": c - d, "t3_diff": diffs[3] if order >= 3 else None, "diffs": diffs}
        for i, df in enumerate(diffs):
            if df < 0 or (i >= 3 and df == 0):
                violations.append({"partition": lam, "i": i, "diff": df})
    value = min((v["t3_diff"] for v in per.values()), default=None)
    return SearchReport(
        universe={"m": m, "s": s, "order": order},
        examined=examined,
        value=value,
        argmax=[A],
        elapsed=time.perf_counter() - t0,
        notes=["value is the minimal t^3 coefficient gap c - d over competitors"],
        details={
            "star_c": c,
            "violations": violations,
            "ties": [list(t) for t in ties],
            "competitors": {",".join(map(str, k)): v for k, v in per.items()},
        },
    )


def difference_polynomial(s: int, i: int, ms: Sequence[int]) -> dict[tuple[int, ...], dict]:
    """Fit chi_i(star complement) - chi_i(B_lam) as an exact polynomial in m.

    Uses forward differences over consecutive integers ms; returns degree,
    leading coefficient and c - d per competitor partition.
    """
    ms = sorted(ms)
    if any(b - a != 1 for a, b in zip(ms, ms[1:])):
        raise ValueError("sample m must be consecutive integers")
    star = saturated_star(s)
    c = walk_counts(star, 2)[2]
    series: dict[tuple[int, ...], list[int]] = {}
    for m in ms:
        A = embed_complement(star, m)
        xa = walk_counts(A, i - 1)[i - 1]
        for lam, B in pdi_members(m, s):
            if B == A:
                continue
            series.setdefault(lam, []).append(xa - walk_counts(B, i - 1)[i - 1])
    out = {}
    for lam, vals in series.items():
        diffs = list(vals)
        table = [diffs]
        while len(diffs) > 1 and any(diffs):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
            table.append(diffs)
        if any(diffs):
            deg = None
        else:
            deg = len(table) - 2
        lead = Fraction(table[deg][0], math.factorial(deg)) if deg is not None and deg >= 0 else Fraction(0)
        d = walk_counts(young_matrix(lam), 2)[2]
        out[lam] = {
            "degree": deg,
            "leading": lead,
            "c_minus_d": c - d,
            "exact_fit": deg is not None and deg < len(vals) - 1,
        }
    return out


# no-crossing certificate ---------------------------------------------------

@dataclass
class CrossingCertificate:
    granted: bool
    resultant: Poly
    m_min: int
    sign_at_m_min: int
    diff_at_m_min: Fraction  # midpoint estimate of r_A(m_min) - r_B(m_min)
    offending: list[RootBracket] = field(default_factory=list)
    mode: str = "strict"
    reason: str = ""
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "granted": self.granted,
            "mode": self.mode,
            "resultant": str(self.resultant.format("m")),
            "m_min": self.m_min,
            "sign_at_m_min": self.sign_at_m_min,
            "diff_at_m_min": float(self.diff_at_m_min),
            "offending": [[_frac_text(b.lo), _frac_text(b.hi)] for b in self.offending],
            "reason": self.reason,
            "checks": _jsonable(self.checks),
        }


FamilyLike = Union[FamilySpec, Digraph, BivarPoly]


def family_denominator(f: FamilyLike) -> BivarPoly:
    if isinstance(f, BivarPoly):
        return f
    seed = f.seed if isinstance(f, FamilySpec) else f
    return family_series_symbolic(seed).den


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _no_real_root_from(p: Poly, a: int) -> bool:
    if p.degree <= 0:
        return not p.is_zero()
    return p(a) != 0 and count_roots(p, Fraction(a), None) == 0


def no_crossing_certificate(famA: FamilyLike, famB: FamilyLike, mMin: int, refine: bool = False) -> CrossingCertificate:
    """Certify that r_A(m) - r_B(m) keeps its sign for real m >= mMin.

    The dominant poles can only meet at a common root, hence only at a
    real root of R(m) = Res_t(den_A, den_B). Strict mode (the default)
    requires R to have no real root in [mMin, inf). With ``refine`` each
    such root is examined instead: if both dominant poles stay below a
    rational tau for m in its isolating interval while Res_m(den_A, den_B)
    has no root in (0, tau], the common root there is not the dominant
    pole. Both modes also require the discriminants and t-leading
    coefficients to be root-free on [mMin, inf) so that the dominant
    poles move continuously.
    """
    pa, pb = family_denominator(famA), family_denominator(famB)
    R = resultant(pa, pb)
    if R.is_zero():
        raise SharedPoleBranchError("families share a pole branch: resultant is identically zero")
    ra = dominant_pole(pa.at_m(mMin), Fraction(1, 10**6)).pole
    rb = dominant_pole(pb.at_m(mMin), Fraction(1, 10**6)).pole
    sign = compare_roots(ra, rb)
    diff = ra.refine(Fraction(1, 10**15)).mid - rb.refine(Fraction(1, 10**15)).mid
    checks = {
        "discriminant_A_root_free": _no_real_root_from(discriminant(pa), mMin),
        "discriminant_B_root_free": _no_real_root_from(discriminant(pb), mMin),
        "lc_A_root_free": _no_real_root_from(pa.lc, mMin),
        "lc_B_root_free": _no_real_root_from(pb.lc, mMin),
    }
    cert = CrossingCertificate(False, R, mMin, sign, diff, mode="refined" if refine else "strict", checks=checks)
    if R(mMin) == 0:
        cert.reason = f"resultant vanishes at m = {mMin}"
        return cert
    if sign == 0:
        cert.reason = f"dominant poles coincide at m = {mMin}"
        return cert
    if not all(checks.values()):
        cert.reason = "dominant poles not certified continuous on [mMin, inf)"
        return cert
    cert.offending = [br.refine(Fraction(1, 10**6)) for br in isolate_real_roots(R, Fraction(mMin), None)]
    if not cert.offending:
        cert.granted = True
        cert.reason = "resultant has no real root >= mMin"
        return cert
    if not refine:
        cert.reason = "resultant has a real root >= mMin"
        return cert
    S = resultant(pa.swap_vars(), pb.swap_vars())
    if S.is_zero():
        cert.reason = "m-resultant vanishes identically"
        return cert
    sigma = None
    try:
        sigma = isolate_smallest_positive_root(S, Fraction(1, 10**6))
    except ValueError:
        pass
    analysed = []
    for br in cert.offending:
        br = br.refine(Fraction(1, 10**6))
        poles = []
        for p in (pa, pb):
            for m_end in (br.lo, br.hi):
                poles.append(dominant_pole(p.at_m(m_end), Fraction(1, 10**6)).pole.hi)
        top = max(poles)
        tau = top * 2 if sigma is None else (top + sigma.lo) / 2
        ok = sigma is None or tau < sigma.lo
        for p in (pa, pb):
            q = p.at_t(tau)
            ok = ok and count_roots(q, br.lo, br.hi) == 0 and q.sign_at(br.lo) < 0
        ok = ok and count_roots(S, Fraction(0), tau) == 0
        analysed.append({"m_interval": [br.lo, br.hi], "tau": tau, "ok": ok})
        if not ok:
            cert.reason = f"cannot separate dominant poles near m in ({float(br.lo)}, {float(br.hi)})"
            cert.checks["offending_analysis"] = analysed
            return cert
    cert.checks["m_resultant"] = S
    cert.checks["offending_analysis"] = analysed
    cert.granted = True
    cert.reason = "every real root of the resultant >= mMin has its common t-root above both dominant poles"
    return cert
