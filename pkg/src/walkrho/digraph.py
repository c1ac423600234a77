"""Digraphs as bit-row adjacency, plus the near-complete extremal families.

Vertices are numbered 1..n. Bit ``j-1`` of ``rows[i-1]`` is set iff the
edge i -> j exists. Loops are allowed; multi-edges cannot be expressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Digraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal vertex count")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise ValueError("row bits beyond vertex count")

    # construction -----------------------------------------------------

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Digraph":
        n = len(matrix)
        rows = []
        for row in matrix:
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            bits = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                if x:
                    bits |= 1 << j
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) outside 1..{n}")
            rows[i - 1] |= 1 << (j - 1)
        return cls(n, tuple(rows))

    # queries ----------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    @property
    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j in range(self.n) if r >> j & 1]

    def matrix(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def out_neighbors(self, i: int) -> list[int]:
        r = self.rows[i - 1]
        return [j + 1 for j in range(self.n) if r >> j & 1]

    def transpose(self) -> "Digraph":
        rows = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in range(self.n):
                if r >> j & 1:
                    rows[j] |= 1 << i
        return Digraph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Vertex i becomes perm[i-1] (perm is a 1-based permutation)."""
        rows = [0] * self.n
        for i, j in self.edges():
            rows[perm[i - 1] - 1] |= 1 << (perm[j - 1] - 1)
        return Digraph(self.n, tuple(rows))

    def pad(self, n: int) -> "Digraph":
        """Append isolated vertices up to n."""
        if n < self.n:
            raise ValueError("cannot pad to fewer vertices")
        return Digraph(n, self.rows + (0,) * (n - self.n))

    def active_vertices(self) -> list[int]:
        cols = 0
        for r in self.rows:
            cols |= r
        return [i + 1 for i in range(self.n) if self.rows[i] or cols >> i & 1]

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        idx = {v: k for k, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for i, j in self.edges():
            if i in idx and j in idx:
                rows[idx[i]] |= 1 << idx[j]
        return Digraph(len(vertices), tuple(rows))

    # dgm v1 text --------------------------------------------------------

    def to_dgm(self) -> str:
        lines = [str(self.n)]
        lines += ["".join("1" if r >> j & 1 else "0" for j in range(self.n)) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dgm(cls, text: str) -> "Digraph":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty dgm text")
        try:
            n = int(lines[0])
        except ValueError as exc:
            raise ValueError(f"bad vertex count line {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != n:
            raise ValueError(f"expected {n} rows, got {len(body)}")
        rows = []
        for ln in body:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise ValueError(f"bad row {ln!r}")
            rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
        return cls(n, tuple(rows))

    def __str__(self) -> str:
        return self.to_dgm().rstrip("\n")


def complete_digraph(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph(n, (full,) * n)


def empty_digraph(n: int) -> Digraph:
    return Digraph(n, (0,) * n)


def make_gmpq(m: int, p: int, q: int) -> Digraph:
    """G(m,p,q): complete on 1..m, plus i -> m+1 for i <= p and m+1 -> j for j <= q."""
    if m < 1:
        raise ValueError("m must be positive")
    if not (0 <= p <= m and 0 <= q <= m):
        raise ValueError(f"need 0 <= p, q <= m, got p={p}, q={q}, m={m}")
    core = (1 << m) - 1
    last = 1 << m
    rows = tuple(core | (last if i < p else 0) for i in range(m)) + ((1 << q) - 1,)
    return Digraph(m + 1, rows)


def make_ml(m: int, ell: int) -> Digraph:
    if not (0 < ell < 2 * m + 1):
        raise ValueError(f"need 0 < ell < 2m+1, got ell={ell}, m={m}")
    p = -(-ell // 2)
    return make_gmpq(m, p, ell - p)


def saturated_star(s: int) -> Digraph:
    """Hub 1 with a loop and k-1 bidirected spokes (s = 2k-1); even s adds 1 -> k+1."""
    if s < 1:
        raise ValueError("s must be positive")
    k = (s + 1) // 2
    n = k + (s % 2 == 0)
    edges = [(1, 1)] + [(1, i) for i in range(2, k + 1)] + [(i, 1) for i in range(2, k + 1)]
    if s % 2 == 0:
        edges.append((1, k + 1))
    return Digraph.from_edges(n, edges)


def embed_complement(R: Digraph, m: int) -> Digraph:
    """Digraph on m+1 vertices with i -> j iff (m+2-i) -> (m+2-j) is not an edge of R."""
    if R.n > m + 1:
        raise ValueError(f"seed has {R.n} vertices, more than m+1 = {m + 1}")
    n = m + 1
    R = R.pad(n)
    rows = []
    for i in range(1, n + 1):
        src = R.rows[n + 1 - i - 1]
        bits = 0
        for j in range(1, n + 1):
            if not src >> (n + 1 - j - 1) & 1:
                bits |= 1 << (j - 1)
        rows.append(bits)
    return Digraph(n, tuple(rows))


def complement(A: Digraph) -> Digraph:
    full = (1 << A.n) - 1
    return Digraph(A.n, tuple(full ^ r for r in A.rows))


def reverse_labels(A: Digraph) -> Digraph:
    """Relabel vertex i as n+1-i."""
    return A.relabel([A.n + 1 - i for i in range(1, A.n + 1)])


def corner_hole(m: int) -> Digraph:
    """All-ones (m+1)x(m+1) matrix with a 2x2 zero block in the bottom-right corner."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = m + 1
    full = (1 << n) - 1
    head = (1 << (m - 1)) - 1
    return Digraph(n, (full,) * (m - 1) + (head, head))


def is_partition_shaped(A: Digraph) -> bool:
    """Rows and columns of the adjacency matrix weakly decreasing."""
    # a 0-1 row is weakly decreasing iff its ones form a prefix
    for r in A.rows:
        if r & (r + 1):
            return False
    return all(a & b == b for a, b in zip(A.rows, A.rows[1:]))


def is_strongly_connected(A: Digraph) -> bool:
    if A.n == 0:
        return True

    def reach(rows) -> int:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in range(A.n):
                if frontier >> i & 1:
                    nxt |= rows[i]
            frontier = nxt & ~seen
            seen |= nxt
        return seen

    full = (1 << A.n) - 1
    return reach(A.rows) == full and reach(A.transpose().rows) == full


def canonical_form(A: Digraph) -> Digraph:
    """Permutation-canonical form on the non-isolated vertices.

    Lexicographically smallest row-major bit string over all orderings of
    the active vertices; isolated vertices are dropped.
    """
    core = A.induced(A.active_vertices())
    n = core.n
    mat = core.matrix()
    best = None
    for perm in permutations(range(n)):
        key = tuple(mat[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or key < best[0]:
            best = (key, perm)
    if best is None:
        return core
    perm = best[1]
    return Digraph.from_matrix([[mat[perm[i]][perm[j]] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class FamilySpec:
    """A seed digraph R with s edges; the family is embed_complement(R, m) over m."""

    seed: Digraph
    s: int = -1

    def __post_init__(self):
        if self.s == -1:
            object.__setattr__(self, "s", self.seed.edge_count)
        elif self.s != self.seed.edge_count:
            raise ValueError(f"s={self.s} but seed has {self.seed.edge_count} edges")

    def at(self, m: int) -> Digraph:
        return embed_complement(self.seed, m)
