"""Generalized Mycielskian construction M_t(G) with a stable vertex naming.

M_t(G) has vertex set V(G) x {0..t-1} plus one apex: level 0 keeps the base
edges, (x, i) is joined to (y, i+1) for every base edge xy, and the apex is
joined to all of level t-1. Index layout: (x, i) sits at i*n + x and the apex
is the last index t*n, so each level is a contiguous block and per-level
label sums are plain slices.

t = 1 is accepted by the library (the apex is still attached, giving the base
plus a dominating vertex); the command line restricts itself to t >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from magus.graphs import Graph, bits

DEFAULT_MAX_VERTICES = 1 << 20


@dataclass(frozen=True)
class MycGraph:
    """A built Mycielskian together with its naming scheme."""

    graph: Graph
    base_n: int
    t: int

    @property
    def apex(self) -> int:
        return self.base_n * self.t

    def index(self, x: int, i: int) -> int:
        if not 0 <= x < self.base_n:
            raise ValueError(f"base vertex {x} out of range")
        if not 0 <= i < self.t:
            raise ValueError(f"level {i} out of range")
        return i * self.base_n + x

    def level_of(self, idx: int) -> tuple[int, int] | None:
        """Return (base vertex, level) for a level vertex, None for the apex."""
        if idx == self.apex:
            return None
        if not 0 <= idx < self.apex:
            raise ValueError(f"index {idx} out of range")
        return (idx % self.base_n, idx // self.base_n)

    def vertex_name(self, idx: int) -> str:
        at = self.level_of(idx)
        if at is None:
            return "u"
        return f"x{at[0]}@{at[1]}"

    def naming(self) -> dict[str, str]:
        """JSON-ready map from vertex index to its name."""
        return {str(i): self.vertex_name(i) for i in range(self.graph.n)}


def build(base: Graph, t: int) -> MycGraph:
    """Construct M_t(base) for t >= 1."""
    if t < 1:
        raise ValueError("level count t must be >= 1")
    if base.n < 1:
        raise ValueError("base graph must have at least one vertex")
    n = base.n
    adj = [0] * (t * n + 1)
    for x in range(n):
        nbrs = base.adj[x]
        # Level 0 keeps the base edges.
        adj[x] |= nbrs
        # (x, i) -- (y, i+1) for every base edge xy, both directions.
        for i in range(t - 1):
            adj[i * n + x] |= nbrs << ((i + 1) * n)
            adj[(i + 1) * n + x] |= nbrs << (i * n)
    apex = t * n
    top = ((1 << n) - 1) << ((t - 1) * n)
    adj[apex] = top
    for x in range(n):
        adj[(t - 1) * n + x] |= 1 << apex
    g = Graph.__new__(Graph)
    g.n = t * n + 1
    g.adj = tuple(adj)
    return MycGraph(g, n, t)


def iterate(base: Graph, t: int, s: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> MycGraph:
    """s-fold application M_t^s(base); naming follows the outermost build."""
    if s < 1:
        raise ValueError("iteration count s must be >= 1")
    if t < 1:
        raise ValueError("level count t must be >= 1")
    size = base.n
    for _ in range(s):
        size = t * size + 1
        if size > max_vertices:
            raise ValueError(f"iterated vertex count exceeds maximum {max_vertices}")
    cur = base
    myc = None
    for _ in range(s):
        myc = build(cur, t)
        cur = myc.graph
    return myc


def degrees_expected(base: Graph, t: int) -> list[int]:
    """Predicted degree of every M_t(base) vertex, in index order.

    Levels 0..t-2 double the base degree, level t-1 has base degree plus one
    (the apex edge), and the apex sees all of level t-1. Needs t >= 2: for
    t = 1 the single level is both "level 0" and "level t-1".
    """
    if t < 2:
        raise ValueError("degree table needs t >= 2")
    n = base.n
    out = []
    for i in range(t):
        for x in range(n):
            d = base.degree(x)
            out.append(2 * d if i < t - 1 else d + 1)
    out.append(n)
    return out
