"""Simple undirected graphs on dense integer vertices, stored as adjacency bitsets.

Each vertex keeps its open neighborhood as an int bitmask, so neighborhood
sums, symmetric differences and twin detection are popcount work. Graphs are
never mutated after construction and can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Build a graph from per-vertex neighbor bitmasks, validating them."""
        n = len(adj)
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        for v in range(n):
            m = adj[v]
            if m >> n:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {n}")
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def degree_sequence(self) -> list[int]:
        return sorted(a.bit_count() for a in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(a.bit_count() for a in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no maximum degree")
        return max(a.bit_count() for a in self.adj)

    def is_regular(self) -> Optional[int]:
        """Return the common degree r if the graph is r-regular, else None."""
        if self.n == 0:
            return None
        r = self.adj[0].bit_count()
        if all(a.bit_count() == r for a in self.adj):
            return r
        return None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def sym_diff_size(g: Graph, a: int, b: int) -> int:
    """Size of the symmetric difference of the open neighborhoods of a and b.

    Adjacent vertices contribute each other to the difference, matching the
    plain set reading: e.g. in K_n the difference of any two neighborhoods is
    exactly {a, b}.
    """
    return (g.adj[a] ^ g.adj[b]).bit_count()


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        next_frontier = 0
        for v in bits(frontier):
            next_frontier |= g.adj[v]
        frontier = next_frontier & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Standard families.
#
# Vertex orders are fixed so hand-written labelings map deterministically:
# paths and cycles are numbered along the walk, complete bipartite graphs put
# the first part before the second, wheels put the rim first and the hub last.
# ---------------------------------------------------------------------------

FAMILY_KINDS = ("path", "cycle", "complete", "complete_bipartite", "wheel", "empty")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    a: int
    b: int = 0

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both parts nonempty")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def wheel(rim: int) -> Graph:
    """Wheel W_n: a rim cycle on vertices 0..rim-1 plus a hub at index rim."""
    if rim < 3:
        raise ValueError("wheel needs rim >= 3")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges.extend((i, rim) for i in range(rim))
    return Graph(rim + 1, edges)


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a family spec."""
    if spec.kind == "path":
        return path(spec.a)
    if spec.kind == "cycle":
        return cycle(spec.a)
    if spec.kind == "complete":
        return complete(spec.a)
    if spec.kind == "complete_bipartite":
        return complete_bipartite(spec.a, spec.b)
    if spec.kind == "wheel":
        return wheel(spec.a)
    return empty_graph(spec.a)


def parse_family(text: str) -> FamilySpec:
    """Parse a compact family name such as ``c4``, ``p3``, ``k7``, ``w5``.

    Complete bipartite graphs are written ``k2,3`` or ``k2x3``; as a shortcut,
    ``k`` followed by exactly two nonzero digits (``k33``) also reads as
    bipartite, matching the usual small-case notation.
    """
    s = text.strip().lower()
    if len(s) < 2 or s[0] not in "pckwe":
        raise ValueError(f"cannot parse family {text!r}")
    head, rest = s[0], s[1:]
    kind = {"p": "path", "c": "cycle", "k": "complete", "w": "wheel", "e": "empty"}[head]
    if head == "k":
        for sep in (",", "x", "_"):
            if sep in rest:
                left, _, right = rest.partition(sep)
                if not (left.isdigit() and right.isdigit()):
                    raise ValueError(f"cannot parse family {text!r}")
                return FamilySpec("complete_bipartite", int(left), int(right))
        if len(rest) == 2 and rest.isdigit() and "0" not in rest:
            return FamilySpec("complete_bipartite", int(rest[0]), int(rest[1]))
    if not rest.isdigit():
        raise ValueError(f"cannot parse family {text!r}")
    return FamilySpec(kind, int(rest))
