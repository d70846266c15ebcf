"""Brute-force catalogs of small graphs up to isomorphism.

Canonical forms minimize the edge bitmask over all vertex permutations, so
this is only meant for desk-scale n (the n=5 catalog takes milliseconds, n=6
is the practical ceiling, n=7 takes minutes).
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from magus.graphs import Graph, bits, is_connected


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = len(idx)
    return idx


def _mask_of(g: Graph, idx: dict[tuple[int, int], int]) -> int:
    mask = 0
    for e in g.edges():
        mask |= 1 << idx[e]
    return mask


def canonical_mask(g: Graph) -> int:
    """Minimum edge bitmask over all relabelings; equal iff isomorphic."""
    n = g.n
    idx = _pair_index(n)
    mask = _mask_of(g, idx)
    remaps = []
    for perm in permutations(range(n)):
        remaps.append([0] * len(idx))
        for (i, j), p in idx.items():
            a, b = perm[i], perm[j]
            remaps[-1][p] = idx[(a, b) if a < b else (b, a)]
    best = None
    for remap in remaps:
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= 1 << remap[low.bit_length() - 1]
            m ^= low
        if best is None or out < best:
            best = out
    return best if best is not None else 0


def _graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    return Graph(n, (pairs[p] for p in bits(mask)))


def all_graphs(n: int) -> list[Graph]:
    """All simple graphs on n vertices up to isomorphism, in canonical order."""
    if n < 1:
        raise ValueError("need n >= 1")
    idx = _pair_index(n)
    pairs = [None] * len(idx)
    for pair, p in idx.items():
        pairs[p] = pair
    # The canonical mask is the minimum over the class, so exactly one mask
    # per isomorphism class is its own canonical form.
    out = []
    for mask in range(1 << len(idx)):
        g = _graph_from_mask(n, mask, pairs)
        if canonical_mask(g) == mask:
            out.append(g)
    return out


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices (no isomorphism dedup)."""
    idx = _pair_index(n)
    pairs = [None] * len(idx)
    for pair, p in idx.items():
        pairs[p] = pair
    for mask in range(1 << len(idx)):
        yield _graph_from_mask(n, mask, pairs)
