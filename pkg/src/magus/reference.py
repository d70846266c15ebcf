"""Naive full-enumeration reference oracle, kept solely for cross-checking.

This deliberately stays a plain scan over all n! labelings in lexicographic
order so that it shares no pruning logic with the real search.
"""

from __future__ import annotations

from typing import Optional

from magus import _core
from magus.graphs import Graph


def naive_search(g: Graph) -> Optional[tuple[list[int], int]]:
    """First magic labeling in lexicographic order, or None."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    labels, k, _, _ = _core.naive_core(g.n, g.adj, False)
    if labels is None:
        return None
    return labels, k


def naive_magic_constants(g: Graph) -> list[int]:
    """All magic constants over the full n! scan."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    _, _, constants, _ = _core.naive_core(g.n, g.adj, True)
    return constants
