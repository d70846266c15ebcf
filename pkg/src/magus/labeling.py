"""Distance magic labelings: weights, verification, and the 4-cycle formula.

A labeling assigns the values 1..N bijectively to the vertices; the weight of
a vertex is the sum of the labels over its open neighborhood. The labeling is
distance magic when every weight equals one constant k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from magus.graphs import Graph, bits
from magus.mycielskian import MycGraph, build
from magus import graphs as _graphs


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class VerifyResult:
    """Either a magic constant or the first pair of unequal vertex weights."""

    magic_constant: Optional[int]
    witness: Optional[tuple[int, int, int, int]]  # (a, b, weight_a, weight_b)

    @property
    def is_magic(self) -> bool:
        return self.witness is None


def check_labeling(n: int, values: Sequence[int]) -> None:
    """Raise LabelingError unless ``values`` is a bijection onto 1..n."""
    if len(values) != n:
        raise LabelingError(f"labeling has length {len(values)}, graph has {n} vertices")
    if sorted(values) != list(range(1, n + 1)):
        raise LabelingError(f"labels are not a bijection onto 1..{n}")


def weight(g: Graph, values: Sequence[int], v: int) -> int:
    """Sum of labels over the open neighborhood of v."""
    return sum(values[u] for u in bits(g.adj[v]))


def weights(g: Graph, values: Sequence[int]) -> list[int]:
    return [weight(g, values, v) for v in range(g.n)]


def verify(g: Graph, values: Sequence[int]) -> VerifyResult:
    """Check a labeling; non-bijective input is an error, not a NotMagic result.

    When weights differ, the witness is the lexicographically first unequal
    pair, which is always (0, b) for the first b whose weight differs from
    vertex 0's.
    """
    if g.n == 0:
        raise LabelingError("cannot verify a labeling of the empty graph")
    check_labeling(g.n, values)
    w0 = weight(g, values, 0)
    for b in range(1, g.n):
        wb = weight(g, values, b)
        if wb != w0:
            return VerifyResult(None, (0, b, w0, wb))
    return VerifyResult(w0, None)


def weight_sum_identity(g: Graph, values: Sequence[int], k: int) -> bool:
    """Whether sum(deg(v) * f(v)) equals k * n, as every magic labeling must."""
    return sum(g.degree(v) * values[v] for v in range(g.n)) == k * g.n


def c4_labeling(t: int) -> list[int]:
    """The closed-form distance magic labeling of M_t(C_4), constant 8t + 2.

    With the 4-cycle's vertices numbered 0..3 along the walk, level j gets
    labels (2j+1, 2j+2, 4t-2j, 4t-2j-1) and the apex gets 4t+1. The four
    arithmetic progressions partition 1..4t+1.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    values = [0] * (4 * t + 1)
    for j in range(t):
        values[4 * j + 0] = 2 * j + 1
        values[4 * j + 1] = 2 * j + 2
        values[4 * j + 2] = 4 * t - 2 * j
        values[4 * j + 3] = 4 * t - 2 * j - 1
    values[4 * t] = 4 * t + 1
    return values


def c4_mycielskian(t: int) -> MycGraph:
    """The graph that ``c4_labeling`` labels."""
    return build(_graphs.cycle(4), t)


def labeling_to_dict(values: Sequence[int], magic_constant: Optional[int]) -> dict:
    return {
        "n": len(values),
        "labels": list(values),
        "magic_constant": magic_constant,
    }


def labeling_from_obj(obj: object, n: int) -> list[int]:
    """Read a labeling from parsed JSON: either a bare array or the dict form."""
    if isinstance(obj, dict):
        obj = obj.get("labels")
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise LabelingError("labeling JSON must be an integer array or {'labels': [...]}")
    check_labeling(n, obj)
    return list(obj)
