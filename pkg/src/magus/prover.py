"""Exact-rational refutation of distance magic labelings via linear algebra.

The weight equations of a hypothetical magic labeling are linear: one row
sum(f(u) for u in N(v)) - k = 0 per vertex, plus the total-sum row forced by
bijectivity onto 1..N. Reduced row echelon form over Fractions then exposes
consequences no bijection can satisfy: two labels forced equal, a label or
the constant k pinned to an impossible value, or a unit-coefficient subset
forced to a sum that s distinct labels cannot reach. Floating point is never
used here; forced-equality detection depends on exact zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from magus.criteria import Certificate, ForcedEqualityCert, ForcedValueCert
from magus.graphs import Graph, bits

Row = list  # list[Fraction], length n_vars + 1, last entry the right-hand side


@dataclass(frozen=True)
class LinearSystem:
    """Weight equations of a graph: variables f_0..f_{N-1} and k (column N)."""

    n_labels: int
    rows: tuple
    min_deg: int
    max_deg: int

    @property
    def n_vars(self) -> int:
        return self.n_labels + 1


@dataclass(frozen=True)
class ReducedSystem:
    """Row echelon basis plus a per-variable resolution.

    ``exprs[v]`` writes variable v as (constant, ((free_var, coef), ...)) over
    the free variables; identical expressions mean the system forces the two
    variables equal.
    """

    n_labels: int
    rows: tuple
    pivot_cols: tuple
    free_cols: tuple
    exprs: tuple
    inconsistent: bool
    min_deg: int
    max_deg: int

    def resolution(self, v: int):
        """Classify variable v: free, pinned, offset-equal, or general affine."""
        const, terms = self.exprs[v]
        if terms == ((v, Fraction(1)),):
            return ("free",)
        if not terms:
            return ("pinned", const)
        if len(terms) == 1 and terms[0][1] == 1:
            return ("equal_to", terms[0][0], const)
        return ("affine", const, terms)


def build_system(g: Graph) -> LinearSystem:
    """One weight row per vertex plus the total-sum row."""
    n = g.n
    zero = Fraction(0)
    one = Fraction(1)
    rows = []
    for v in range(n):
        row = [zero] * (n + 2)
        for u in bits(g.adj[v]):
            row[u] = one
        row[n] = Fraction(-1)  # k column
        rows.append(row)
    total = [one] * n + [zero, Fraction(n * (n + 1), 2)]
    rows.append(total)
    degs = [g.degree(v) for v in range(n)]
    return LinearSystem(n, tuple(tuple(r) for r in rows), min(degs), max(degs))


def eliminate(sys: LinearSystem) -> ReducedSystem:
    """Reduced row echelon form; solution-set preserving by construction."""
    nv = sys.n_vars
    rows = [list(r) for r in sys.rows]
    pivot_cols = []
    r = 0
    for c in range(nv):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break

    inconsistent = any(
        all(x == 0 for x in row[:nv]) and row[nv] != 0 for row in rows[r:]
    )
    basis = tuple(tuple(row) for row in rows[:r])
    free_cols = tuple(c for c in range(nv) if c not in set(pivot_cols))

    exprs = [None] * nv
    for c in free_cols:
        exprs[c] = (Fraction(0), ((c, Fraction(1)),))
    for i, c in enumerate(pivot_cols):
        row = basis[i]
        terms = tuple((j, -row[j]) for j in free_cols if row[j] != 0)
        exprs[c] = (row[nv], terms)

    return ReducedSystem(
        sys.n_labels,
        basis,
        tuple(pivot_cols),
        free_cols,
        tuple(exprs),
        inconsistent,
        sys.min_deg,
        sys.max_deg,
    )


def _distinct_sum_bounds(s: int, n_labels: int) -> tuple[int, int]:
    """Range of sums of s distinct labels from 1..n_labels."""
    return s * (s + 1) // 2, s * n_labels - s * (s - 1) // 2


def find_contradiction(red: ReducedSystem) -> Optional[Certificate]:
    """First refutation of bijectivity, in a fixed cheap-first order.

    Rules: outright inconsistency; two labels forced equal; a label pinned to
    a non-integer or a value outside 1..N; the constant k pinned to a
    non-integer or outside the feasible weight window; a unit-coefficient
    subset forced to a sum s distinct labels cannot produce.
    """
    n = red.n_labels
    k_col = n

    if red.inconsistent:
        return ForcedValueCert(None, None, "weight equations have no solution at all")

    groups: dict = {}
    for v in range(n):
        const, terms = red.exprs[v]
        groups.setdefault((const, terms), []).append(v)
    best: Optional[tuple[int, int]] = None
    for members in groups.values():
        if len(members) > 1:
            pair = (members[0], members[1])
            if best is None or pair < best:
                best = pair
    if best is not None:
        return ForcedEqualityCert(best[0], best[1])

    for v in range(n):
        res = red.resolution(v)
        if res[0] == "pinned":
            q = res[1]
            if q.denominator != 1:
                return ForcedValueCert(v, q, "label forced to a non-integer")
            if not 1 <= q <= n:
                return ForcedValueCert(v, q, f"label forced outside 1..{n}")

    res = red.resolution(k_col)
    if res[0] == "pinned":
        q = res[1]
        if q.denominator != 1:
            return ForcedValueCert("k", q, "magic constant forced to a non-integer")
        lo = red.min_deg * (red.min_deg + 1) // 2
        hi = red.max_deg * n - red.max_deg * (red.max_deg - 1) // 2
        if not lo <= q <= hi:
            return ForcedValueCert("k", q, f"magic constant outside feasible window {lo}..{hi}")

    for row in red.rows:
        if row[k_col] != 0:
            continue
        support = [c for c in range(n) if row[c] != 0]
        if len(support) < 2:
            continue
        gamma = row[support[0]]
        if any(row[c] != gamma for c in support[1:]):
            continue
        total = row[n + 1] / gamma
        lo, hi = _distinct_sum_bounds(len(support), n)
        if total.denominator != 1 or not lo <= total <= hi:
            return ForcedValueCert(
                tuple(support),
                total,
                f"sum of {len(support)} distinct labels must lie in {lo}..{hi}",
            )
    return None


def refute(g: Graph) -> Optional[Certificate]:
    """Build, eliminate, and look for a contradiction in one call."""
    return find_contradiction(eliminate(build_system(g)))


def _rank(vectors: list) -> int:
    """Rank of exact-rational vectors (the right-hand side is a column too)."""
    rows = [list(v) for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for c in range(width):
        pr = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _implies(sys: LinearSystem, target: Sequence[Fraction]) -> bool:
    """Whether ``target`` (coeffs + rhs) is a linear combination of the rows."""
    base = [list(r) for r in sys.rows]
    return _rank(base) == _rank(base + [list(target)])


def recheck_forced(cert: Certificate, g: Graph) -> bool:
    """Independently confirm a prover certificate against the graph's system."""
    sys = build_system(g)
    n = sys.n_labels
    zero = Fraction(0)
    target = [zero] * (n + 2)
    if isinstance(cert, ForcedEqualityCert):
        if not (0 <= cert.a < n and 0 <= cert.b < n and cert.a != cert.b):
            return False
        target[cert.a] = Fraction(1)
        target[cert.b] = Fraction(-1)
        return _implies(sys, target)
    if not isinstance(cert, ForcedValueCert):
        return False
    if cert.var is None:
        return eliminate(sys).inconsistent
    if cert.var == "k":
        target[n] = Fraction(1)
        target[n + 1] = cert.value
        lo = sys.min_deg * (sys.min_deg + 1) // 2
        hi = sys.max_deg * n - sys.max_deg * (sys.max_deg - 1) // 2
        bad = cert.value.denominator != 1 or not lo <= cert.value <= hi
        return bad and _implies(sys, target)
    if isinstance(cert.var, tuple):
        if not all(0 <= v < n for v in cert.var) or len(set(cert.var)) != len(cert.var):
            return False
        for v in cert.var:
            target[v] = Fraction(1)
        target[n + 1] = cert.value
        lo, hi = _distinct_sum_bounds(len(cert.var), n)
        bad = cert.value.denominator != 1 or not lo <= cert.value <= hi
        return bad and _implies(sys, target)
    v = cert.var
    if not 0 <= v < n:
        return False
    target[v] = Fraction(1)
    target[n + 1] = cert.value
    bad = cert.value.denominator != 1 or not 1 <= cert.value <= n
    return bad and _implies(sys, target)


def reduced_system_to_dict(red: ReducedSystem) -> dict:
    """Audit dump: echelon rows as exact rational strings."""
    return {
        "n_labels": red.n_labels,
        "pivot_columns": list(red.pivot_cols),
        "free_columns": list(red.free_cols),
        "inconsistent": red.inconsistent,
        "rows": [[str(x) for x in row] for row in red.rows],
    }
