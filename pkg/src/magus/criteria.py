"""Sound non-existence certificates for distance magic labelings.

Every certificate is a small machine-checkable witness that can be re-derived
from scratch by ``recheck_*``. The structural tests here are sound but
incomplete: a graph passing all of them may still admit no magic labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from magus.graphs import Graph, sym_diff_size
from magus.mycielskian import MycGraph, build


@dataclass(frozen=True)
class SymDiffCert:
    """Vertices a, b of the graph itself with |N(a) xor N(b)| in {1, 2}."""

    a: int
    b: int
    size: int
    kind = "sym_diff"


@dataclass(frozen=True)
class LiftedSymDiffCert:
    """Base vertices with symmetric difference exactly 2.

    Lifting to level t-1 produces a sym-diff-2 pair in M_t(base) for every
    t >= 2, so this certificate is t-independent.
    """

    a: int
    b: int
    kind = "lifted_sym_diff"


@dataclass(frozen=True)
class MinDegreeOneCert:
    """A degree-1 base vertex; rules out M_t(base) for every t >= 2."""

    vertex: int
    kind = "min_degree_one"


@dataclass(frozen=True)
class OddRegularCert:
    r: int
    kind = "odd_regular"


@dataclass(frozen=True)
class RegularBoundCert:
    """r-regular base on n vertices with r >= (2tn + 2) / (n + 1)."""

    r: int
    n: int
    t: int
    kind = "regular_bound"


@dataclass(frozen=True)
class ForcedEqualityCert:
    """Two label variables forced equal by the weight equations."""

    a: int
    b: int
    kind = "forced_equality"


@dataclass(frozen=True)
class ForcedValueCert:
    """A variable (or unit-coefficient subset sum) forced to an impossible value.

    ``var`` is a vertex index, the string "k" for the magic constant, a tuple
    of vertex indices for the distinct-sum rule, or None when the system is
    outright inconsistent.
    """

    var: Union[int, str, tuple, None]
    value: Optional[Fraction]
    reason: str
    kind = "forced_value"


@dataclass(frozen=True)
class ExhaustedCert:
    """Backtracking search exhausted the full space without a solution."""

    nodes: int
    kind = "exhausted"


Certificate = Union[
    SymDiffCert,
    LiftedSymDiffCert,
    MinDegreeOneCert,
    OddRegularCert,
    RegularBoundCert,
    ForcedEqualityCert,
    ForcedValueCert,
    ExhaustedCert,
]

# Certificates about the base graph that rule out M_t(base) for every t >= 2.
T_INDEPENDENT_KINDS = frozenset({"min_degree_one", "lifted_sym_diff"})


def certificate_to_dict(cert: Certificate) -> dict:
    d: dict = {"kind": cert.kind}
    if isinstance(cert, SymDiffCert):
        d.update(a=cert.a, b=cert.b, size=cert.size)
    elif isinstance(cert, LiftedSymDiffCert):
        d.update(a=cert.a, b=cert.b)
    elif isinstance(cert, MinDegreeOneCert):
        d.update(vertex=cert.vertex)
    elif isinstance(cert, OddRegularCert):
        d.update(r=cert.r)
    elif isinstance(cert, RegularBoundCert):
        d.update(r=cert.r, n=cert.n, t=cert.t)
    elif isinstance(cert, ForcedEqualityCert):
        d.update(a=cert.a, b=cert.b)
    elif isinstance(cert, ForcedValueCert):
        var = list(cert.var) if isinstance(cert.var, tuple) else cert.var
        d.update(var=var, value=None if cert.value is None else str(cert.value), reason=cert.reason)
    elif isinstance(cert, ExhaustedCert):
        d.update(nodes=cert.nodes)
    return d


def certificate_from_dict(d: dict) -> Certificate:
    kind = d["kind"]
    if kind == "sym_diff":
        return SymDiffCert(d["a"], d["b"], d["size"])
    if kind == "lifted_sym_diff":
        return LiftedSymDiffCert(d["a"], d["b"])
    if kind == "min_degree_one":
        return MinDegreeOneCert(d["vertex"])
    if kind == "odd_regular":
        return OddRegularCert(d["r"])
    if kind == "regular_bound":
        return RegularBoundCert(d["r"], d["n"], d["t"])
    if kind == "forced_equality":
        return ForcedEqualityCert(d["a"], d["b"])
    if kind == "forced_value":
        var = d["var"]
        if isinstance(var, list):
            var = tuple(var)
        value = d["value"]
        return ForcedValueCert(var, None if value is None else Fraction(value), d["reason"])
    if kind == "exhausted":
        return ExhaustedCert(d["nodes"])
    raise ValueError(f"unknown certificate kind {kind!r}")


@dataclass(frozen=True)
class Verdict:
    """DistanceMagic with a labeling, NotDistanceMagic with a certificate, or
    Unknown with the exhausted budget."""

    kind: str  # "distance_magic" | "not_distance_magic" | "unknown"
    labeling: Optional[tuple[int, ...]] = None
    magic_constant: Optional[int] = None
    certificate: Optional[Certificate] = None
    nodes: Optional[int] = None
    budget: Optional[dict] = None

    def as_dict(self) -> dict:
        d: dict = {"verdict": self.kind}
        if self.kind == "distance_magic":
            d["magic_constant"] = self.magic_constant
            d["labeling"] = list(self.labeling) if self.labeling is not None else None
        elif self.kind == "not_distance_magic":
            cd = certificate_to_dict(self.certificate)
            cd["t_independent"] = self.certificate.kind in T_INDEPENDENT_KINDS
            d["certificate"] = cd
        else:
            d["budget"] = self.budget
        if self.nodes is not None:
            d["nodes"] = self.nodes
        return d


# ---------------------------------------------------------------------------
# Structural tests.
# ---------------------------------------------------------------------------


def find_sd_certificate(g: Graph) -> Optional[SymDiffCert]:
    """First vertex pair (lexicographic) whose neighborhoods differ in 1 or 2
    elements; such a pair rules out any magic labeling of g."""
    for a in range(g.n):
        for b in range(a + 1, g.n):
            size = sym_diff_size(g, a, b)
            if size in (1, 2):
                return SymDiffCert(a, b, size)
    return None


def lifted_sd_certificate(base: Graph) -> Optional[LiftedSymDiffCert]:
    """First base pair with symmetric difference exactly 2 (t-independent)."""
    for a in range(base.n):
        for b in range(a + 1, base.n):
            if sym_diff_size(base, a, b) == 2:
                return LiftedSymDiffCert(a, b)
    return None


def min_degree_certificate(base: Graph) -> Optional[MinDegreeOneCert]:
    """First degree-1 base vertex (t-independent)."""
    for v in range(base.n):
        if base.degree(v) == 1:
            return MinDegreeOneCert(v)
    return None


def odd_regular_certificate(g: Graph) -> Optional[OddRegularCert]:
    r = g.is_regular()
    if r is not None and r % 2 == 1:
        return OddRegularCert(r)
    return None


def regular_bound_check(r: int, n: int, t: int) -> Optional[RegularBoundCert]:
    """Exact-rational check of the necessary degree bound for regular bases.

    An r-regular base on n vertices can only have a distance magic M_t when
    r stays below (2tn + 2)/(n + 1); the check fires on r >= that bound.
    """
    if Fraction(r) >= Fraction(2 * t * n + 2, n + 1):
        return RegularBoundCert(r, n, t)
    return None


def myc_regular_certificate(myc: MycGraph) -> Optional[SymDiffCert]:
    """A regular Mycielskian is never distance magic; witness it directly.

    Regularity forces the base to be K_2 and M_t(K_2) to be an odd cycle of
    length >= 5, which always contains a sym-diff-2 pair.
    """
    if myc.graph.is_regular() is None:
        return None
    return find_sd_certificate(myc.graph)


def decide_by_criteria(base: Graph, t: int, myc: Optional[MycGraph] = None) -> Optional[Verdict]:
    """Run the structural tests cheapest-first; first firing certificate wins.

    Order: min-degree, lifted sym-diff, Mycielskian regularity, odd-regular
    on M_t, the regular-base bound, then the direct sym-diff scan on M_t
    (which catches cases the lifted test misses, e.g. a K_1 base).
    """
    if t < 2:
        raise ValueError("need t >= 2")
    cert: Optional[Certificate] = min_degree_certificate(base)
    if cert is None:
        cert = lifted_sd_certificate(base)
    if cert is None:
        if myc is None:
            myc = build(base, t)
        cert = myc_regular_certificate(myc)
        if cert is None:
            cert = odd_regular_certificate(myc.graph)
        if cert is None:
            r = base.is_regular()
            if r is not None:
                cert = regular_bound_check(r, base.n, t)
        if cert is None:
            cert = find_sd_certificate(myc.graph)
    if cert is None:
        return None
    return Verdict("not_distance_magic", certificate=cert)


# ---------------------------------------------------------------------------
# Independent rechecks.
# ---------------------------------------------------------------------------


def recheck_graph_certificate(cert: Certificate, g: Graph, budget=None) -> bool:
    """Re-derive a certificate's claim about the graph it was issued for."""
    if isinstance(cert, SymDiffCert):
        return (
            0 <= cert.a < g.n
            and 0 <= cert.b < g.n
            and cert.a != cert.b
            and cert.size in (1, 2)
            and sym_diff_size(g, cert.a, cert.b) == cert.size
        )
    if isinstance(cert, OddRegularCert):
        return g.is_regular() == cert.r and cert.r % 2 == 1
    if isinstance(cert, (ForcedEqualityCert, ForcedValueCert)):
        from magus import prover

        return prover.recheck_forced(cert, g)
    if isinstance(cert, ExhaustedCert):
        from magus import search

        outcome = search.search_labeling(g, budget)
        return outcome.status == "proved_none" and outcome.nodes == cert.nodes
    return False


def recheck_myc_certificate(cert: Certificate, base: Graph, t: int, budget=None) -> bool:
    """Re-derive a certificate backing a NotDistanceMagic verdict on M_t(base)."""
    if isinstance(cert, MinDegreeOneCert):
        return 0 <= cert.vertex < base.n and base.degree(cert.vertex) == 1
    if isinstance(cert, LiftedSymDiffCert):
        return (
            0 <= cert.a < base.n
            and 0 <= cert.b < base.n
            and cert.a != cert.b
            and sym_diff_size(base, cert.a, cert.b) == 2
        )
    if isinstance(cert, RegularBoundCert):
        return (
            base.is_regular() == cert.r
            and base.n == cert.n
            and cert.t == t
            and regular_bound_check(cert.r, cert.n, cert.t) is not None
        )
    return recheck_graph_certificate(cert, build(base, t).graph, budget)
