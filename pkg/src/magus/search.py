"""Complete decision procedure for distance magic labelings.

``search_labeling`` is the ground-truth oracle: pruned backtracking with
false-twin symmetry breaking, deterministic for a fixed budget. ``decide``
composes the cheap structural certificates, the rational prover, and the
search into one pipeline for Mycielskians of a base graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from magus import _core, criteria, labeling, prover
from magus.criteria import ExhaustedCert, Verdict
from magus.graphs import Graph
from magus.mycielskian import MycGraph, build

DEFAULT_MAX_NODES = 100_000_000

# Above this size an unbounded search is refused outright.
UNBOUNDED_LIMIT = 13


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: Optional[int] = DEFAULT_MAX_NODES
    timeout_secs: Optional[float] = None

    def as_dict(self) -> dict:
        return {"max_nodes": self.max_nodes, "timeout_secs": self.timeout_secs}


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "proved_none" | "budget_exceeded"
    labeling: Optional[tuple[int, ...]]
    magic_constant: Optional[int]
    nodes: int


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into false-twin classes (identical open
    neighborhoods), ordered by smallest member; singletons included."""
    by_mask: dict[int, list[int]] = {}
    for v in range(g.n):
        by_mask.setdefault(g.adj[v], []).append(v)
    return sorted(by_mask.values())


def search_labeling(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    *,
    use_twins: bool = True,
    use_pruning: bool = True,
) -> SearchOutcome:
    """Find a distance magic labeling or prove none exists.

    A Found labeling is re-verified before being returned; ProvedNone means
    the whole space (modulo twin-class label ordering) was exhausted.
    """
    if g.n < 1:
        raise ValueError("search needs at least one vertex")
    if budget is None:
        budget = SearchBudget()
    if g.n > UNBOUNDED_LIMIT and budget.max_nodes is None and budget.timeout_secs is None:
        raise ValueError(f"unbounded search refused for n > {UNBOUNDED_LIMIT}")
    status, labels, k, nodes, _ = _core.search_core(
        g.n,
        g.adj,
        budget.max_nodes or 0,
        budget.timeout_secs or 0.0,
        use_twins,
        use_pruning,
        False,
    )
    if status == _core._pure.STATUS_FOUND:
        result = labeling.verify(g, labels)
        if not result.is_magic or result.magic_constant != k:
            raise AssertionError("search returned a labeling that fails verification")
        return SearchOutcome("found", tuple(labels), k, nodes)
    if status == _core._pure.STATUS_BUDGET:
        return SearchOutcome("budget_exceeded", None, None, nodes)
    return SearchOutcome("proved_none", None, None, nodes)


def magic_constants(
    g: Graph,
    *,
    use_twins: bool = True,
    use_pruning: bool = True,
) -> list[int]:
    """All magic constants achieved by any labeling (exhaustive; small n only)."""
    if g.n < 1:
        raise ValueError("search needs at least one vertex")
    status, _, _, _, constants = _core.search_core(
        g.n, g.adj, 0, 0.0, use_twins, use_pruning, True
    )
    if status != _core._pure.STATUS_NONE:
        raise AssertionError("exhaustive constant collection hit a budget")
    return constants


def decide_graph(g: Graph, budget: Optional[SearchBudget] = None) -> Verdict:
    """Decide distance-magicness of a graph directly (certificates, prover,
    then search)."""
    cert: Optional[criteria.Certificate] = criteria.find_sd_certificate(g)
    if cert is None:
        cert = criteria.odd_regular_certificate(g)
    if cert is None:
        cert = prover.refute(g)
    if cert is not None:
        return Verdict("not_distance_magic", certificate=cert)
    return _search_verdict(g, budget)


def decide(base: Graph, t: int, budget: Optional[SearchBudget] = None) -> Verdict:
    """Decide distance-magicness of M_t(base) for t >= 2.

    Pipeline: structural criteria, then the rational prover, then exhaustive
    search; Unknown only when the search budget runs out.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    myc = build(base, t)
    verdict = criteria.decide_by_criteria(base, t, myc)
    if verdict is not None:
        return verdict
    cert = prover.refute(myc.graph)
    if cert is not None:
        return Verdict("not_distance_magic", certificate=cert)
    return _search_verdict(myc.graph, budget)


def _search_verdict(g: Graph, budget: Optional[SearchBudget]) -> Verdict:
    if budget is None:
        budget = SearchBudget()
    outcome = search_labeling(g, budget)
    if outcome.status == "found":
        return Verdict(
            "distance_magic",
            labeling=outcome.labeling,
            magic_constant=outcome.magic_constant,
            nodes=outcome.nodes,
        )
    if outcome.status == "proved_none":
        return Verdict(
            "not_distance_magic",
            certificate=ExhaustedCert(outcome.nodes),
            nodes=outcome.nodes,
        )
    return Verdict("unknown", nodes=outcome.nodes, budget=budget.as_dict())
