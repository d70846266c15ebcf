"""magus: exact toolkit for distance magic labelings of generalized Mycielskians.

Construct M_t(G), verify and search for distance magic labelings, and decide
distance-magicness via structural certificates, an exact rational linear
prover, and a complete backtracking search.
"""

from magus.graphs import (
    FamilySpec,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    empty_graph,
    generate,
    parse_family,
    path,
    sym_diff_size,
    wheel,
)
from magus.graph6 import Graph6Error, parse_graph6, write_graph6
from magus.mycielskian import MycGraph, build, degrees_expected, iterate
from magus.labeling import LabelingError, VerifyResult, c4_labeling, verify, weight
from magus.criteria import Certificate, Verdict
from magus.search import SearchBudget, SearchOutcome, decide, search_labeling, twin_classes

__version__ = "0.1.0"

__all__ = [
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "MycGraph",
    "Certificate",
    "LabelingError",
    "SearchBudget",
    "SearchOutcome",
    "Verdict",
    "VerifyResult",
    "build",
    "c4_labeling",
    "complete",
    "complete_bipartite",
    "cycle",
    "decide",
    "degrees_expected",
    "empty_graph",
    "generate",
    "iterate",
    "parse_family",
    "parse_graph6",
    "path",
    "search_labeling",
    "sym_diff_size",
    "twin_classes",
    "verify",
    "weight",
    "wheel",
    "write_graph6",
]
