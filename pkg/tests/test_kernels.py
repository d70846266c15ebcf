"""Compiled kernel vs pure fallback: identical trees, outcomes, node counts."""

import pytest

from magus import _core, _pure
from magus.catalog import all_graphs
from magus.graphs import complete, complete_bipartite, cycle, path, wheel
from magus.mycielskian import build

compiled = pytest.importorskip("magus._kernel")


def corpus():
    graphs = [g for n in range(1, 5) for g in all_graphs(n)]
    graphs += [cycle(5), cycle(6), complete(5), wheel(5), complete_bipartite(2, 3)]
    graphs += [build(b, 2).graph for b in (path(3), cycle(4), complete(3), wheel(4))]
    graphs += [build(cycle(4), 3).graph]
    return graphs


@pytest.mark.parametrize("use_twins", [True, False])
@pytest.mark.parametrize("use_pruning", [True, False])
def test_search_core_agreement(use_twins, use_pruning):
    for g in corpus():
        if not use_pruning and g.n > 8:
            continue  # leaf-verify search is factorial
        args = (g.n, list(g.adj), 0, 0.0, use_twins, use_pruning, False)
        assert compiled.search_core(*args) == _pure.search_core(*args)


def test_search_core_agreement_collect_all():
    for g in corpus():
        if g.n > 8:
            continue
        args = (g.n, list(g.adj), 0, 0.0, True, True, True)
        assert compiled.search_core(*args) == _pure.search_core(*args)


def test_search_core_agreement_under_budget():
    g = build(cycle(4), 3).graph
    for budget in (1, 10, 100, 1000):
        args = (g.n, list(g.adj), budget, 0.0, True, True, False)
        assert compiled.search_core(*args) == _pure.search_core(*args)


def test_naive_core_agreement():
    for g in corpus():
        if g.n > 7:
            continue
        args = (g.n, list(g.adj), False)
        assert compiled.naive_core(*args) == _pure.naive_core(*args)
        args = (g.n, list(g.adj), True)
        assert compiled.naive_core(*args) == _pure.naive_core(*args)


def test_dispatch_uses_pure_beyond_word_size():
    # 65+ vertices cannot use the compiled kernel; dispatch must not crash.
    from magus.graphs import empty_graph

    g = empty_graph(70)
    status, labels, k, nodes, _ = _core.search_core(70, g.adj, 0, 0.0, True, True, False)
    assert status == _pure.STATUS_FOUND and k == 0


def test_kernel_reports_identity():
    assert _core.KERNEL in ("compiled", "pure")
    assert _core.has_compiled()
