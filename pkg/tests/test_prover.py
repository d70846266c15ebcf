import random
from fractions import Fraction

from magus.catalog import connected_graphs
from magus.criteria import ForcedEqualityCert, ForcedValueCert
from magus.graphs import Graph, bits, complete, complete_bipartite, cycle, path, wheel
from magus.labeling import weights
from magus.mycielskian import build
from magus.prover import (
    build_system,
    eliminate,
    find_contradiction,
    recheck_forced,
    reduced_system_to_dict,
    refute,
)


def test_system_shape_c4():
    sys = build_system(cycle(4))
    assert len(sys.rows) == 5
    assert all(len(r) == 6 for r in sys.rows)  # f0..f3, k, rhs
    # Total-sum row.
    assert sys.rows[4][:4] == (1, 1, 1, 1) and sys.rows[4][5] == 10


def test_system_row_m3_w4_hub_level2():
    # The weight row of (c,2) in M_3(W_4) sums the rim at level 1 plus the apex.
    myc = build(wheel(4), 3)
    sys = build_system(myc.graph)
    row = sys.rows[myc.index(4, 2)]
    support = {i for i in range(16) if row[i] != 0}
    assert support == {myc.index(x, 1) for x in range(4)} | {myc.apex}
    assert row[16] == -1  # k column


def test_system_rows_k23_level0():
    myc = build(complete_bipartite(2, 3), 3)
    sys = build_system(myc.graph)
    row = sys.rows[myc.index(0, 0)]
    support = {i for i in range(16) if row[i] != 0}
    # Part-2 vertices at levels 0 and 1.
    assert support == {myc.index(y, j) for y in (2, 3, 4) for j in (0, 1)}


def test_eliminate_trivial_equality():
    # Single row f0 - f1 = 0 resolves f0 as equal to f1 with offset 0.
    sys_rows = ((Fraction(1), Fraction(-1), Fraction(0), Fraction(0)),)
    from magus.prover import LinearSystem

    sys = LinearSystem(2, sys_rows, 0, 0)
    red = eliminate(sys)
    assert red.resolution(0) == ("equal_to", 1, Fraction(0))
    assert red.resolution(1) == ("free",)


def test_m3_w4_forced_equalities():
    myc = build(wheel(4), 3)
    red = eliminate(build_system(myc.graph))
    cert = find_contradiction(red)
    assert isinstance(cert, ForcedEqualityCert)
    # The deterministic witness is the smallest pair in the forced class
    # {(c,1), (c,2), u}; the published chain's pair f(u) = f(c,2) is forced too.
    assert (cert.a, cert.b) == (myc.index(4, 1), myc.index(4, 2))
    assert recheck_forced(ForcedEqualityCert(myc.index(4, 2), myc.apex), myc.graph)


def test_m4_w4_forced_equality_is_hub_levels_0_3():
    myc = build(wheel(4), 4)
    cert = refute(myc.graph)
    assert cert == ForcedEqualityCert(myc.index(4, 0), myc.index(4, 3))


def test_k23_pins_apex_to_non_integer():
    myc = build(complete_bipartite(2, 3), 3)
    cert = refute(myc.graph)
    assert isinstance(cert, ForcedValueCert)
    assert cert.var == myc.apex
    assert cert.value == Fraction(136, 7)


def test_bipartite_family_pinned_values():
    # f(u) = N(N+1) / (2(2t+1)) whenever m + n > 4.
    for (a, b, t) in [(2, 3, 2), (3, 3, 2), (3, 3, 3), (2, 4, 2), (2, 4, 3)]:
        myc = build(complete_bipartite(a, b), t)
        big_n = myc.graph.n
        cert = refute(myc.graph)
        assert isinstance(cert, ForcedValueCert)
        assert cert.var == myc.apex
        assert cert.value == Fraction(big_n * (big_n + 1), 2 * (2 * t + 1))


def test_k22_and_m3c4_have_no_contradiction():
    assert refute(build(complete_bipartite(2, 2), 2).graph) is None
    assert refute(build(complete_bipartite(2, 2), 3).graph) is None
    assert refute(build(cycle(4), 3).graph) is None


def test_direct_odd_regular_refutations():
    # k is pinned to r(N+1)/2, a non-integer for odd r and even N+1... K_4:
    cert = refute(complete(4))
    assert isinstance(cert, ForcedEqualityCert)  # all labels forced equal first
    cert = refute(complete_bipartite(3, 3))
    assert cert == ForcedValueCert("k", Fraction(21, 2), "magic constant forced to a non-integer")


def test_p2_forced_equality():
    assert refute(path(2)) == ForcedEqualityCert(0, 1)


def test_magic_labelings_satisfy_every_row():
    from magus.labeling import c4_labeling

    myc = build(cycle(4), 3)
    sys = build_system(myc.graph)
    values = c4_labeling(3)
    k = 26
    assignment = [Fraction(v) for v in values] + [Fraction(k)]
    for row in sys.rows:
        lhs = sum(c * x for c, x in zip(row[:-1], assignment))
        assert lhs == row[-1]


def test_elimination_preserves_solutions():
    rng = random.Random(7)
    for g in [cycle(4), path(4), complete_bipartite(2, 2), wheel(4)]:
        sys = build_system(g)
        red = eliminate(sys)
        assert not red.inconsistent
        # Random rational values for the free variables; dependent variables
        # from their expressions; the original rows must hold exactly.
        free_vals = {c: Fraction(rng.randint(-60, 60), rng.randint(1, 9)) for c in red.free_cols}
        full = []
        for v in range(sys.n_vars):
            const, terms = red.exprs[v]
            full.append(const + sum(coef * free_vals[c] for c, coef in terms))
        for row in sys.rows:
            lhs = sum(c * x for c, x in zip(row[:-1], full))
            assert lhs == row[-1]


def test_prover_soundness_against_search_m2():
    from magus.search import search_labeling

    for n in range(1, 6):
        for base in connected_graphs(n):
            myc = build(base, 2)
            cert = refute(myc.graph)
            if cert is not None:
                assert search_labeling(myc.graph).status == "proved_none"
                assert recheck_forced(cert, myc.graph)


def test_distinct_sum_rule():
    # Hand-built system: f0 + f1 = 20 over 4 labels is impossible (max 4+3).
    from magus.prover import LinearSystem

    zero, one = Fraction(0), Fraction(1)
    rows = ((one, one, zero, zero, zero, Fraction(20)),)
    red = eliminate(LinearSystem(4, rows, 1, 1))
    cert = find_contradiction(red)
    assert isinstance(cert, ForcedValueCert)
    assert cert.var == (0, 1) and cert.value == 20


def test_reduced_system_dump():
    red = eliminate(build_system(cycle(4)))
    d = reduced_system_to_dict(red)
    assert d["n_labels"] == 4
    assert all(isinstance(x, str) for row in d["rows"] for x in row)
    assert d["inconsistent"] is False


def test_recheck_rejects_bogus_claims():
    g = build(wheel(4), 3).graph
    assert not recheck_forced(ForcedEqualityCert(0, 5), g)
    assert not recheck_forced(ForcedValueCert(0, Fraction(1, 2), "nope"), g)
