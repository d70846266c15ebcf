import pytest

from magus.graph6 import Graph6Error, parse_graph6, write_graph6
from magus.graphs import Graph, complete, complete_bipartite, cycle, empty_graph, path, wheel

# Hand-encoded per the byte layout: n=4 is chr(4+63)='C'; the body packs the
# upper-triangle bits x01 x02 x12 x03 x13 x23 into one byte. K_4 is 111111 ->
# 63 -> '~'; C_4 with edges {01,12,23,03} is 101101 -> 45 -> 'l'.
K4_G6 = "C~"
C4_G6 = "Cl"


def test_k1_round_trip():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0
    assert write_graph6(g) == "@"


def test_k4_hand_encoding():
    g = parse_graph6(K4_G6)
    assert g == complete(4)
    assert write_graph6(complete(4)) == K4_G6


def test_c4_hand_encoding():
    g = parse_graph6(C4_G6)
    assert g == cycle(4)
    assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert write_graph6(cycle(4)) == C4_G6


@pytest.mark.parametrize(
    "g",
    [path(n) for n in range(1, 9)]
    + [cycle(n) for n in range(3, 9)]
    + [complete(n) for n in range(1, 9)]
    + [wheel(n) for n in range(3, 8)]
    + [complete_bipartite(a, b) for a in range(1, 5) for b in range(1, 5)]
    + [empty_graph(n) for n in range(1, 9)],
)
def test_round_trip_families(g):
    assert parse_graph6(write_graph6(g)) == g


def test_header_and_newline_tolerated():
    assert parse_graph6(">>graph6<<C~\n") == complete(4)


def test_long_form_vertex_count():
    g = empty_graph(100)
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_errors_name_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("")
    assert exc.value.offset == 0

    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C")  # body missing
    assert "truncated" in str(exc.value)

    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C~~")  # extra byte
    assert "trailing" in str(exc.value)

    with pytest.raises(Graph6Error):
        parse_graph6("C\x1f")  # byte below 63

    # n=2 has 1 body bit; a byte with any of the 5 padding bits set is bad.
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A" + chr(63 + 0b000001))
    assert "padding" in str(exc.value)


def test_bad_padding_detected():
    # n=3: 3 bits used, 3 padding bits must be zero. 0b111111 sets them.
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("B~")
    assert "padding" in str(exc.value)


def test_parse_write_identity_on_parsed():
    for s in ["@", "A?", "A_", "B?", "Bw", "C~", "Cl", "D??", "D?{"]:
        assert write_graph6(parse_graph6(s)) == s
