import json

import pytest

from magus.cli import main
from magus.graph6 import parse_graph6, write_graph6
from magus.graphs import complete, cycle, path, wheel
from magus.labeling import c4_labeling
from magus.mycielskian import build


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_c4(capsys):
    code, out, _ = run(capsys, "construct", "--family", "c4", "--t", "3")
    assert code == 0
    g6, naming = out.splitlines()
    g = parse_graph6(g6)
    assert g.n == 13 and g.m == 24
    names = json.loads(naming)
    assert names["12"] == "u" and names["0"] == "x0@0"


def test_construct_k2_t4_is_c9(capsys):
    code, out, _ = run(capsys, "construct", "--family", "k2", "--t", "4")
    assert code == 0
    g = parse_graph6(out.splitlines()[0])
    assert g.n == 9 and g.is_regular() == 2


def test_construct_p3_matches_figure(capsys):
    code, out, _ = run(capsys, "construct", "--family", "p3", "--t", "3")
    g = parse_graph6(out.splitlines()[0])
    assert code == 0 and g.n == 10 and g.m == 13


def test_construct_rejects_small_t(capsys):
    code, _, err = run(capsys, "construct", "--family", "c4", "--t", "1")
    assert code == 2 and "t must be >= 2" in err


def test_construct_bad_family(capsys):
    code, _, err = run(capsys, "construct", "--family", "zz", "--t", "2")
    assert code == 2


def test_verify_figure_labeling(capsys):
    g6 = write_graph6(build(cycle(4), 3).graph)
    labels = json.dumps(c4_labeling(3))
    code, out, _ = run(capsys, "verify", g6, labels)
    assert code == 0
    assert json.loads(out)["magic_constant"] == 26


def test_verify_perturbed_labeling(capsys):
    g6 = write_graph6(build(cycle(4), 3).graph)
    labels = c4_labeling(3)
    labels[0], labels[1] = labels[1], labels[0]
    code, out, _ = run(capsys, "verify", g6, json.dumps(labels))
    assert code == 1
    obj = json.loads(out)
    assert obj["magic_constant"] is None and "witness" in obj


def test_verify_wrong_length(capsys):
    code, _, err = run(capsys, "verify", "Cl", "[1,2,3]")
    assert code == 2


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", "--family", "c4", "--t", "5")
    assert code == 0
    assert json.loads(out)["magic_constant"] == 42

    code, out, _ = run(capsys, "decide", "--family", "w4", "--t", "3")
    assert code == 1
    assert json.loads(out)["certificate"]["kind"] == "forced_equality"

    code, out, _ = run(capsys, "decide", "--family", "k33", "--t", "3")
    assert code == 1

    code, out, _ = run(capsys, "decide", "--family", "c4", "--t", "3", "--max-nodes", "2")
    assert code == 3
    assert json.loads(out)["verdict"] == "unknown"

    code, _, _ = run(capsys, "decide", "--graph6", "notgraph6\x01", "--t", "2")
    assert code == 2


def test_label_c4_values(capsys):
    code, out, _ = run(capsys, "label-c4", "--t", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["magic_constant"] == 18
    assert sorted(obj["labels"]) == list(range(1, 10))


def test_census_small(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MAGUS_THREADS", "1")
    f = tmp_path / "graphs.g6"
    f.write_text(write_graph6(path(3)) + "\n" + write_graph6(cycle(4)) + "\n")
    code, out, err = run(capsys, "census", str(f), "--t", "3")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 2
    p3, c4 = records
    # P_3 itself is magic, its Mycielskian is not; C_4 keeps the property.
    assert p3["base"]["verdict"] == "distance_magic"
    assert p3["myc"]["verdict"] == "not_distance_magic"
    assert p3["myc"]["certificate"]["t_independent"] is True
    assert c4["base"]["verdict"] == "distance_magic"
    assert c4["myc"]["verdict"] == "distance_magic"
    assert "records" in err


def test_census_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.g6"
    f.write_text("")
    code, out, _ = run(capsys, "census", str(f), "--t", "2")
    assert code == 0 and out == ""


def test_census_bad_line_not_fatal(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MAGUS_THREADS", "1")
    f = tmp_path / "mixed.g6"
    f.write_text("Cl\n\x01bad\n")
    code, out, err = run(capsys, "census", str(f), "--t", "2")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 2  # one real record, one error record
    assert "error" in records[1]
    assert "1 input errors" in err


def test_census_recheck_passes(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MAGUS_THREADS", "1")
    f = tmp_path / "graphs.g6"
    f.write_text("\n".join(write_graph6(g) for g in (cycle(4), complete(4), wheel(4), path(2))) + "\n")
    code, _, err = run(capsys, "census", str(f), "--t", "2,3", "--recheck")
    assert code == 0
    assert "0 failures" in err


def test_census_deterministic(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MAGUS_THREADS", "1")
    f = tmp_path / "graphs.g6"
    f.write_text("\n".join(write_graph6(g) for g in (cycle(4), cycle(5), complete(4))) + "\n")
    _, out1, _ = run(capsys, "census", str(f), "--t", "2")
    _, out2, _ = run(capsys, "census", str(f), "--t", "2")
    assert out1 == out2


def test_census_timings_flag(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MAGUS_THREADS", "1")
    f = tmp_path / "graphs.g6"
    f.write_text("Cl\n")
    _, out, _ = run(capsys, "census", str(f), "--t", "2", "--timings")
    record = json.loads(out.splitlines()[0])
    assert "wall_ms" in record
