from __future__ import annotations

import json

import pytest

from hhdigraph.cli import run
from hhdigraph.digraph import make_cycle
from hhdigraph.enumeration import EnumFilter, enumerate_digraphs
from hhdigraph.formats import parse_digraph, parse_digraph_stream, write_digraph


@pytest.fixture
def write(tmp_path):
    def _write(text: str, name: str = "d.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_cycle(write, capsys):
    code, out, _ = _run(capsys, "check", write("3\n010\n001\n100\n"))
    assert code == 0 and json.loads(out) == {"hh": True}


def test_check_not_hh(write, capsys):
    code, out, _ = _run(capsys, "check", write("4\n0100\n0010\n0001\n1000\n"))
    data = json.loads(out)
    assert code == 1 and data["hh"] is False
    assert data["witness"] == {"domain": [0, 2], "map": {"0": 0, "2": 0}, "blocked_vertex": 1}


def test_classify(write, capsys):
    code, out, _ = _run(capsys, "classify", write("n=3\n0 1\n1 0\n"))
    assert code == 1 and json.loads(out) == {"family": "none"}
    code, out, _ = _run(capsys, "classify", write("n=6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n"))
    assert code == 0 and json.loads(out) == {"family": "kC3", "k": 2}


def test_classify_scope_error(write, capsys):
    code, out, err = _run(capsys, "classify", write("1\n1\n"))
    assert code == 2 and out == "" and "irreflexive" in err


def test_witness(write, capsys):
    code, out, _ = _run(capsys, "witness", write("3\n010\n001\n100\n"))
    assert code == 0 and out == "hh\n"
    code, out, _ = _run(capsys, "witness", write("n=3\n0 1\n1 0\n1 2\n"))
    assert code == 1 and json.loads(out) == {"domain": [0], "map": {"0": 2}, "blocked_vertex": 1}


def test_malformed_file(write, capsys):
    code, out, err = _run(capsys, "check", write("2\n01\n0\n"))
    assert code == 2 and out == "" and "line 3" in err
    code, _, err = _run(capsys, "check", write("n=2\n0 1\n0 1\n"))
    assert code == 2 and "duplicate" in err
    code, _, err = _run(capsys, "check", "/nonexistent/file")
    assert code == 2


def test_gen_then_check(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    assert _run(capsys, "gen", "kKn", "2", "3", "--out", path)[0] == 0
    d = parse_digraph(open(path).read())
    assert d.n == 6 and d.edge_count == 12
    code, out, _ = _run(capsys, "check", path)
    assert code == 0 and json.loads(out) == {"hh": True}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["gen", "kC3", "2"], (6, 6)),
        (["gen", "Cn", "5"], (5, 5)),
        (["gen", "one-loop"], (1, 1)),
    ],
)
def test_gen_families(capsys, argv, expected):
    code, out, _ = _run(capsys, *argv)
    d = parse_digraph(out)
    assert code == 0 and (d.n, d.edge_count) == expected


@pytest.mark.parametrize("argv", [["gen", "Cn", "2"], ["gen", "kKn", "2"], ["gen", "bogus"], ["gen", "kC3", "x"]])
def test_gen_errors(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


def test_enumerate(tmp_path, capsys):
    code, out, _ = _run(capsys, "enumerate", "--n", "3", "--irreflexive")
    assert code == 0
    ds = list(parse_digraph_stream(out))
    assert ds == list(enumerate_digraphs(3, EnumFilter(irreflexive_only=True)))
    path = str(tmp_path / "e.txt")
    code, out, _ = _run(capsys, "enumerate", "--n", "3", "--irreflexive", "--kind", "improper", "--out", path)
    assert code == 0 and out == ""
    assert len(list(parse_digraph_stream(open(path).read()))) == 6
    code, out, _ = _run(capsys, "enumerate", "--n", "2")
    assert len(list(parse_digraph_stream(out))) == 10


def test_enumerate_limits(capsys):
    assert _run(capsys, "enumerate", "--n", "7")[0] == 2
    assert _run(capsys, "enumerate", "--n", "6")[0] == 2  # needs --allow-large
    assert _run(capsys, "enumerate", "--n", "0")[0] == 2


def test_verify(tmp_path, capsys):
    code, out, err = _run(capsys, "verify", "--max-n", "3")
    data = json.loads(out)
    assert code == 0 and data["disagreements"] == 0
    assert [r["hh_checker"] for r in data["rows"]] == [1, 2, 3]
    assert "n=3" in err
    path = str(tmp_path / "r.json")
    code, out, _ = _run(capsys, "verify", "--max-n", "2", "--out", path)
    assert code == 0 and "HH(check)" in out
    assert json.load(open(path))["rows"][1]["total"] == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        run([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["enumerate", "--kind", "graph"])
    assert info.value.code == 2


def test_check_agrees_with_classify(tmp_path, capsys):
    for n in range(1, 5):
        for d in enumerate_digraphs(n, EnumFilter(irreflexive_only=True)):
            path = tmp_path / "x.txt"
            path.write_text(write_digraph(d))
            c1 = run(["check", str(path)])
            c2 = run(["classify", str(path)])
            capsys.readouterr()
            assert c1 == c2


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(write_digraph(make_cycle(3))))
    code, out, _ = _run(capsys, "check", "-")
    assert code == 0
