import io
import json

import pytest

from triality import cli

RUNNING = {"cartan": "G2", "factors": [[1, 1], [2, 1], [1, 2]], "nu": [[4, 1], [4]], "riggings": [[3, 1], [-2]]}


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(stdin)))
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_parse_factors():
    assert cli.parse_factors("1,2;1,1") == ((1, 2), (1, 1))
    assert cli.parse_factors("") == ()
    with pytest.raises(ValueError):
        cli.parse_factors("3,1")
    with pytest.raises(ValueError):
        cli.parse_factors("2,2;1,1")


@pytest.mark.parametrize("factors,count", [("1,5", 6), ("", 1), ("2,2", 11)])
def test_rc_enumerate(capsys, monkeypatch, factors, count):
    code, out = run(capsys, monkeypatch, ["rc", "enumerate", "--factors", factors])
    assert code == 0
    assert len(json.loads(out)) == count


def test_rc_enumerate_deterministic(capsys, monkeypatch):
    _, a = run(capsys, monkeypatch, ["rc", "enumerate", "--factors", "1,1;2,1"])
    _, b = run(capsys, monkeypatch, ["rc", "enumerate", "--factors", "1,1;2,1"])
    assert a == b


def test_tableaux_affine_graph(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["crystal", "graph", "--factors", "1,1", "--affine"])
    g = json.loads(out)
    assert code == 0 and len(g["nodes"]) == 8
    zero = {(json.loads(u)[0][0], json.loads(v)[0][0]) for u, a, v in g["edges"] if a == "0"}
    assert zero == {("E", "1"), ("-1", "E"), ("-3", "2"), ("-2", "3")}


def test_rc_affine_graph_dot(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["crystal", "graph", "--object", "rc", "--factors", "1,1",
                                          "--affine", "--format", "dot"])
    assert code == 0
    assert out.startswith("digraph")
    assert out.count('conjectural="true"') == 4
    assert out.count(" -> ") == 10


def test_empty_graph_spec_is_an_error(capsys, monkeypatch):
    code, _ = run(capsys, monkeypatch, ["crystal", "graph", "--factors", ""])
    assert code == 2


def test_phi_apply_and_invert(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["phi", "apply"], RUNNING)
    res = json.loads(out)
    assert res["text"] == "[[3]] ⊗ [[3],[-3]] ⊗ [[1,3]]"
    assert res["status"] == "conjectural"
    code, out = run(capsys, monkeypatch, ["phi", "invert"], res["tensor"])
    assert json.loads(out)["rc"] == RUNNING


def test_delta_step(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["delta", "step", "--trace"], RUNNING)
    res = json.loads(out)
    assert res["letter"] == "3"
    assert res["trace"]["l1"] == 1 and res["trace"]["l2"] == 4
    assert res["rc"]["nu"] == [[4], [3]]


def test_fill(capsys, monkeypatch):
    _, out = run(capsys, monkeypatch, ["fill", "--r", "2", "--s", "2", "--params", "0,2,1,0"])
    assert json.loads(out)["rows"] == [["3", "1"], ["-3", "2"]]
    _, out = run(capsys, monkeypatch, ["fill", "--r", "1", "--s", "8", "--letters", "3,0,-2,-2,-1"])
    assert json.loads(out)["rows"] == [["3", "0", "-2", "-2", "-1", "-1", "1", "E"]]


def test_stats(capsys, monkeypatch):
    hw = {"cartan": "G2", "factors": [[2, 1]], "nu": [[1], []], "riggings": [[1], []]}
    _, out = run(capsys, monkeypatch, ["stats", "cc"], hw)
    assert json.loads(out)["cocharge"] == 2
    _, out = run(capsys, monkeypatch, ["stats", "energy"], [{"s": 5, "letters": ["1", "1", "1"]}])
    assert json.loads(out)["energy"] == 2


def test_kleber(capsys, monkeypatch):
    _, out = run(capsys, monkeypatch, ["kleber", "--factors", "2,1"])
    res = json.loads(out)
    assert res["dot"].startswith("digraph kleber")
    assert len(res["rigged_configurations"]) == 4


def test_virtualize(capsys, monkeypatch):
    _, out = run(capsys, monkeypatch, ["virtualize", "rc"], RUNNING)
    res = json.loads(out)
    assert res["cartan"] == "D4" and len(res["nu"]) == 4
    _, out = run(capsys, monkeypatch, ["virtualize", "tableau"], {"s": 1, "letters": ["0"]})
    assert json.loads(out)["columns"] == [["3", "-3"]]


@pytest.mark.parametrize("argv", [
    ["verify", "xm", "--factors", "1,2;1,1"],
    ["verify", "rmatrix", "--s", "3"],
    ["verify", "filling", "--r", "2", "--s", "2"],
    ["verify", "affine-conjecture", "--s", "1"],
])
def test_verify(capsys, monkeypatch, argv):
    code, out = run(capsys, monkeypatch, argv)
    assert code == 0
    assert json.loads(out)["pass"] is True
