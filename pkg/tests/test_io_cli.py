import json

import pytest

from penta2p import cli, io
from penta2p.errors import InvalidMap, UnsupportedFormat
from penta2p.generators import dodecahedron, gadget_H, theorem2_pentagulation
from penta2p.graph import build_graph
from penta2p.op2planar import insert_pentagrams
from penta2p.stellation import stellate

TRIANGLE = build_graph(3, [(0, 1), (1, 2), (2, 0)])


def test_edgelist_triangle():
    text = io.export(TRIANGLE, "edgelist")
    assert text == "3 3\n0 1\n0 2\n1 2\n"
    assert io.from_edgelist(text) == TRIANGLE


def test_edgelist_header_mismatch():
    with pytest.raises(ValueError):
        io.from_edgelist("3 2\n0 1\n")


@pytest.mark.parametrize(
    "obj",
    [TRIANGLE, dodecahedron(), gadget_H().map, stellate(dodecahedron()), insert_pentagrams(dodecahedron())],
    ids=["graph", "map", "gadget", "stellated", "op"],
)
def test_json_round_trip_is_byte_identical(obj):
    text = io.export(obj, "json")
    again = io.loads(text)
    assert again == obj
    assert io.export(again, "json") == text


def test_dot_counts():
    dot = io.export(dodecahedron(), "dot")
    assert dot.count(" -- ") == 30
    assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 20
    op = io.export(insert_pentagrams(dodecahedron()), "dot")
    assert op.count(" -- ") == 90
    assert op.count("kind=chord") == 60 and op.count("kind=skeleton") == 30
    st = io.export(stellate(dodecahedron()), "dot")
    assert st.count("kind=stellating") == 12


def test_unsupported_format():
    with pytest.raises(UnsupportedFormat):
        io.export(TRIANGLE, "png")


def test_bad_records():
    with pytest.raises(InvalidMap):
        io.from_record({"foo": 1})
    rec = io.to_record(insert_pentagrams(dodecahedron()))
    rec["pentagrams"][0]["boundary"] = rec["pentagrams"][1]["boundary"]
    with pytest.raises(InvalidMap):
        io.from_record(rec)


# --------------------------------------------------------------------- CLI


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io as _io

        monkeypatch.setattr("sys.stdin", _io.StringIO(stdin))
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_then_check(tmp_path, capsys):
    f = tmp_path / "d.json"
    assert cli.run(["gen", "dodecahedron", "--out", str(f)]) == 0
    code, out, _ = run(capsys, ["check", "pentagulation", "--in", str(f)])
    assert code == 0 and "True" in out
    code, _, _ = run(capsys, ["check", "triangulation", "--in", str(f)])
    assert code == 1


def test_thm2_pipe_certify(capsys, monkeypatch):
    code, penta, _ = run(capsys, ["gen", "thm2", "--l", "5", "--gadget", "h"])
    assert code == 0
    code, op, _ = run(capsys, ["op"], penta, monkeypatch)
    assert code == 0
    code, out, _ = run(capsys, ["certify", "--cut", "auto-corners", "--json"], op, monkeypatch)
    payload = json.loads(out)
    assert code == 0
    assert payload["verdict"] == "NonHamiltonian"
    assert payload["cut"] == [0, 1, 2, 3, 4]
    assert payload["component_count"] == 6


@pytest.mark.parametrize("ell", [5, 6, 7])
def test_auto_corners_is_host_triangulation(ell, tmp_path, capsys):
    f = tmp_path / "t.json"
    io_path = str(f)
    cli.run(["gen", "thm2", "--l", str(ell), "--gadget", "f", "--out", io_path])
    code, out, _ = run(capsys, ["certify", "--in", io_path, "--cut", "auto-corners", "--json"])
    assert json.loads(out)["cut"] == list(range(ell))


def test_certify_inconclusive_exit(tmp_path, capsys):
    f = tmp_path / "g.json"
    f.write_text(io.dumps(build_graph(6, [(i, (i + 1) % 6) for i in range(6)])))
    code, out, _ = run(capsys, ["certify", "--in", str(f), "--cut", "0"])
    assert code == 1 and "Inconclusive" in out


def test_bound(capsys):
    code, out, _ = run(capsys, ["bound", "--k", "2", "--json"])
    payload = json.loads(out)
    assert code == 0
    assert payload["kappa_bound"] == 10
    assert abs(payload["edge_coeff"] - 5.388) < 5e-4
    code, out, _ = run(capsys, ["bound", "--k", "2"])
    assert "5.388" in out and "10" in out
    code, _, err = run(capsys, ["bound", "--k", "0"])
    assert code == 2 and err


def test_op_checks(tmp_path, capsys):
    f = tmp_path / "op.json"
    cli.run(["gen", "dodecahedron", "--out", str(tmp_path / "d.json")])
    cli.run(["op", "--in", str(tmp_path / "d.json"), "--out", str(f)])
    for what in ("optimal", "crossings", "skeleton", "lemmas"):
        code, out, _ = run(capsys, ["check", what, "--in", str(f), "--json"])
        assert code == 0, what
        assert json.loads(out)["ok"]
    code, out, _ = run(capsys, ["check", "crossings", "--in", str(f), "--json"])
    assert json.loads(out)["max"] == 2 and json.loads(out)["uncrossed"] == 30


def test_stellate_command(tmp_path, capsys):
    cli.run(["gen", "cube", "--out", str(tmp_path / "c.json")])
    assert cli.run(["stellate", "--in", str(tmp_path / "c.json"), "--out", str(tmp_path / "s.json")]) == 0
    rec = json.loads((tmp_path / "s.json").read_text())
    assert rec["initial"] == list(range(8)) and rec["stellating"] == list(range(8, 14))
    code, _, _ = run(capsys, ["check", "four-connected", "--in", str(tmp_path / "c.json")])
    assert code == 0
    code, _, _ = run(capsys, ["check", "separating", "--in", str(tmp_path / "s.json")])
    assert code == 0


def test_ham_commands(tmp_path, capsys):
    f = tmp_path / "d.json"
    cli.run(["gen", "dodecahedron", "--out", str(f)])
    code, out, _ = run(capsys, ["ham", "cycle", "--in", str(f), "--json"])
    assert code == 0 and json.loads(out)["found"]
    code, out, _ = run(capsys, ["ham", "connected", "--in", str(f), "--threads", "1"])
    assert code == 1  # the dodecahedron is not Hamiltonian-connected
    code, out, _ = run(capsys, ["ham", "path", "--in", str(f), "--from", "0", "--to", "1"])
    assert code in (0, 1)
    code, _, err = run(capsys, ["ham", "path", "--in", str(f)])
    assert code == 2 and "--from" in err


def test_pipeline_command(tmp_path, capsys):
    f = tmp_path / "op.json"
    cli.run(["gen", "dodecahedron", "--out", str(tmp_path / "d.json")])
    cli.run(["op", "--in", str(tmp_path / "d.json"), "--out", str(f)])
    code, out, _ = run(capsys, ["pipeline", "--in", str(f), "--from", "2", "--to", "9", "--json"])
    w = json.loads(out)
    assert code == 0 and w["vertices"][0] == 2 and w["vertices"][-1] == 9 and len(w["vertices"]) == 20


def test_export_command(tmp_path, capsys):
    f = tmp_path / "d.json"
    cli.run(["gen", "dodecahedron", "--out", str(f)])
    code, out, _ = run(capsys, ["export", "--in", str(f), "--format", "edgelist"])
    assert code == 0 and out.splitlines()[0] == "20 30"
    code, _, err = run(capsys, ["export", "--in", str(f), "--format", "svg"])
    assert code == 2


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["gen", "dodecahedron", "--bogus"])
    assert exc.value.code == 2
    code, _, err = run(capsys, ["check", "optimal", "--in", str(tmp_path / "missing.json")])
    assert code == 2 and err
    code, _, err = run(capsys, ["gen", "prism"])
    assert code == 2 and "--s" in err
