import json
import subprocess
import sys

import pytest

from paratopo.cli import main

C3 = {"points": 3, "opens": [[], [0], [0, 1], [0, 1, 2]], "mode": "paraconsistent", "valuation": {"p": [1, 2]}}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(files, capsys):
    code, out, _ = run(capsys, "eval", files("c3.json", C3), "~p")
    assert code == 0 and out == "0 1 2\nglobal: true\n"
    code, out, _ = run(capsys, "eval", files("c3.json", C3), "[]p")
    assert out == "\nglobal: false\n"


def test_sat_exit_codes(files, capsys):
    path = files("c3.json", C3)
    assert run(capsys, "sat", path, "0", "p")[0] == 1
    assert run(capsys, "sat", path, "1", "p & ~p")[:2] == (0, "true\n")


def test_input_errors_exit_two(files, capsys):
    path = files("c3.json", C3)
    code, _, err = run(capsys, "eval", path, "p & & q")
    assert code == 2 and "column 5" in err
    bad = files("bad.json", {**C3, "valuation": {"p": [0]}})
    assert run(capsys, "eval", bad, "p")[0] == 2
    assert run(capsys, "eval", files("junk.json", "{nope"), "p")[0] == 2
    assert run(capsys, "eval", files("open.json", {**C3, "opens": [[], [0], [1]]}), "p")[0] == 2
    assert run(capsys, "eval", str(path) + ".missing", "p")[0] == 2
    assert run(capsys, "eval", path, "--", "-p")[0] == 2


def test_gluts_gaps_and_components(files, capsys):
    path = files("c3.json", C3)
    assert run(capsys, "gluts", path, "p")[1] == "1 2\n"
    gap_model = files("c3c.json", {**C3, "mode": "paracomplete", "valuation": {"p": [0]}})
    assert run(capsys, "gaps", gap_model, "p")[1] == "1 2\n"
    assert run(capsys, "connected", path)[:2] == (0, "connected: true\n")
    two = files("d2.json", {"points": 2, "opens": [[], [0], [1], [0, 1]], "mode": "classical", "valuation": {}})
    assert run(capsys, "connected", two)[0] == 1
    assert run(capsys, "components", two)[1] == "0\n1\n"


def test_maps(files, capsys):
    path = files("c3.json", C3)
    code, out, _ = run(capsys, "homeo", path, path, "--all")
    assert code == 0 and json.loads(out) == {"map": [0, 1, 2]}
    d3 = files("d3.json", {"points": 3, "opens": [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]],
                           "mode": "paraconsistent", "valuation": {}})
    assert run(capsys, "homeo", path, d3)[0] == 1
    code, out, _ = run(capsys, "homotopic", path, files("id.json", {"map": [0, 1, 2]}), files("k.json", {"map": [0, 0, 0]}))
    assert code == 0 and [json.loads(l)["map"] for l in out.splitlines()] == [[0, 1, 2], [0, 0, 0]]
    assert run(capsys, "bisim", path, path)[1].splitlines() == ["0 0", "1 1", "1 2", "2 1", "2 2"]


def test_kripke_round_trip(files, capsys):
    code, out, _ = run(capsys, "to-kripke", files("c3.json", C3))
    k = json.loads(out)
    assert k["edges"] == [[0, 0], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2]]
    code, out, _ = run(capsys, "from-kripke", files("k.json", k))
    assert json.loads(out) == C3


def test_props_and_replay(files, capsys):
    code, out, _ = run(capsys, "props", "--seed", "7", "--runs", "10", "--json")
    report = json.loads(out)
    assert code == (1 if any(c["verdict"] == "fail" for c in report["checks"]) else 0)
    failing = [c for c in report["checks"] if c["verdict"] == "fail"]
    if failing:
        code, out, _ = run(capsys, "replay", files("rec.json", failing[0]["counterexample"]))
        assert code == 1 and json.loads(out)["status"] == "fail"
    code, out, _ = run(capsys, "replay", files("rep.json", report))
    assert len(out.splitlines()) == len(failing)


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "paratopo", "sat", files("c3.json", C3), "2", "~p"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "true\n"
