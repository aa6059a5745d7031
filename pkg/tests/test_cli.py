import json

import pytest

from paramcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


@pytest.mark.parametrize("graph,field,expected", [
    ("cycle:6", "3", {"length": 16, "dimension": 6, "mindist": 6}),
    ("kbip:2,2", "4", {"length": 9, "dimension": 4, "mindist": 4}),
    ("path:4", "5", {"length": 16, "dimension": 3, "mindist": 12}),
    ("cycle:4", "3^2", {"length": 64, "dimension": 4, "mindist": 49}),
])
def test_params(capsys, graph, field, expected):
    out = run_json(capsys, "params", "--graph", graph, "--field", field, "--d", "1")
    assert {k: out[k] for k in expected} == expected


def test_params_text_and_no_mindist(capsys):
    code, out = run(capsys, "params", "--graph", "cycle:4", "--field", "3", "--no-mindist")
    assert code == 0 and "length=4" in out and "mindist" not in out


def test_points(capsys):
    code, out = run(capsys, "points", "--graph", "cycle:4", "--field", "3")
    assert code == 0
    assert len(out.split()) == 4 and all(line.startswith("(1:") for line in out.split())
    doc = run_json(capsys, "points", "--graph", "cycle:4", "--field", "3")
    assert len(doc["points"]) == 4


def test_dim_and_export(capsys, tmp_path):
    target = tmp_path / "gen.json"
    doc = run_json(capsys, "dim", "--graph", "cycle:6", "--field", "3", "--d", "2",
                   "--export", str(target))
    assert doc == {"length": 16, "dimension": 16}
    exported = json.loads(target.read_text())
    assert len(exported["generator"]) == 16
    txt = tmp_path / "gen.txt"
    run(capsys, "dim", "--graph", "cycle:4", "--field", "3", "--export", str(txt))
    assert len(txt.read_text().strip().splitlines()) >= 4


def test_mindist_text(capsys):
    code, out = run(capsys, "mindist", "--graph", "kbip:2,2", "--field", "5")
    assert code == 0 and out.strip() == "[16, 4, 9]"


def test_regindex(capsys):
    assert run_json(capsys, "regindex", "--graph", "cycle:6", "--field", "3")["regularity_index"] == 2
    code, out = run(capsys, "regindex", "--graph", "cycle:6", "--field", "3", "--max-degree", "1")
    assert code == 2


def test_zeros(capsys):
    doc = run_json(capsys, "zeros", "--graph", "cycle:4", "--field", "3", "--form", "1,-1,0,0")
    assert doc["zeros_on_X"] == 2 and doc["z_count"] == 8
    assert doc["fiber"] == 4 and doc["consistent"] is True
    assert doc["pullback"] == "x1*x2 + 2*x2*x3"
    code, _ = run(capsys, "zeros", "--graph", "cycle:4", "--field", "3", "--form", "1,1")
    assert code == 2


def test_maxzeros(capsys):
    doc = run_json(capsys, "maxzeros", "--graph", "cycle:4", "--field", "3", "--class", "complete")
    assert doc["max"] == 3 and doc["count"] == 4
    doc = run_json(capsys, "maxzeros", "--graph", "cycle:4", "--field", "3", "--class", "incomplete",
                   "--samples", "1000")
    assert doc["max"] == 2 and [1, 2, 0, 0] in doc["sample_maximizers"]
    assert run_json(capsys, "maxzeros", "--graph", "cycle:6", "--field", "3")["max"] == 10


def test_predict(capsys):
    doc = run_json(capsys, "predict", "--k", "4", "--q", "3")
    assert doc["min_distance"] == 29 and doc["delta"] == -17


def test_verify_suite_and_replay(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out = run(capsys, "verify", "lemma-path", "--output", str(report))
    assert code == 0 and "fail" not in out.lower().replace("failed", "")
    code, out = run(capsys, "verify", "--replay", str(report))
    assert code == 0
    assert all(line.startswith("identical") for line in out.strip().splitlines())


def test_verify_zero_budget(capsys):
    code, out = run(capsys, "verify", "all", "--budget", "0", "--json")
    doc = json.loads(out)
    assert code == 0
    assert {r["status"] for r in doc["reports"]} == {"skipped"}
    code, _ = run(capsys, "verify", "length", "--budget", "0", "--strict")
    assert code == 1


def test_verify_parallel_order(capsys):
    code, out = run(capsys, "verify", "torus", "--workers", "2", "--json")
    ids = [r["id"] for r in json.loads(out)["reports"]]
    code2, out2 = run(capsys, "verify", "torus", "--json")
    assert code == code2 == 0
    assert ids == [r["id"] for r in json.loads(out2)["reports"]]


def test_errors(capsys):
    assert main(["params", "--graph", "cycle:4", "--field", "6"]) == 2
    assert main(["params", "--graph", "wheel:4", "--field", "3"]) == 2
    assert main(["params", "--graph", "cycle:4", "--field", "2"]) == 2
    assert main(["mindist", "--graph", "cycle:8", "--field", "5", "--budget", "100"]) == 3
    assert "error" in capsys.readouterr().err


def test_edge_file(capsys, tmp_path):
    f = tmp_path / "c4.edges"
    f.write_text("4 4\n1 2\n2 3\n3 4\n4 1\n")
    doc = run_json(capsys, "params", "--graph", f"@{f}", "--field", "3")
    assert (doc["length"], doc["dimension"], doc["mindist"]) == (4, 4, 1)
