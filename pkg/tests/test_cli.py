import csv
import io
import json
import subprocess
import sys

import pytest

from domcrit import families, graph6
from domcrit.cli import EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK, main
from domcrit.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def jsonl(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs_or_lines, name="in.g6"):
        lines = [x if isinstance(x, str) else graph6.encode(x) for x in graphs_or_lines]
        p = tmp_path / name
        p.write_text("\n".join(lines) + "\n")
        return str(p)
    return make


def test_gen_gk_graph6(capsys):
    code, out, _ = run(capsys, "gen", "gk", "--k", "3", "--format", "graph6")
    assert code == EXIT_OK
    assert graph6.decode(out.strip()) == families.make_Gk(3).graph


def test_gen_tl_json(capsys):
    code, out, _ = run(capsys, "gen", "tl", "--l", "6", "--format", "json")
    obj = json.loads(out)
    assert (obj["n"], obj["m"], obj["family"], obj["params"]) == (23, 112, "Tl", [6])
    assert obj["labels"]["0"] == "u"


def test_gen_net_edgelist(capsys):
    code, out, _ = run(capsys, "gen", "net", "--s", "3", "3", "3", "--format", "edgelist")
    lines = out.strip().splitlines()
    assert lines[0] == "# Net(3, 3, 3) n=12 m=12"
    assert sum(1 for x in lines if x.startswith("v ")) == 12
    assert sum(1 for x in lines if x.startswith("e ")) == 12


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "gk", "--k", "2")
    assert code == EXIT_INPUT and "out of range" in err
    with pytest.raises(SystemExit):
        main(["gen", "gk"])


def test_gen_draw(capsys, tmp_path):
    png = tmp_path / "fig5.png"
    code, _, _ = run(capsys, "gen", "fig5", "--draw", str(png))
    assert code == EXIT_OK and png.read_bytes()[:4] == b"\x89PNG"


def test_solve_json(capsys, g6file):
    path = g6file(families.make_Gk(3).graph, families.make_P333().graph, Graph.complete(1))
    code, out, _ = run(capsys, "solve", path, "--format", "json")
    rows = jsonl(out)
    assert code == EXIT_OK and len(rows) == 3
    assert (rows[0]["gamma"], rows[0]["kappa"], rows[0]["hamiltonian"]) == (3, 2, False)
    assert rows[1]["gamma_c"] == 5
    assert (rows[2]["gamma"], rows[2]["gamma_t"]) == (1, None)
    assert set(rows[0]) == {"record", "index", "graph6", "n", "m", "gamma", "gamma_c", "gamma_t", "alpha",
                            "kappa", "hamiltonian"}


def test_solve_table_undefined_and_decode_error(capsys, g6file):
    path = g6file("@", "A", "Bw")
    code, out, err = run(capsys, "solve", path, "--invariants", "gamma,gamma_t")
    assert code == EXIT_INPUT
    assert "record 1 (line 2)" in err
    lines = out.splitlines()
    assert lines[0].split() == ["index", "graph6", "n", "m", "gamma", "gamma_t", "error"]
    assert "undefined" in lines[1]


def test_solve_csv_witness(capsys, g6file):
    code, out, _ = run(capsys, "solve", g6file(Graph.cycle(6)), "--format", "csv", "--invariants", "gamma",
                       "--witness")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["gamma"] == "2" and json.loads(rows[0]["witness"]) == {"gamma": [0, 3]}


def test_check_critical(capsys, g6file):
    path = g6file(families.make_Gk(3).graph, Graph.complete(4))
    code, out, _ = run(capsys, "check-critical", path, "--kind", "gamma", "--k", "3", "--format", "json")
    rows = jsonl(out)
    assert [r["verdict"] for r in rows] == ["critical", "not-critical"]
    assert all(len(w) == 2 for w in rows[0]["witnesses"].values())


def test_check_critical_edge_mode(capsys, g6file):
    code, out, _ = run(capsys, "check-critical", g6file(Graph.cycle(4)), "--mode", "edge", "--k", "2",
                       "--format", "json")
    assert jsonl(out)[0]["verdict"] == "critical"
    code, out, _ = run(capsys, "check-critical", g6file(Graph.cycle(4)), "--mode", "edge", "--kind", "gamma_t",
                       "--format", "json")
    assert code == EXIT_INPUT and jsonl(out)[0]["record"] == "error"


def test_closure_formats(capsys, g6file):
    chorded = Graph.from_edges(5, Graph.cycle(5).edges() + [(0, 2), (0, 3)])
    path = g6file(chorded, families.make_Gk(3).graph)
    code, out, err = run(capsys, "closure", path, "--format", "json")
    rows = jsonl(out)
    assert code == EXIT_INPUT
    assert rows[0]["record"] == "graph" and rows[0]["m"] >= chorded.edge_count()
    assert rows[1]["record"] == "error" and "claw" in rows[1]["error"]
    code, out, _ = run(capsys, "closure", g6file(chorded))
    assert graph6.decode(out.splitlines()[0]).edge_count() == rows[0]["m"]


def test_classify(capsys, g6file):
    path = g6file(families.make_F2(3, 3, 2).graph, families.make_Gk(3).graph)
    code, out, _ = run(capsys, "classify", path, "--format", "json")
    rows = jsonl(out)
    assert [r["verdict"] for r in rows] == ["F2", "none"]
    assert rows[0]["spec"] == "F2(3, 3, 2)"


def test_cycle_lemmas(capsys, g6file):
    path = g6file(families.make_P333().graph, Graph.complete(4))
    code, out, _ = run(capsys, "cycle-lemmas", path, "--format", "json")
    rows = jsonl(out)
    assert code == EXIT_INPUT
    assert all(rows[0][x] == "pass" for x in ("L21", "L22", "Lh0", "Lh1", "Lh0n"))
    assert rows[1]["record"] == "error"


def test_scan_json_and_exit_codes(capsys, g6file):
    path = g6file(families.make_Jl(6).graph, "A", Graph.cycle(5))
    code, out, _ = run(capsys, "scan", path, "--theorem", "M,Ch-soundness", "--format", "json", "--rows", "all")
    rows = jsonl(out)
    assert code == EXIT_INPUT
    records = [r["record"] for r in rows]
    assert records.count("summary") == 2 and records[-2:] == ["summary", "summary"]
    graph_rows = [r for r in rows if r["record"] == "graph"]
    assert set(graph_rows[0]) == {"record", "index", "graph6", "n", "theorem", "status", "reason"}
    m = next(r for r in rows if r["record"] == "summary" and r["theorem"] == "M")
    # J6 and C5 are both 2-connected claw-free 3-gamma_c-vertex-critical
    assert m["hypothesis_hits"] == 2 and m["decode_errors"] == 1
    err = [r for r in rows if r["record"] == "error"]
    assert [(r["index"], r["status"]) for r in err] == [(1, "decode-error")]


def test_scan_all_theorems_table(capsys, g6file):
    code, out, _ = run(capsys, "scan", g6file(Graph.cycle(5), Graph.complete(5)), "--theorem", "all")
    assert code == EXIT_OK
    assert "exit 0" in out.splitlines()[-1]
    for t in ("A", "M", "W", "mike", "pumm", "Ch-soundness"):
        assert any(line.startswith(t + " ") for line in out.splitlines())


def test_scan_counterexample_exit(capsys, g6file, monkeypatch):
    from domcrit import scan, theorems

    monkeypatch.setattr(scan, "evaluate", lambda t, g, m: (theorems.FAILS, "planted"))
    code, out, _ = run(capsys, "scan", g6file(Graph.cycle(5), "A"), "--no-fastpath", "--format", "json")
    assert code == EXIT_COUNTEREXAMPLE


def test_scan_bad_config(capsys, g6file):
    code, _, err = run(capsys, "scan", g6file(Graph.cycle(5)), "--max-cut-size", "9")
    assert code == EXIT_INPUT and "max cut size" in err
    code, _, err = run(capsys, "scan", "/nonexistent/file.g6")
    assert code == EXIT_INPUT


def test_scan_figure(capsys, g6file, tmp_path):
    png = tmp_path / "scan.png"
    code, _, _ = run(capsys, "scan", g6file(Graph.cycle(5), Graph.complete(6)), "--theorem", "Ch-soundness",
                     "--figure", str(png))
    assert code == EXIT_OK and png.stat().st_size > 0


def test_module_entry_point_reads_stdin():
    line = graph6.encode(families.make_Gk(3).graph)
    proc = subprocess.run([sys.executable, "-m", "domcrit", "solve", "--invariants", "gamma", "--format", "json"],
                          input=line + "\n", capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["gamma"] == 3
