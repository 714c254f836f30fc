import json

import pytest

from prismham import kernels
from prismham.cli import main


@pytest.fixture(autouse=True)
def restore_backend():
    prev = kernels.backend()
    yield
    kernels.use_backend(prev)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_analyze(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("Dhc\nC~\n")
    code, out, _ = run(capsys, "analyze", str(f))
    recs = records(out)
    assert code == 0
    assert recs[0]["toughness"] == "1/1" and recs[0]["chordal5"] == {"hole": [0, 1, 2, 3, 4]}
    assert recs[1]["toughness"] == "inf" and recs[1]["connectivity"] == 3 and recs[1]["chordal3"] is True


def test_named_input_and_edc(capsys):
    code, out, _ = run(capsys, "edc", "named:petersen")
    rec = records(out)[0]
    assert code == 0 and rec["status"] == "found" and rec["parity"] == "odd"
    code, out, _ = run(capsys, "edc", "named:K_4", "--prefer", "shortest-first")
    assert records(out)[0]["edc"] == "0 1 2"


def test_triangle(tmp_path, capsys):
    f = tmp_path / "c7.col"
    f.write_text("p edge 7 9\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 1\ne 1 4\ne 1 6\n")
    code, out, _ = run(capsys, "triangle", str(f), "--cycle", "0,1,2,3,4,5,6")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "cycle: 0 1 2 3 4 5 6"
    assert lines[1] == "apex=0 edge=(5,6) q=3 positions=(0,5,6)"
    assert lines[2] == "fallback: no"
    assert [ln.split("branch=")[1].split()[0] for ln in lines[3:]] == ["C2", "C2", "base"]


def test_triangle_errors(capsys):
    assert run(capsys, "triangle", "named:C_7", "--cycle", "0,1,2,3,4,5,6")[0] == 1
    assert run(capsys, "triangle", "named:C_6", "--cycle", "0,1,2,3,4,5")[0] == 2
    assert run(capsys, "triangle", "named:C_5", "--cycle", "0,x")[0] == 2


def test_prism_and_ham(capsys):
    code, out, _ = run(capsys, "prism", "named:star_3", "--ham")
    rec = records(out)[0]
    assert code == 0 and rec["n"] == 8 and rec["m"] == 10 and rec["prism_ham"] == "refuted"
    code, out, _ = run(capsys, "prism", "named:K_3", "--dot")
    assert out.startswith("graph prism {") and out.count("--") == 9
    code, out, _ = run(capsys, "ham", "named:petersen")
    assert records(out)[0]["status"] == "refuted"
    code, out, _ = run(capsys, "ham", "named:petersen", "--budget", "2")
    assert code == 3 and records(out)[0]["status"] == "unknown"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "named:K_4")
    rec = records(out)[0]
    assert code == 0 and rec["hypothesis"] and rec["conclusion"] and rec["toughness"] == "inf"
    code, _, err = run(capsys, "verify", "named:K_2,2,2")
    assert code == 0


def test_input_errors(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.g6"))
    assert code == 2 and "no such file" in err
    bad = tmp_path / "bad.g6"
    bad.write_text("Dh\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "offset" in err
    disc = tmp_path / "disc.g6"
    disc.write_text("C?\n")
    assert run(capsys, "verify", str(disc))[0] == 2
    assert run(capsys, "analyze", "named:Q_3")[0] == 2


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--family", "cycle_plus_chords:n=5,chords=0-2")
    assert code == 0 and out == "Dxc\n"
    code, out, _ = run(capsys, "gen", "--family", "named:C_4", "--out-format", "adjlist")
    assert out == "0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n"
    code, out, _ = run(capsys, "gen", "--family", "random_chordal:n=6", "--seed", "42", "--out-format", "dimacs")
    assert out.splitlines()[0] == "p edge 6 12"


def test_sweep_builtin(capsys, tmp_path):
    rec_file = tmp_path / "records.jsonl"
    code, out, _ = run(capsys, "sweep", "--max-n", "6", "--check", "all", "--records", str(rec_file))
    summary = records(out)[0]
    assert code == 0
    assert summary["total"] == 141 and summary["counterexamples"] == [] and summary["lemma2_failures"] == []
    assert len(rec_file.read_text().splitlines()) == 141


def test_sweep_corpus_file(tmp_path, capsys):
    f = tmp_path / "c.g6"
    f.write_text("Dhc\nnot-a-graph\nC~\n")
    assert run(capsys, "sweep", "--max-n", "5", "--corpus", str(f))[0] == 2
    code, out, _ = run(capsys, "sweep", "--max-n", "5", "--corpus", str(f), "--skip-bad")
    assert code == 0 and records(out)[0]["total"] == 2
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, out, _ = run(capsys, "sweep", "--max-n", "5", "--corpus", str(empty))
    assert code == 0 and records(out)[0]["total"] == 0


def test_explore(capsys):
    code, out, _ = run(capsys, "explore", "--max-n", "5")
    assert code == 0 and [r["n"] for r in records(out)] == [3, 4, 5]


def test_kernel_switch(capsys):
    code, out, _ = run(capsys, "--kernels", "python", "sweep", "--max-n", "4")
    assert code == 0 and records(out)[0]["kernels"] == "python"
