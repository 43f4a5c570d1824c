import json

import pytest

from semitree.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_counts(capsys):
    assert call(capsys, "enumerate", "--max-genus", "4") == (0, "1 1 2 4 7\n", "")


def test_enumerate_formats(capsys):
    code, out, _ = call(capsys, "enumerate", "-g", "3", "--format", "csv")
    assert out == "g,n_g\n0,1\n1,1\n2,2\n3,4\n"
    code, out, _ = call(capsys, "enumerate", "-g", "3", "--format", "json")
    assert json.loads(out) == {"counts": [1, 1, 2, 4]}


def test_enumerate_dump(capsys):
    code, out, _ = call(capsys, "enumerate", "-g", "2", "--dump")
    assert out == "0\t<1>\t1+\tS\n1\t<2,3>\t2+ 3+\tB\n2\t<3,4,5>\t3+ 4+ 5-\tB\n2\t<2,5>\t5+\tS\n"


def test_inspect(capsys):
    code, out, _ = call(capsys, "inspect", "<3,5,7>")
    assert code == 0
    assert "effective: 5+ 7-" in out
    assert "classes: pseudo_symmetric arf irreducible" in out
    code, out, _ = call(capsys, "inspect", "G:{1,3}", "--format", "json")
    rec = json.loads(out)
    assert rec["gens"] == [2, 5] and rec["classes"] == ["symmetric", "hyperelliptic", "arf", "irreducible"]


def test_inspect_bad_input(capsys):
    code, _, err = call(capsys, "inspect", "<4,6>")
    assert code == 1 and "coprime" in err
    code, _, err = call(capsys, "inspect", "<3,x>")
    assert code == 1


def test_chains(capsys):
    code, out, _ = call(capsys, "chains", "G:{1,2,3,4,5,7,8,9,11}", "<3,4>", "G:{1,2,3,4,5,6,7,9}")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0]["verdict"] == "finitely-many-chains" and recs[0]["count"] == 2
    assert recs[0]["witnesses"] == ["<3,5,7>", "<3,5>"]
    assert recs[1] == {"semigroup": "<3,4>", "d": 1, "verdict": "finite-subtree",
                       "max_genus": 3, "deepest": "<3,4>"}
    assert recs[2]["d"] == 8 and recs[2]["verdict"] == "infinitely-many-chains"


def test_chains_all(capsys):
    code, out, _ = call(capsys, "chains", "--all", "3")
    assert code == 0 and len(out.splitlines()) == 7


def test_chains_trivial_is_an_input_error(capsys):
    code, _, err = call(capsys, "chains", "<1>")
    assert code == 1


def test_tree_a(capsys):
    code, out, _ = call(capsys, "tree-a", "--levels", "4")
    lines = out.splitlines()
    assert lines[0] == "level,total,2F,label_0,label_1,label_2,label_3,label_4,label_5"
    assert lines[4] == "3,4,4,2,0,1,0,1,0"
    code, out, _ = call(capsys, "tree-a", "--levels", "6", "--l", "3", "--seed", "0=5,2,4")
    assert out.splitlines()[-1].split(",")[:3] == ["6", "16", "16"]
    code, _, _ = call(capsys, "tree-a", "--levels", "6", "--l", "3", "--seed", "2")
    assert code == 1


def test_stats_output_file(capsys, tmp_path):
    target = tmp_path / "s.csv"
    code, out, _ = call(capsys, "stats", "-g", "6", "--output", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("# strength convention: exclude-ordinary\n")
    code, out, _ = call(capsys, "stats", "-g", "6", "--format", "json", "--include-ordinary")
    assert json.loads(out)["convention"] == "include-ordinary"


def test_stats_workers_byte_identical(capsys):
    _, one, _ = call(capsys, "stats", "-g", "14", "--workers", "1")
    _, many, _ = call(capsys, "stats", "-g", "14", "--workers", "4")
    assert one == many


def test_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SEMITREE_WORKERS", "2")
    assert call(capsys, "enumerate", "-g", "4")[1] == "1 1 2 4 7\n"
    monkeypatch.setenv("SEMITREE_WORKERS", "zero")
    assert call(capsys, "enumerate", "-g", "4")[0] == 1


def test_verify_lemmas_passes(capsys):
    code, out, _ = call(capsys, "verify", "lemmas", "--max-genus", "12")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_verify_failure_exit_code(capsys):
    code, out, err = call(capsys, "verify", "histograms", "--max-genus", "8")
    assert code == 2 and "FAILED" in out and err


@pytest.mark.parametrize("argv", [[], ["enumerate"], ["enumerate", "-g", "-1"], ["verify", "nope"],
                                  ["stats", "-g", "3", "--workers", "0"], ["frobnicate"]])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 1 and "usage" in err
