import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dnamatrix import cli, dna
from dnamatrix.formats import matrix_from_json, matrix_to_json
from dnamatrix.matrix import Matrix
from mutants import SLOTS, mutant_entry


def run(*argv):
    lines = []
    code = cli.main(list(argv), out=lines.append)
    return code, "\n".join(lines)


def test_build_latex_symbolic():
    code, text = run("build", "--n", "1", "--format", "latex")
    assert code == 0
    assert text == "\\begin{pmatrix}\n  a - 1 & b \\\\\n  b & a - 1\n\\end{pmatrix}"


def test_build_latex_unicode():
    _, text = run("build", "--n", "2", "--format", "latex", "--unicode")
    assert "\\alpha^{2} + \\beta^{2} - 1" in text


def test_build_json_evaluated():
    code, text = run("build", "--n", "2", "--t", "2", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert doc["order"] == 3 and doc["symbolic"] is False
    assert doc["point"] == {"alpha": "5/4", "beta": "3/4"}
    assert doc["entries"][0] == ["9/16", "15/16", "9/16"]
    m, point = matrix_from_json(text)
    assert m == dna.eval_matrix(dna.build_dna(2), dna.hyperbola_point(2))
    assert point == (Fraction(5, 4), Fraction(3, 4))


def test_build_order_one():
    assert run("build", "--n", "0") == (0, "0")


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("point", [[], ["--t", "2"], ["--t", "7/3"], ["--alpha", "3", "--beta", "2", "--off-hyperbola"]])
def test_json_roundtrip(n, point):
    code, text = run("build", "--n", str(n), "--format", "json", *point)
    assert code == 0
    doc = json.loads(text)
    m, pt = matrix_from_json(doc)
    assert matrix_to_json(m, pt) == doc
    sym = dna.build_dna(n)
    assert m == (sym if pt is None else dna.eval_matrix(sym, *pt))
    # no JSON numbers besides the order
    assert all(isinstance(x, str) for r in doc["entries"] for x in r)


def test_build_csv_and_text():
    _, csv_text = run("build", "--n", "1", "--t", "2", "--format", "csv")
    assert csv_text == "1/4,3/4\n3/4,1/4"
    _, text = run("build", "--n", "1")
    assert text.splitlines() == ["a - 1      b", "    b  a - 1"]


def test_build_fast_mode_same_output():
    assert run("build", "--n", "5", "--mode", "fast") == run("build", "--n", "5")


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--n", "2", "--t", "2", "--alpha", "5/4", "--beta", "3/4"],
        ["build", "--n", "-1"],
        ["build", "--n", "2", "--alpha", "2", "--beta", "1"],
        ["build", "--n", "2", "--alpha", "2"],
        ["det", "--n", "2"],
        ["table", "--max-degree", "3", "--t", "1"],
        ["table", "--max-degree", "0"],
        ["det", "--n", "2", "--t", "0"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["build"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["det", "--n", "2", "--t", "0.5"])
    assert exc.value.code == 2


def test_det_examples():
    assert run("det", "--n", "5", "--t", "2") == (0, "-47089/512")
    assert run("det", "--n", "2", "--t", "2") == (0, "0")
    code, text = run("det", "--n", "3", "--t", "2", "--strategy", "both")
    assert code == 0
    assert text.splitlines() == ["bareiss: 49/16", "centro: 49/16", "agree: true"]
    code, text = run("det", "--n", "3", "--t", "2", "--strategy", "both", "--format", "json")
    assert json.loads(text) == {
        "n": 3,
        "point": {"alpha": "5/4", "beta": "3/4"},
        "bareiss": "49/16",
        "centro": "49/16",
        "agree": True,
    }


def test_det_other_formats():
    _, text = run("det", "--n", "1", "--alpha", "5/4", "--beta", "3/4", "--format", "latex")
    assert text == "\\det A_{1} = -\\frac{1}{2}"
    _, text = run("det", "--n", "1", "--t", "2", "--format", "csv", "--strategy", "centro")
    assert text == "n,alpha,beta,centro\n1,5/4,3/4,-1/2"


def test_nullspace_examples():
    code, text = run("nullspace", "--n", "4", "--t", "2", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert doc["basis"] == [["1", "0", "-2", "0", "1"]]
    assert doc["matches_binomial"] is True
    assert doc["invariant_form"] == "a(x^2-y^2)^2"
    _, text = run("nullspace", "--n", "3", "--t", "2", "--format", "json")
    assert json.loads(text)["basis"] == []
    _, text = run("nullspace", "--n", "8", "--t", "2")
    assert "basis: (1, 0, -4, 0, 6, 0, -4, 0, 1)" in text
    assert "matches binomial: true" in text
    _, text = run("nullspace", "--n", "2", "--t", "2")
    assert "invariant polynomial: a(x^2-y^2)" in text.splitlines()


def test_table_t2():
    code, text = run("table", "--max-degree", "10", "--t", "2", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert [r["degree"] for r in doc["rows"]] == list(range(1, 11))
    assert [r["determinant"] for r in doc["rows"]] == [
        "-1/2", "0", "49/16", "0", "-47089/512", "0", "759498481/65536", "0",
        "-198321002857201/33554432", "0",
    ]
    for r in doc["rows"]:
        assert (r["null_vector"] is not None) == (r["determinant"] == "0")
    assert doc["rows"][9]["null_vector"] == ["1", "0", "-5", "0", "10", "0", "-10", "0", "5", "0", "-1"]
    assert doc["rows"][9]["invariant_form"] == "a(x^2-y^2)^5"


def test_table_small():
    _, text = run("table", "--max-degree", "2", "--t", "3", "--format", "json")
    rows = json.loads(text)["rows"]
    assert rows[1]["determinant"] == "0" and rows[1]["null_vector"] == ["1", "0", "-1"]
    _, text = run("table", "--max-degree", "1", "--t", "2", "--format", "json")
    assert json.loads(text)["rows"] == [
        {"degree": 1, "determinant": "-1/2", "null_vector": None, "invariant_form": None, "matches_binomial": None}
    ]
    for fmt in ("text", "csv", "latex"):
        code, text = run("table", "--max-degree", "4", "--format", fmt)
        assert code == 0 and "49/16" in text.replace("{49}{16}", "49/16")


def test_verify_passes():
    code, text = run("verify", "--max-n", "12")
    assert code == 0
    assert text.count("PASS") == 11 and "FAIL" not in text


def test_verify_degenerate_and_options():
    assert run("verify", "--max-n", "0")[0] == 0
    code, text = run("verify", "--max-n", "6", "--seed", "5", "--points", "9/4", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["passed"]
    assert len(doc["points"]) == 3
    assert run("verify", "--points", "1")[0] == 2


@pytest.mark.parametrize("slot, label", SLOTS)
@pytest.mark.parametrize("delta", [1, -1])
def test_verify_catches_mutants(monkeypatch, slot, label, delta):
    monkeypatch.setattr(dna, "entry_closed_form", mutant_entry(slot, delta))
    code, text = run("verify", "--max-n", "12")
    assert code == 1, label
    assert "FAIL" in text
    last = text.splitlines()[-1]
    assert last.startswith("first counterexample")
    assert "n=" in last and "i=" in last and "j=" in last


def test_unmutated_copy_passes(monkeypatch):
    # the mutant harness itself, with no shift, is the real formula
    monkeypatch.setattr(dna, "entry_closed_form", mutant_entry(None, 0))
    assert run("verify", "--max-n", "8")[0] == 0


def test_bench():
    code, text = run("bench", "--max-n", "5", "--repeat", "1", "--format", "json")
    recs = json.loads(text)
    assert code == 0 and len(recs) == 5 and all(r["agree"] for r in recs)
    assert run("bench", "--max-n", "3", "--repeat", "1")[0] == 0


def test_no_color_and_module_entry(tmp_path):
    env = {"NO_COLOR": "1", "PATH": ""}
    proc = subprocess.run(
        [sys.executable, "-m", "dnamatrix", "verify", "--max-n", "2"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert "\033[" not in proc.stdout


def test_poly_matrix_json_symbolic_roundtrip():
    m = dna.build_dna(6)
    again, pt = matrix_from_json(json.dumps(matrix_to_json(m)))
    assert again == m and pt is None
    assert isinstance(again, Matrix)
