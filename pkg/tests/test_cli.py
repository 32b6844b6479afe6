import json
import subprocess
import sys

import pytest

from liecoho.cli import run_command


def run(*argv, stdin=None):
    return run_command(list(argv), stdin_text=stdin)


def family(text):
    status, out = run("family", *text.split())
    assert status == 0
    return out


def pipe(spec, *argv):
    status, out = run(*argv, stdin=family(spec))
    return status, json.loads(out) if out.startswith("{") else out


class TestCommands:
    def test_family_l6_complete(self):
        status, doc = pipe("L n=6", "complete")
        assert status == 0
        assert doc["h0"] == 1 and doc["complete"] is False
        assert doc["central_witness"] == ["0", "0", "0", "0", "0", "1"]

    def test_rh_h2(self):
        status, doc = pipe("rh k=4 h=3 lambda=1,1", "cohomology", "--p", "2")
        assert status == 0 and doc["p"] == 2 and doc["dim_H"] >= 1

    def test_semidirect_then_complete(self):
        status, semi = run("semidirect", stdin=family("C n=8 lambda=1,1/2"))
        assert status == 0
        status, doc = run("complete", stdin=semi)
        doc = json.loads(doc)
        assert doc["complete"] is False and doc["h1"] == 3
        assert doc["derivation_witness"] == [[7, 2, "1"]]

    def test_family_semidirect_spec(self):
        status, doc = pipe("semidirect Q n=6", "complete")
        assert doc["complete"] is True

    def test_rank(self):
        assert pipe("A n=10 k=4 lambda=1,0", "rank")[1]["rank"] == 1
        assert pipe("Q n=8", "rank")[1]["rank"] == 2

    def test_rank_rejects_solvable(self):
        status, doc = pipe("semidirect L n=4", "rank")
        assert status == 1 and "nilpotent" in doc["error"]

    def test_derivations(self):
        status, doc = pipe("L n=4", "derivations")
        assert (doc["dim_der"], doc["dim_inner"]) == (7, 3)
        assert len(doc["derivations"]) == 7

    def test_char_seq(self):
        status, doc = pipe("L n=6", "char-seq")
        assert doc["sequence"] == [5, 1] and doc["filiform"] is True
        status, doc = pipe("L n=6", "char-seq", "--at", "0,1,0,0,0,0")
        assert doc["sequence"] == [2, 1, 1, 1, 1]
        status, doc = pipe("L n=6", "char-seq", "--at", "0,0,1,0,0,0")
        assert status == 1 and "derived" in doc["error"]

    def test_char_seq_bad_vector(self):
        assert run("char-seq", "--at", "1,0", stdin=family("L n=4"))[0] == 2

    def test_jacobi(self):
        assert pipe("B n=8 k=2 lambda=1,-2", "jacobi") == (0, {"jacobi": "pass", "violations": []})
        bad = json.dumps({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}},
                                                 {"i": 1, "j": 3, "coeffs": {"2": "1"}},
                                                 {"i": 2, "j": 3, "coeffs": {"2": "1"}}]})
        status, out = run("jacobi", stdin=bad)
        assert status == 1 and json.loads(out)["violations"][0]["triple"] == [1, 2, 3]
        status, out = run("complete", stdin=bad)
        assert status == 3 and "(1, 2, 3)" in out
        assert run("complete", "--skip-jacobi", stdin=bad)[0] == 0

    def test_normalize_lambda(self):
        a = family("A n=10 k=4 lambda=2,1")
        status, b = run("family", "A", "n=10", "k=4", "lambda=2,1", "--normalize-lambda")
        assert a != b and b == family("A n=10 k=4 lambda=1,1/2")

    def test_table_format(self):
        status, out = run("family", "L", "n=4", "--format", "table")
        assert out.splitlines() == ["dim: 4", "[Y1, Y2] = Y3", "[Y1, Y3] = Y4"]
        status, out = run("cohomology", "--p", "1", "--format", "table", stdin=family("L n=4"))
        assert "dim_H: 4" in out.splitlines()

    def test_files(self, tmp_path):
        src = tmp_path / "l5.json"
        dst = tmp_path / "out.json"
        src.write_text(family("L n=5"))
        status, out = run("cohomology", "--p", "0", "--input", str(src), "--output", str(dst))
        assert status == 0 and out == ""
        assert json.loads(dst.read_text())["dim_H"] == 1

    def test_missing_input_file(self, tmp_path):
        assert run("complete", "--input", str(tmp_path / "nope.json"))[0] == 3


class TestErrors:
    @pytest.mark.parametrize("argv", [[], ["bogus"], ["cohomology"], ["cohomology", "--p", "x"],
                                      ["complete", "--frobnicate"], ["reproduce-paper", "--jobs", "0"],
                                      ["family"], ["complete", "--format", "xml"]])
    def test_usage(self, argv):
        status, out = run(*argv, stdin=family("L n=4"))
        assert status == 2 and "usage" in out

    def test_negative_degree(self):
        assert run("cohomology", "--p", "-1", stdin=family("L n=4"))[0] == 2

    @pytest.mark.parametrize("stdin", ["", "{", '{"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {}}]}'])
    def test_parse(self, stdin):
        assert run("complete", stdin=stdin)[0] == 3

    @pytest.mark.parametrize("spec", ["Z n=4", "Q n=5", "A n=10 k=4 lambda=1", "rh k=4 h=2 lambda=1,1"])
    def test_bad_family(self, spec):
        assert run("family", *spec.split())[0] == 3

    def test_help(self):
        assert run("--help")[0] == 0


def test_console_pipeline():
    exe = [sys.executable, "-m", "liecoho.cli"]
    first = subprocess.run(exe + ["family", "L", "n=6"], capture_output=True, text=True, check=True)
    second = subprocess.run(exe + ["complete"], input=first.stdout, capture_output=True, text=True)
    assert second.returncode == 0
    assert json.loads(second.stdout)["h0"] == 1
    bad = subprocess.run(exe + ["nonsense"], capture_output=True, text=True)
    assert bad.returncode == 2 and "usage" in bad.stderr
