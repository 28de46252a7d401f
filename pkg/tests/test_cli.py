import io
import subprocess
import sys

import numpy as np
import pytest

from weighmat.classify import classify_toeplitz_weighing
from weighmat.cli import run
from weighmat.core import TernaryMatrix, expand_circulant, format_matrix, gram_check, parse_matrix


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="m.txt"):
        p = tmp_path / name
        p.write_bytes(text.encode())
        return str(p)
    return _write


def test_expand_nw():
    code, out = call("expand", "--kind", "nw", "--row", "0++-")
    assert code == 0
    assert out == "0++-\n+0++\n-+0+\n--+0\n"


def test_expand_cw():
    code, out = call("expand", "--kind", "cw", "--row", "+++-")
    assert code == 0 and out == format_matrix(expand_circulant("+++-"))


def test_verify_identity(write):
    assert call("verify", write("+00\n0+0\n00+\n")) == (0, "W(3,1)\n")


def test_verify_failure(write):
    code, out = call("verify", write("++\n0+\n"))
    assert code == 1
    assert out == "defect (1,2) 1\ndefect (2,2) 1\n"


def test_classify(write):
    assert call("classify", write("++\n0+\n")) == (1, "NOT_WEIGHING\n")
    assert call("classify", write("+0\n0+\n")) == (0, "BOTH\n")
    assert call("classify", write("0++-\n+0++\n-+0+\n--+0\n")) == (0, "NEGACYCLIC\n")
    assert call("classify", write("+++-\n-+++\n+-++\n++-+\n")) == (0, "CIRCULANT\n")
    assert call("classify", write("0+0\n+00\n00+\n")) == (1, "NOT_TOEPLITZ\n")


@pytest.mark.parametrize("kind", ["cw", "nw"])
@pytest.mark.parametrize("row", ["+++-", "0++-", "+0-0", "++", "-", "0+0+-0"])
def test_roundtrip_expand_verify_classify(kind, row, write):
    _, text = call("expand", "--kind", kind, "--row", row)
    A = parse_matrix(text)
    path = write(text)
    rep = gram_check(A)
    code, out = call("verify", path)
    assert code == (0 if rep.is_weighing else 1)
    if rep.is_weighing:
        assert out == f"W({A.order},{rep.weight})\n"
        assert call("classify", path) == (0, classify_toeplitz_weighing(A).value + "\n")
    else:
        assert call("classify", path) == (1, "NOT_WEIGHING\n")


def test_search():
    code, out = call("search", "--kind", "nw", "--order", "4", "--weight", "3")
    assert code == 0
    assert "0++-" in out.split()
    assert len(out.split()) == 16
    assert call("search", "--kind", "cw", "--order", "4", "--weight", "4", "--count-only") == (0, "8\n")
    assert call("search", "--kind", "nw", "--order", "4", "--weight", "3", "--canonical") == (0, "--0-\n--+0\n")
    code, out = call("search", "--kind", "nw", "--order", "4", "--weight", "3", "--limit", "2")
    assert out == "--0-\n--+0\n"


def test_construct():
    code, out = call("construct", "conference", "-q", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# NW(4,3) first_row=--0-"
    A = parse_matrix(out)
    assert gram_check(A).weight == 3
    assert call("construct", "conference", "-q", "4")[0] == 1


def test_survey():
    code, out = call("survey", "--max-n", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tpredicted\tcw\tnw\tverdict\twitness"
    assert [l.split("\t")[4] for l in lines[1:]] == ["not_exists", "exists", "not_exists", "exists"]


@pytest.mark.parametrize("argv", [[], ["bogus"], ["expand", "--kind", "xw", "--row", "+"],
                                  ["expand", "--kind", "cw", "--row", "+x"],
                                  ["search", "--kind", "cw", "--order", "4", "--weight", "5"],
                                  ["search", "--kind", "cw", "--order", "0", "--weight", "1"],
                                  ["verify", "/nonexistent/file"], ["survey", "--max-n", "2"],
                                  ["construct"]])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and err.startswith("weighmat: error:")


def test_malformed_file_is_usage_error(write, capsys):
    assert call("verify", write("+0\n0\n"))[0] == 2
    assert call("classify", write(""))[0] == 2


def test_subprocess_output_is_deterministic():
    argv = [sys.executable, "-m", "weighmat", "search", "--kind", "nw", "--order", "10", "--weight", "9"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0].count(b"\n") == 40
