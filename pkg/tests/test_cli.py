import io
import json
import subprocess
import sys

import pytest

from multishift.cli import main

from golden import GREEDY_2_5, SHIFT2_ORDER3


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_generate_greedy():
    code, out, _ = run(["generate", "--alphabet", "2", "--shift", "2", "--order", "5",
                        "--algorithm", "greedy"])
    assert code == 0 and out.strip() == GREEDY_2_5


def test_generate_json():
    code, out, _ = run(["generate", "-m", "2", "-n", "4", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["algorithm"] == "multiple" and d["length"] == 34


def test_generate_large_alphabet_rendering():
    code, out, _ = run(["generate", "-a", "12", "-m", "1", "-n", "1"])
    assert out.strip() == ",".join(str(i) for i in range(12))


def test_verify_exit_codes():
    assert run(["verify", "--alphabet", "2", "--shift", "2", "--order", "3", SHIFT2_ORDER3])[0] == 0
    code, out, _ = run(["verify", "-m", "1", "-n", "2", "00000", "--format", "json"])
    d = json.loads(out)
    assert code == 1
    assert d["ok"] is False and d["length_ok"] is True
    assert d["missing_count"] == 3 and d["duplicated_count"] == 1


def test_verify_stdin(monkeypatch):
    code, out, _ = run(["verify", "-m", "2", "-n", "3", "-"], stdin=SHIFT2_ORDER3 + "\n",
                       monkeypatch=monkeypatch)
    assert code == 0 and "ok: true" in out


def test_count():
    code, out, _ = run(["count", "--alphabet", "2", "--shift", "2", "--order", "3"])
    assert code == 0 and out.strip() == "576"
    d = json.loads(run(["count", "-m", "2", "-n", "3", "--format", "json"])[1])
    assert d["exact"] == "576" and d["branch"] == "shift_at_most_order" and d["digits"] == 3
    d = json.loads(run(["count", "-m", "4", "-n", "30", "--format", "json"])[1])
    assert d["exact_available"] is False and "exact" not in d


def test_enumerate():
    code, out, _ = run(["enumerate", "-m", "1", "-n", "2", "--words"])
    assert out.split() == ["4", "00110", "01100", "10011", "11001"]
    code, out, _ = run(["enumerate", "-m", "2", "-n", "3", "--format", "json"])
    assert json.loads(out) == {"count": "576"}


def test_graph():
    code, out, _ = run(["graph", "-m", "2", "-n", "1"])
    assert json.loads(out) == {"vertices": 2, "arcs": 8, "degree": 4, "connected": True,
                               "arborescences": "2", "euler_tours": "72"}


def test_frobenius():
    code, out, _ = run(["frobenius", "-m", "2", "-n", "3", "--tau", "001", "--words"])
    d = json.loads(out)
    assert code == 0
    assert (d["l"], d["g"], d["excluded_count"], d["longest_length"]) == (5, 3, 1, 3)
    assert d["longest_words"] == ["001"]


def test_frobenius_dump():
    code, out, _ = run(["frobenius", "-m", "2", "-n", "3", "--tau", "001", "--dump-s"])
    lines = out.splitlines()
    assert lines[1:] == ["00", "01", "10", "11", "000", "010", "011", "100", "101", "110", "111"]


@pytest.mark.parametrize("argv, code", [
    (["generate", "-m", "2"], 2),
    (["bogus"], 2),
    (["generate", "-m", "0", "-n", "2"], 2),
    (["frobenius", "-m", "2", "-n", "4"], 2),
    (["verify", "-m", "1", "-n", "2", "0120"], 2),
    (["generate", "-m", "1", "-n", "40"], 3),
    (["enumerate", "-m", "2", "-n", "3", "--cap", "10"], 3),
])
def test_errors_are_json(argv, code):
    got, out, err = run(argv)
    assert got == code
    assert out == ""
    assert "error" in json.loads(err)
    assert err.count("\n") == 1


def test_pipe_generate_to_verify():
    for a, m, n in [(2, 2, 5), (3, 2, 3), (2, 3, 2), (2, 2, 4)]:
        flags = ["-a", str(a), "-m", str(m), "-n", str(n)]
        gen = subprocess.run([sys.executable, "-m", "multishift", "generate", *flags],
                             capture_output=True, text=True, check=True)
        ver = subprocess.run([sys.executable, "-m", "multishift", "verify", *flags, "-"],
                             input=gen.stdout, capture_output=True, text=True)
        assert ver.returncode == 0


def test_deterministic_output():
    a = run(["generate", "-a", "3", "-m", "2", "-n", "5"])[1]
    b = run(["generate", "-a", "3", "-m", "2", "-n", "5"])[1]
    assert a == b
