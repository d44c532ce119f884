import io
import json
import re
import shlex
from pathlib import Path

import pytest

from qtail.cli import EXIT_COMPUTE, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

README = Path(__file__).resolve().parent.parent / "README.md"


def readme_examples():
    """(command line, expected output) pairs from the console blocks of the README."""
    blocks = re.findall(r"```console\n(.*?)```", README.read_text(), re.S)
    cases = []
    for block in blocks:
        for chunk in re.split(r"^\$ ", block, flags=re.M)[1:]:
            cmd, _, output = chunk.partition("\n")
            cases.append((cmd, output))
    return cases


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf, err=buf)
    return code, buf.getvalue()


def test_readme_has_examples():
    assert len(readme_examples()) >= 10


@pytest.mark.parametrize("cmd,expected", readme_examples(), ids=[c for c, _ in readme_examples()])
def test_readme_golden(cmd, expected):
    argv = shlex.split(cmd)
    assert argv[0] == "qtail"
    code, text = run(argv[1:])
    assert text == expected
    assert code == (EXIT_USAGE if text.startswith("qtail: error") else EXIT_OK)


def test_compute_examples():
    code, text = run(["compute", "--torus", "2", "-3", "--color", "2", "--method", "statesum"])
    assert code == EXIT_OK and text.splitlines()[0] == "canonical: 1 - q - q^3"
    code, text = run(["compute", "--torus", "2", "-3", "--color", "1", "--method", "morton"])
    assert code == EXIT_OK and text.splitlines()[0] == "canonical: 1"
    code, text = run(["compute", "--braid", "3: 1 -2 1 -2", "--color", "3", "--method", "morton"])
    assert code == EXIT_USAGE


def test_compute_raw_and_fractional_shift():
    code, text = run(["compute", "--torus", "2", "-4", "--color", "2", "--raw"])
    assert code == EXIT_OK and "q^" in text
    code, text = run(["compute", "--torus", "2", "-4", "--color", "2"])
    assert code == EXIT_OK
    shift = text.splitlines()[2]
    assert shift.startswith("shift: ")


def test_compute_json_is_qpoly():
    code, text = run(["compute", "--torus", "2", "-3", "--color", "2", "--json"])
    obj = json.loads(text)
    assert set(obj) == {"variable", "terms"}


def test_tail_default_order_is_nmax():
    _, text = run(["tail", "--torus", "2", "-5", "--nmax", "6", "--json"])
    assert json.loads(text)["stabilized"]["order"] == 6


def test_tail_examples():
    code, text = run(["tail", "--torus", "2", "-5", "--nmax", "6"])
    assert code == EXIT_OK and "stabilized: 1 - q - q^4 + O(q^6)" in text
    code, text = run(["head", "--torus", "3", "4", "--nmax", "6", "--parity", "2", "--json"])
    odd, even = json.loads(text)
    assert odd["stabilized"] != even["stabilized"]


def test_tail_with_methods():
    _, a = run(["tail", "--torus", "2", "-7", "--nmax", "5", "--method", "morton"])
    _, b = run(["tail", "--torus", "2", "-7", "--nmax", "5", "--method", "skein"])
    _, c = run(["tail", "--torus", "2", "-7", "--nmax", "5"])
    assert a == b == c


def test_series_commands():
    for argv in (["series", "euler", "--order", "8"],
                 ["series", "andrews-gordon", "--k", "2", "--order", "8"],
                 ["series", "theta-product", "--a=-q^2", "--b=-q", "--order", "8"],
                 ["series", "false-theta", "--a=q^3", "--b=q", "--order", "8"],
                 ["series", "p200", "--form", "entry9", "--order", "8"]):
        code, text = run(argv)
        assert code == EXIT_OK and text.endswith("+ O(q^8)\n")
    _, a = run(["series", "euler", "--order", "12"])
    _, b = run(["series", "theta", "--a=-q^2", "--b=-q", "--order", "12"])
    assert a == b


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["compute", "--torus", "2", "-3"],
    ["compute", "--torus", "2", "-3", "--color", "2", "--bogus"],
    ["compute", "--torus", "2", "-3", "--braid", "2: 1", "--color", "2"],
    ["compute", "--braid", "2 1 1", "--color", "2"],
    ["compute", "--braid", "2: 1 5", "--color", "2"],
    ["compute", "--knot", "nope", "--color", "2"],
    ["compute", "--torus", "2", "-3", "--color", "0"],
    ["compute", "--torus", "2", "4", "--color", "2", "--method", "psi"],
    ["compute", "--torus", "3", "4", "--color", "2", "--method", "hikami"],
    ["tail", "--torus", "2", "-3", "--nmax", "0"],
    ["series", "theta", "--order", "5"],
    ["series", "theta", "--a=x", "--b=-q", "--order", "5"],
    ["check", "andrews-gordon", "--k", "1"],
    ["check", "fourp", "--p", "4"],
])
def test_usage_errors(argv):
    code, _ = run(argv)
    assert code == EXIT_USAGE


def test_computation_error_exit_code():
    code, text = run(["series", "theta", "--a=-q^-1", "--b=-q", "--order", "5"])
    assert code == EXIT_COMPUTE
    assert "DivergentSeries" in text


def test_check_failure_reports_mismatch(monkeypatch):
    from qtail import cli, series

    monkeypatch.setattr(series, "andrews_gordon_rhs", lambda k, n: series.euler_inf(n))
    code, text = run(["check", "andrews-gordon", "--k", "3", "--order", "10"])
    assert code == EXIT_FAIL
    assert re.match(r"FAIL andrews-gordon k=3: first mismatch at q\^\d+: -?\d+ != -?\d+", text)
    assert cli.EXIT_FAIL == 1


def test_check_fourp_p7():
    code, text = run(["check", "fourp", "--p", "7", "--order", "30"])
    assert code == EXIT_OK and text == "PASS fourp p=7 to order 30\n"


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv("QTAIL_THREADS", "zero")
    code, _ = run(["compute", "--torus", "2", "-3", "--color", "2"])
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["compute", "--braid", "3: 1 -2 1 -2", "--color", "4", "--json"],
    ["tail", "--knot", "9_20", "--nmax", "4", "--json"],
])
def test_output_independent_of_threads(monkeypatch, argv):
    monkeypatch.setenv("QTAIL_THREADS", "1")
    _, one = run(argv)
    monkeypatch.setenv("QTAIL_THREADS", "2")
    _, two = run(argv)
    assert one == two
    assert one.encode() == two.encode()


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "qtail", "check", "jacobi", "--order", "10"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("PASS jacobi")
