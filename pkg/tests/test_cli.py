"""Command line tests: byte-exact output pins, exit codes, formats.

Everything runs in process through cli.main so the pins really are pins;
one subprocess test confirms the installed console script works too.
"""

import contextlib
import csv
import io
import json
import shutil
import subprocess

import pytest

from gmlucas.cli import main

TABLE1_TEXT = """\
n  Gm_n
0  2+3i/2
1  3+2i
2  5+3i
3  9+5i
4  17+9i
5  33+17i
"""


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# --------------------------------------------------------------------- term

def test_term_number_text():
    assert run_cli("term", "m", "10") == (0, "1025\n", "")
    assert run_cli("term", "gm", "0") == (0, "2+3i/2\n", "")
    assert run_cli("term", "gm", "5") == (0, "33+17i\n", "")


def test_term_negative_indices():
    assert run_cli("term", "m", "-1") == (0, "3/2\n", "")
    assert run_cli("term", "m", "-3") == (0, "9/2^3\n", "")
    assert run_cli("term", "gm", "-2") == (0, "5/2^2+9i/2^3\n", "")
    assert run_cli("term", "mpoly", "-1") == (0, "(3/2)x\n", "")


def test_term_polynomials():
    assert run_cli("term", "mpoly", "2") == (0, "-4 + 9x^2\n", "")
    assert run_cli("term", "gmpoly", "2") == (0, "-4 + 3ix + 9x^2\n", "")
    assert run_cli("term", "gmpoly", "0") == (0, "2 + (3i/2)x\n", "")


def test_term_each_explicit_method():
    for method in ("recurrence", "binet", "explicit"):
        assert run_cli("term", "m", "7", "--method", method) == (0, "129\n", "")
    for method in ("recurrence", "binet", "explicit", "symmetric", "genfun",
                   "relation"):
        assert run_cli("term", "gm", "3", "--method", method) == (0, "9+5i\n", "")
    for method in ("recurrence", "explicit", "symmetric", "genfun"):
        assert run_cli("term", "mpoly", "3", "--method", method) == \
            (0, "-18x + 27x^3\n", "")


def test_term_json_preserves_big_integers():
    code, out, err = run_cli("term", "m", "64", "--format", "json")
    assert (code, err) == (0, "")
    doc = json.loads(out)
    assert doc == {
        "family": "m", "n": 64, "method": "auto",
        "value": {"re": {"num": "18446744073709551617", "exp2": 0},
                  "im": {"num": "0", "exp2": 0}},
    }


def test_term_json_polynomial_coefficients():
    code, out, _ = run_cli("term", "gmpoly", "0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == {"coeffs": [
        {"re": {"num": "2", "exp2": 0}, "im": {"num": "0", "exp2": 0}},
        {"re": {"num": "0", "exp2": 0}, "im": {"num": "3", "exp2": 1}},
    ]}


def test_term_csv():
    code, out, _ = run_cli("term", "gm", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["family", "n", "method", "value"], ["gm", "2", "auto", "5+3i"]]


def test_format_flag_position_is_flexible():
    before = run_cli("--format", "json", "term", "m", "3")
    after = run_cli("term", "m", "3", "--format", "json")
    assert before == after
    assert before[0] == 0


def test_term_invalid_method_is_usage_error():
    code, out, err = run_cli("term", "m", "0", "--method", "symmetric")
    assert (code, out) == (2, "")
    assert "not a route" in err
    code, _, err = run_cli("term", "mpoly", "1", "--method", "binet")
    assert code == 2
    assert "spot check" in err
    code, _, err = run_cli("term", "gm", "0", "--method", "relation")
    assert code == 2
    assert "n >= 1" in err
    code, _, err = run_cli("term", "gm", "-2", "--method", "recurrence")
    assert code == 2
    assert "negative" in err


def test_term_unknown_family_is_usage_error():
    code, _, _ = run_cli("term", "q", "3")
    assert code == 2


# -------------------------------------------------------------------- table

def test_table_one_is_byte_exact():
    assert run_cli("table", "1") == (0, TABLE1_TEXT, "")


def test_table_two_rows():
    code, out, _ = run_cli("table", "2", "--rows", "3")
    assert code == 0
    assert out.splitlines() == [
        "n  m_n(x)  |  Gm_n(x)",
        "0  2  |  2 + (3i/2)x",
        "1  3x  |  2i + 3x",
        "2  -4 + 9x^2  |  -4 + 3ix + 9x^2",
    ]


def test_table_json():
    code, out, _ = run_cli("table", "1", "--rows", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["table"] == 1
    assert doc["rows"][0]["gm"] == {"re": {"num": "2", "exp2": 0},
                                    "im": {"num": "3", "exp2": 1}}
    assert doc["rows"][1]["gm"] == {"re": {"num": "3", "exp2": 0},
                                    "im": {"num": "2", "exp2": 0}}


def test_table_csv_parses():
    code, out, _ = run_cli("table", "2", "--rows", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "m", "gm"], ["0", "2", "2 + (3i/2)x"],
                    ["1", "3x", "2i + 3x"]]


def test_table_rows_guard():
    code, _, err = run_cli("table", "1", "--rows", "0")
    assert code == 2
    assert "--rows" in err


def test_table_bad_which():
    assert run_cli("table", "3")[0] == 2


# ------------------------------------------------------------------- series

def test_series_number_family():
    assert run_cli("series", "gm", "3") == \
        (0, "[2+3i/2, 3+2i, 5+3i, 9+5i]\n", "")


def test_series_even_odd():
    assert run_cli("series", "gm-even", "2") == (0, "[2+3i/2, 5+3i, 17+9i]\n", "")
    assert run_cli("series", "gm-odd", "2") == (0, "[3+2i, 9+5i, 33+17i]\n", "")


def test_series_polynomials():
    assert run_cli("series", "mpoly", "2") == (0, "[2, 3x, -4 + 9x^2]\n", "")
    assert run_cli("series", "gmpoly", "2") == \
        (0, "[2 + (3i/2)x, 2i + 3x, -4 + 3ix + 9x^2]\n", "")


def test_series_kernel_with_weights():
    assert run_cli("series", "kernel", "5", "--d", "3", "--p", "-2") == \
        (0, "[1, 3, 7, 15, 31, 63]\n", "")
    assert run_cli("series", "kernel", "4", "--d", "3/2", "--p", "1") == \
        (0, "[1, 3/2, 13/2^2, 51/2^3, 205/2^4]\n", "")
    assert run_cli("series", "kernel", "3", "--d", "1/2^1", "--p", "0") == \
        (0, "[1, 1/2, 1/2^2, 1/2^3]\n", "")


def test_series_kernel_weight_guards():
    code, _, err = run_cli("series", "kernel", "3")
    assert code == 2
    assert "--d" in err
    code, _, err = run_cli("series", "gm", "3", "--d", "1")
    assert code == 2
    assert "kernel" in err
    code, _, err = run_cli("series", "kernel", "3", "--d", "x", "--p", "1")
    assert code == 2


def test_series_negative_order():
    code, _, err = run_cli("series", "gm", "-1")
    assert code == 2
    assert "non-negative" in err


def test_series_json_schema():
    code, out, _ = run_cli("series", "gm", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["series"] == "gm"
    assert doc["value"]["order"] == 1
    assert doc["value"]["coeffs"][0] == {"re": {"num": "2", "exp2": 0},
                                         "im": {"num": "3", "exp2": 1}}


def test_series_csv():
    code, out, _ = run_cli("series", "gm", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "coefficient"], ["0", "2+3i/2"], ["1", "3+2i"],
                    ["2", "5+3i"]]


# ------------------------------------------------------------------- verify

def test_verify_small_run_passes():
    code, out, err = run_cli("verify", "--max-n", "6", "--max-poly-n", "6")
    assert (code, err) == (0, "")
    lines = out.splitlines()
    assert lines[-1] == "overall: pass"
    assert len(lines) == 24
    assert all(line.startswith("[pass] ") for line in lines[:-1])


def test_verify_fault_exits_one():
    code, out, _ = run_cli("verify", "--max-n", "6", "--max-poly-n", "6",
                           "--inject-fault", "m1")
    assert code == 1
    assert "overall: FAIL" in out
    assert any(line.startswith("[FAIL] route-agreement/numbers")
               for line in out.splitlines())


def test_verify_json():
    code, out, _ = run_cli("verify", "--max-n", "6", "--max-poly-n", "6",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["overall"] is True
    assert len(doc["checks"]) == 23
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_bad_bounds_are_usage_errors():
    code, _, err = run_cli("verify", "--max-n", "3")
    assert code == 2
    assert "max_n" in err
    assert run_cli("verify", "--inject-fault", "bogus")[0] == 2


# ------------------------------------------------------------------ general

def test_help_exits_zero():
    assert run_cli("--help")[0] == 0
    assert run_cli("term", "--help")[0] == 0


def test_no_arguments_is_usage_error():
    assert run_cli()[0] == 2


def test_output_is_deterministic():
    for argv in (("term", "gm", "9"), ("table", "2", "--rows", "4"),
                 ("series", "gmpoly", "4", "--format", "json"),
                 ("verify", "--max-n", "6", "--max-poly-n", "6",
                  "--format", "csv")):
        assert run_cli(*argv) == run_cli(*argv)


def test_console_script_is_installed():
    exe = shutil.which("gmlucas")
    assert exe, "console script not on PATH"
    proc = subprocess.run([exe, "table", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == TABLE1_TEXT
